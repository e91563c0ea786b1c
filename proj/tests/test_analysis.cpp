#include <cmath>

#include "doctest.h"
#include "ginocchio/analysis.hpp"
#include "ginocchio/error.hpp"
#include "ginocchio/table1.hpp"

using namespace ginocchio;

namespace {

const PotentialSpec kRow11({4.67, 7.8366}, 1.74, 1);
const PotentialSpec kRow17({-0.6, 0.5}, 7.0, -1);
const PotentialSpec kRow2({1.0, -4.5}, 4.123, -1);

SsCandidate only_candidate(const PotentialSpec& s, const EnergyGrid& g) {
  const auto c = scan_ss_candidates(s, g);
  REQUIRE(c.size() == 1);
  return c.front();
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("energy grid") {
  const EnergyGrid g{1.0, 100.0, 3, Spacing::Log};
  const auto es = g.energies();
  CHECK(es[0] == 1.0);
  CHECK(es[1] == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(es[2] == 100.0);
  const auto lin = EnergyGrid{1.0, 3.0, 3, Spacing::Linear}.energies();
  CHECK(lin[1] == 2.0);
  CHECK_THROWS_AS((EnergyGrid{0.0, 1.0, 10}).validate(), Error);
  CHECK_THROWS_AS((EnergyGrid{2.0, 1.0, 10}).validate(), Error);
  CHECK_THROWS_AS((EnergyGrid{1.0, 2.0, 1}).validate(), Error);
}

TEST_CASE("free parameter names round trip") {
  for (auto p : {FreeParameter::Lambda, FreeParameter::ReNu,
                 FreeParameter::ImNu, FreeParameter::Nu}) {
    CHECK(parse_free_parameter(to_string(p)) == p);
  }
  CHECK_FALSE(parse_free_parameter("mu").has_value());
}

TEST_CASE("scan finds the row 11 candidate") {
  const auto c = only_candidate(kRow11, EnergyGrid{1.0, 400.0, 2000});
  CHECK(c.nearest_n == -9);
  CHECK(std::abs(c.energy - 166.720) / 166.720 < 0.01);
  CHECK(c.f_distance < 0.05);
  CHECK(std::abs(diagnostics(EnergyPoint(c.energy), kRow11).G()) < 1e-10);
}

TEST_CASE("scan finds nothing for an absorptive family member") {
  const PotentialSpec s({2.0, -3.0}, 1.0, 1);
  for (const auto& c : scan_ss_candidates(s, EnergyGrid{1.0, 1000.0, 2000})) {
    CHECK(c.f_distance >= 0.5);
  }
}

TEST_CASE("scan finds nothing for real nu") {
  for (double nu : {0.7, 2.0, -3.3}) {
    for (int sign : {-1, 1}) {
      CHECK(scan_ss_candidates(PotentialSpec(nu, 2.0, sign), EnergyGrid{})
                .empty());
    }
  }
}

TEST_CASE("refine with lambda free reproduces row 17") {
  const auto seed = only_candidate(kRow17, EnergyGrid{});
  const auto ss = refine_ss(kRow17, FreeParameter::Lambda, seed);
  CHECK(ss.converged);
  CHECK(ss.n == 0);
  CHECK(std::abs(ss.energy - 24.01) / 24.01 < 0.005);
  CHECK(std::abs(ss.refined_spec.lambda() - 7.0) / 7.0 < 0.01);
  CHECK(ss.refined_spec.nu() == kRow17.nu());
}

TEST_CASE("refine with lambda free reproduces row 2") {
  const auto seed = only_candidate(kRow2, EnergyGrid{});
  CHECK(seed.nearest_n == -4);
  const auto ss = refine_ss(kRow2, FreeParameter::Lambda, seed);
  CHECK(ss.converged);
  CHECK(ss.residual < kCertifyTolerance);
  CHECK(std::abs(ss.energy - 650.126) / 650.126 < 0.005);
}

TEST_CASE("refine with one component of nu free") {
  const auto seed = only_candidate(kRow11, EnergyGrid{});
  for (auto free : {FreeParameter::ReNu, FreeParameter::ImNu}) {
    const auto ss = refine_ss(kRow11, free, seed);
    CHECK(ss.converged);
    CHECK(ss.n == -9);
    CHECK(std::abs(ss.energy - 166.720) / 166.720 < 0.01);
    const auto d = diagnostics(EnergyPoint(ss.energy), ss.refined_spec);
    CHECK(std::abs(d.F() + 9.0) < 1e-9);
    CHECK(std::abs(d.G()) < 1e-9);
  }
}

TEST_CASE("refine rejects a seed far from an integer") {
  SsCandidate bad;
  bad.energy = 10.0;
  bad.nearest_n = -1;
  bad.f_distance = 0.5;
  CHECK_THROWS_AS(refine_ss(kRow17, FreeParameter::Lambda, bad), Error);
}

TEST_CASE("certified singularities diverge on both flanks") {
  for (const auto& r : table_rows()) {
    if (r.no_ss_family) continue;
    CAPTURE(r.id);
    const auto result = find_spectral_singularities(r.spec(), EnergyGrid{1e-3, 1000.0, 2000});
    REQUIRE(result.certified.size() == 1);
    const auto d = check_divergence(result.certified.front());
    CHECK(d.R_below > 1e4);
    CHECK(d.T_below > 1e4);
    CHECK(d.R_above > 1e4);
    CHECK(d.T_above > 1e4);
    CHECK(d.sentinel_at_energy);
  }
}

TEST_CASE("second singularity exclusion") {
  const EnergyGrid g{1.0, 1000.0, 2000};
  const auto v11 = exclude_second_ss(kRow11, g);
  CHECK(v11.excluded);
  CHECK(v11.min_H > 0.0);
  CHECK(exclude_second_ss(kRow17, g).excluded);
  // With the principal root Re(omega) >= 1/2 always; the other branch gives
  // H = -Re(mu), negative once the energy term dominates for lambda > 1.
  ScatteringOptions flipped;
  flipped.branch = MuBranch::Flipped;
  const PotentialSpec s({0.2, 0.3}, 2.0, 1);
  const auto v = exclude_second_ss(s, g, 1, flipped);
  CHECK_FALSE(v.excluded);
  CHECK(v.witness_energy > 0.0);
  CHECK(diagnostics(EnergyPoint(v.witness_energy), s, flipped).H() <= 0.0);
  CHECK(exclude_second_ss(s, g).excluded);
}

TEST_CASE("Hermitian barrier minima are reflectionless") {
  const PotentialSpec herm({-0.5, 2.0}, 6.0, -1);
  const auto report = find_minima(herm, EnergyGrid{135.5, 5 * 135.5, 2000});
  CHECK(report.minima.size() >= 3);
  for (const auto& m : report.minima) {
    CAPTURE(m.energy);
    CHECK(m.reflectionless);
    CHECK(m.R < 1e-9);
  }
  for (std::size_t i = 1; i < report.minima.size(); ++i) {
    CHECK(report.minima[i].energy > report.minima[i - 1].energy);
  }
  // Transmission resonances of this barrier sit at ((m + 1/2)^2 + 4) 36^2/35.
  CHECK(report.minima[0].energy ==
        doctest::Approx((0.25 + 4.0) * 1296.0 / 35.0).epsilon(1e-6));
}

TEST_CASE("emissive barrier: minima with R > 0 and a singularity") {
  const PotentialSpec s({-0.6, 2.0}, 6.0, -1);
  const auto report = find_minima(s, EnergyGrid{135.5, 1000.0, 2000});
  CHECK(report.minima.size() >= 3);
  for (const auto& m : report.minima) CHECK(m.R > 0.0);
  const auto result = find_spectral_singularities(s, EnergyGrid{});
  REQUIRE(result.certified.size() == 1);
  CHECK(std::abs(result.certified.front().energy - 152.723) / 152.723 < 0.01);
}

TEST_CASE("vanishing potential has no isolated minima") {
  const auto report = find_minima(PotentialSpec(0.0, 1.0, 1), EnergyGrid{});
  CHECK(report.minima.empty());
}

TEST_CASE("row 17: one singularity and deep minima above it") {
  const auto result = find_spectral_singularities(kRow17, EnergyGrid{});
  REQUIRE(result.certified.size() == 1);
  const double e_star = result.certified.front().energy;
  CHECK(std::abs(e_star - 24.01) < 0.01);
  const auto report = find_minima(kRow17, EnergyGrid{1.0, 1000.0, 4000});
  int deep = 0;
  for (const auto& m : report.minima) {
    if (m.energy > e_star && m.R < 0.05) ++deep;
  }
  CHECK(deep >= 2);
}

TEST_CASE("unitarity crossings") {
  const EnergyGrid g{1.0, 1000.0, 2000};
  const auto herm = unitarity_crossings(PotentialSpec({-0.5, 2.0}, 6.0, -1), g);
  CHECK(herm.everywhere_unitary);
  CHECK(herm.energies.empty());

  // Im V is Im(sign lambda^2 nu(nu+1)) (1 - y^2), one sign everywhere, so
  // R + T - 1 keeps that sign and never crosses zero.
  const PotentialSpec specs[] = {kRow17, kRow11, kRow2,
                                 PotentialSpec({2.0, -3.0}, 2.0, 1),
                                 PotentialSpec({-0.6, -2.0}, 6.0, 1)};
  for (const auto& s : specs) {
    CAPTURE(s.describe());
    const auto c = unitarity_crossings(s, g);
    CHECK_FALSE(c.everywhere_unitary);
    CHECK(c.energies.empty());
    const double im_v0 = potential_at_origin(s).imag();
    for (double e : EnergyGrid{1.0, 1000.0, 50}.energies()) {
      const double u = amplitudes(EnergyPoint(e), s).U;
      if (std::isinf(u)) continue;
      CHECK((u - 1.0) * im_v0 > 0.0);
    }
  }
}

TEST_CASE("search is independent of the thread count") {
  SsSearchOptions one;
  SsSearchOptions four;
  four.threads = 4;
  const auto a = find_spectral_singularities(kRow11, EnergyGrid{}, one);
  const auto b = find_spectral_singularities(kRow11, EnergyGrid{}, four);
  REQUIRE(a.certified.size() == b.certified.size());
  CHECK(a.certified[0].energy == b.certified[0].energy);
  CHECK(a.certified[0].refined_spec == b.certified[0].refined_spec);
}

}  // TEST_SUITE
