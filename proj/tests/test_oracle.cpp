#include <cmath>

#include "doctest.h"
#include "ginocchio/analysis.hpp"
#include "ginocchio/error.hpp"
#include "ginocchio/oracle.hpp"

using namespace ginocchio;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const PotentialSpec kRow17({-0.6, 0.5}, 7.0, -1);
const PotentialSpec kRow11({4.67, 7.8366}, 1.74, 1);

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("automatic configuration") {
  const auto cfg = resolve_oracle_config(EnergyPoint(100.0), kRow17);
  CHECK(cfg.half_width >= 30.0 / 49.0);
  CHECK(cfg.step > 0.0);
  CHECK(cfg.step * 10.0 < 0.5);
  CHECK(std::abs(potential_value(cfg.half_width, kRow17)) < cfg.tail_tolerance);
}

TEST_CASE("Hermitian case conserves flux") {
  const PotentialSpec herm({-0.5, 2.0}, 6.0, -1);
  for (double e : {10.0, 150.0, 400.0}) {
    const auto o = integrate_rt(EnergyPoint(e), herm);
    CAPTURE(e);
    CHECK(std::abs(o.U - 1.0) < 1e-8);
  }
}

TEST_CASE("agreement with the closed form") {
  for (const PotentialSpec& s : {kRow17, kRow11}) {
    for (double e : {3.0, 50.0, 300.0}) {
      const auto a = amplitudes(EnergyPoint(e), s);
      const auto o = integrate_rt(EnergyPoint(e), s);
      CAPTURE(e);
      CHECK(rel(o.R, a.R) < 1e-6);
      CHECK(rel(o.T, a.T) < 1e-6);
      CHECK(o.step_estimate < 1e-6 * std::max(1.0, a.R + a.T));
      CHECK_FALSE(o.ill_conditioned);
    }
  }
}

TEST_CASE("free particle") {
  const PotentialFunction zero = [](double) { return Complex(0.0, 0.0); };
  const auto o = integrate_potential(zero, EnergyPoint(4.0), 5.0, 0.01,
                                     Incidence::FromLeft);
  CHECK(o.R < 1e-24);
  // Only the RK4 phase error remains, about L k^5 h^4 / 120.
  CHECK(std::abs(o.T - 1.0) < 1e-9);
  CHECK(std::abs(std::abs(o.A) - 1.0) < 1e-9);
  CHECK(std::abs(o.A - Complex(1.0, 0.0)) < 1e-8);
}

TEST_CASE("tails that have not decayed are rejected") {
  OracleConfig cfg;
  cfg.half_width = 0.05;
  CHECK(code_of([&] { integrate_rt(EnergyPoint(10.0), kRow17, cfg); }) ==
        ErrorCode::TailNotDecayed);
}

TEST_CASE("under-resolved steps are rejected") {
  OracleConfig cfg;
  cfg.step = 0.1;
  CHECK(code_of([&] { integrate_rt(EnergyPoint(400.0), kRow17, cfg); }) ==
        ErrorCode::Resolution);
  CHECK(code_of([&] {
          integrate_potential([](double) { return Complex(); }, EnergyPoint(1.0),
                              0.0, 0.1, Incidence::FromLeft);
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("incident amplitude collapses at a singularity") {
  const auto result = find_spectral_singularities(kRow17, EnergyGrid{});
  REQUIRE(result.certified.size() == 1);
  const auto& ss = result.certified.front();
  const auto at = integrate_rt(EnergyPoint(ss.energy), ss.refined_spec);
  const auto away = integrate_rt(EnergyPoint(2.0 * ss.energy), ss.refined_spec);
  CHECK(std::abs(at.A) < 1e-6 * std::abs(away.A));
  CHECK(at.R > 1e10);
}

TEST_CASE("fourth-order convergence") {
  const EnergyPoint e(100.0);
  const auto exact = amplitudes(e, kRow17);
  const auto cfg = resolve_oracle_config(e, kRow17);
  const PotentialFunction V = [](double x) { return potential_value(x, kRow17); };
  // Steps well below the 1/lambda^2 structure of the potential.
  const double h = 0.005;
  const auto coarse = integrate_potential(V, e, cfg.half_width, 2.0 * h,
                                          Incidence::FromLeft);
  const auto fine = integrate_potential(V, e, cfg.half_width, h,
                                        Incidence::FromLeft);
  const double err_coarse = std::abs(coarse.T - exact.T);
  const double err_fine = std::abs(fine.T - exact.T);
  REQUIRE(err_fine > 0.0);
  const double ratio = err_coarse / err_fine;
  CAPTURE(ratio);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("handedness") {
  // Symmetric potentials reflect equally from both sides.
  const auto lr = left_right_check(EnergyPoint(60.0), kRow17);
  CHECK(rel(lr.R_right, lr.R_left) < 1e-8);

  // An asymmetric complex profile separates the two incidences, while T is
  // the same from both sides.
  const PotentialFunction V = [](double x) {
    return Complex(std::exp(-(x - 1.0) * (x - 1.0)),
                   std::exp(-(x + 1.0) * (x + 1.0)));
  };
  const EnergyPoint e(0.8);
  const auto left = integrate_potential(V, e, 9.0, 0.005, Incidence::FromLeft);
  const auto right = integrate_potential(V, e, 9.0, 0.005, Incidence::FromRight);
  CHECK(rel(left.R, right.R) > 0.05);
  CHECK(rel(left.T, right.T) < 1e-8);

  // Mirroring the profile swaps the two reflectivities.
  const PotentialFunction mirrored = [&](double x) { return V(-x); };
  const auto m = integrate_potential(mirrored, e, 9.0, 0.005,
                                     Incidence::FromLeft);
  CHECK(rel(m.R, right.R) < 1e-8);
}

}  // TEST_SUITE
