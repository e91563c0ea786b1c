#include <cmath>

#include "doctest.h"
#include "ginocchio/analysis.hpp"
#include "ginocchio/error.hpp"
#include "ginocchio/oracle.hpp"
#include "ginocchio/wavefield.hpp"

using namespace ginocchio;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const PotentialSpec kRow17({-0.6, 0.5}, 7.0, -1);
const PotentialSpec kRow11({4.67, 7.8366}, 1.74, 1);

// Direct power series for 2F1 at w = 1/2, summed in long double.
std::complex<long double> slow_2f1_half(Complex a, Complex b, Complex c) {
  using L = std::complex<long double>;
  L term = 1.0L;
  L sum = 1.0L;
  const L la(a.real(), a.imag());
  const L lb(b.real(), b.imag());
  const L lc(c.real(), c.imag());
  for (int n = 0; n < 400; ++n) {
    const long double nn = n;
    term *= (la + nn) * (lb + nn) / ((lc + nn) * (nn + 1.0L)) * 0.5L;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_SUITE("wavefield") {

TEST_CASE("hypergeometric factor is a polynomial of degree zero at the singularity") {
  const auto result = find_spectral_singularities(kRow17, EnergyGrid{});
  REQUIRE(result.certified.size() == 1);
  const auto& ss = result.certified.front();
  REQUIRE(ss.n == 0);
  const EnergyPoint e(ss.energy);
  const auto d = diagnostics(e, ss.refined_spec);
  const double l2 = 49.0;
  const Complex c(1.0, -e.k() / l2);
  for (double w : {0.1, 0.5, 0.9}) {
    CHECK(std::abs(hyp2f1(d.omega, d.delta, c, w) - 1.0) < 1e-10);
  }
}

TEST_CASE("psi at the origin") {
  const EnergyPoint e(30.0);
  for (const PotentialSpec& s : {kRow17, kRow11}) {
    const auto d = diagnostics(e, s);
    const double l2 = s.lambda() * s.lambda();
    const Complex c(1.0, -e.k() / l2);
    const auto series = slow_2f1_half(d.omega, d.delta, c);
    // z = 0: prefactor sqrt(lambda) and phase 4^{ik/(2 l^2)}.
    const Complex phase = std::exp(Complex(0.0, -0.5 * e.k() / l2) * std::log(0.25));
    const Complex expected = std::sqrt(s.lambda()) * phase * Complex(series.real(), series.imag());
    const Complex got = psi_exact(0.0, e, s).psi;
    CHECK(std::abs(got - expected) < 1e-11 * std::abs(expected));
  }
}

TEST_CASE("far right the solution is a pure outgoing wave") {
  const EnergyPoint e(40.0);
  const double L = resolve_oracle_config(e, kRow17).half_width;
  const double a = std::abs(psi_exact(0.7 * L, e, kRow17).psi);
  for (double x : {0.75 * L, 0.8 * L, 0.9 * L, 1.5 * L}) {
    CHECK(rel(std::abs(psi_exact(x, e, kRow17).psi), a) < 1e-9);
  }
}

TEST_CASE("Jost fit agrees with the closed form") {
  for (const PotentialSpec& s : {kRow17, kRow11}) {
    for (double en : {5.0, 60.0, 250.0}) {
      const EnergyPoint e(en);
      const auto j = jost_fit(e, s, default_fit_window(e, s));
      const auto a = amplitudes(e, s);
      CAPTURE(en);
      CHECK(rel(j.R(), a.R) < 1e-4);
      CHECK(rel(j.T(), a.T) < 1e-4);
    }
  }
}

TEST_CASE("incident coefficient vanishes at the singularity") {
  const auto result = find_spectral_singularities(kRow11, EnergyGrid{});
  REQUIRE(result.certified.size() == 1);
  const auto& ss = result.certified.front();
  const EnergyPoint e(ss.energy);
  const auto j = jost_fit(e, ss.refined_spec, default_fit_window(e, ss.refined_spec));
  CHECK(std::abs(j.A) / std::abs(j.C) < 1e-4);
}

TEST_CASE("Hermitian flux balance") {
  const PotentialSpec herm({-0.5, 2.0}, 6.0, 1);
  const EnergyPoint e(77.0);
  const auto j = jost_fit(e, herm, default_fit_window(e, herm));
  CHECK(std::abs(j.R() + j.T() - 1.0) < 1e-6);
}

TEST_CASE("fit input validation") {
  const EnergyPoint e(5.0);
  CHECK_THROWS_AS(jost_fit(e, kRow17, {2.0, 1.0}), Error);
  CHECK_THROWS_AS(jost_fit(e, kRow17, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(jost_fit(e, kRow17, {1.0, 2.0}, 2), Error);
  // A window inside the potential cannot be fitted with plane waves.
  try {
    jost_fit(e, kRow17, {0.01, 0.1});
    FAIL("expected PoorFit");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PoorFit);
  }
}

TEST_CASE("psi solves the Schroedinger equation") {
  struct Case {
    PotentialSpec spec;
    double energy;
  };
  const Case cases[] = {{kRow11, 20.0}, {kRow11, 150.0},
                        {kRow17, 10.0}, {kRow17, 90.0}};
  const double h = 1e-4;
  for (const auto& c : cases) {
    const EnergyPoint e(c.energy);
    for (int i = 0; i < 20; ++i) {
      const double x = -2.0 + 4.0 * i / 19.0;
      const Complex p0 = psi_exact(x, e, c.spec).psi;
      const Complex pp = psi_exact(x + h, e, c.spec).psi;
      const Complex pm = psi_exact(x - h, e, c.spec).psi;
      const Complex second = (pp - 2.0 * p0 + pm) / (h * h);
      const Complex rhs = (potential_value(x, c.spec) - c.energy) * p0;
      const double scale =
          std::abs(second) + std::abs(rhs) + c.energy * std::abs(p0);
      CAPTURE(x);
      CAPTURE(c.energy);
      CHECK(std::abs(second - rhs) < 1e-5 * scale);
    }
  }
}

}  // TEST_SUITE
