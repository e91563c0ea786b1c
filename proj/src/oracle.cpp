#include "ginocchio/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ginocchio/error.hpp"

namespace ginocchio {

namespace {

constexpr double kResolutionLimit = 0.5;
constexpr double kIllConditioned = 1e-12;

struct Coefficients {
  Complex incident;
  Complex reflected;
};

// One RK4 sweep; returns the plane-wave split at the far edge.
Coefficients sweep(const PotentialFunction& V, double energy, double k,
                   double half_width, int steps, Incidence incidence) {
  const Complex ik(0.0, k);
  // FromLeft starts at +L and walks left; FromRight mirrors it.
  const double dir = incidence == Incidence::FromLeft ? -1.0 : 1.0;
  const double h = dir * 2.0 * half_width / steps;
  double x = -dir * half_width;
  const double wave_sign = -dir;  // e^{+ikx} leaving to the right, e^{-ikx} to the left
  Complex psi = std::exp(wave_sign * ik * x);
  Complex dpsi = wave_sign * ik * psi;

  auto accel = [&](double xx, Complex p) { return (V(xx) - energy) * p; };
  for (int s = 0; s < steps; ++s) {
    const Complex k1p = dpsi;
    const Complex k1d = accel(x, psi);
    const Complex k2p = dpsi + 0.5 * h * k1d;
    const Complex k2d = accel(x + 0.5 * h, psi + 0.5 * h * k1p);
    const Complex k3p = dpsi + 0.5 * h * k2d;
    const Complex k3d = accel(x + 0.5 * h, psi + 0.5 * h * k2p);
    const Complex k4p = dpsi + h * k3d;
    const Complex k4d = accel(x + h, psi + h * k3p);
    psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    x = -dir * half_width + (s + 1) * h;
  }
  // psi = a e^{ikx} + b e^{-ikx} at the far edge.
  const Complex a = 0.5 * std::exp(-ik * x) * (psi + dpsi / ik);
  const Complex b = 0.5 * std::exp(ik * x) * (psi - dpsi / ik);
  if (incidence == Incidence::FromLeft) return {a, b};
  return {b, a};
}

OracleResult finish(const Coefficients& fine, const Coefficients& coarse) {
  OracleResult out;
  out.A = fine.incident;
  out.B = fine.reflected;
  const double a2 = std::norm(fine.incident);
  out.R = std::norm(fine.reflected) / a2;
  out.T = 1.0 / a2;
  out.U = out.R + out.T;
  const double ca2 = std::norm(coarse.incident);
  const double Rc = std::norm(coarse.reflected) / ca2;
  const double Tc = 1.0 / ca2;
  out.step_estimate =
      std::max(std::abs(out.R - Rc), std::abs(out.T - Tc)) / 15.0;
  out.ill_conditioned = std::abs(fine.incident) < kIllConditioned;
  return out;
}

}  // namespace

OracleConfig resolve_oracle_config(const EnergyPoint& e,
                                   const PotentialSpec& spec,
                                   const OracleConfig& config) {
  OracleConfig out = config;
  const double l2 = spec.lambda() * spec.lambda();
  double v_max = 0.0;
  for (double x : profile_grid(spec.lambda(), 401)) {
    v_max = std::max(v_max, std::abs(potential_value(x, spec)));
  }
  if (out.tail_tolerance <= 0.0) {
    out.tail_tolerance = 1e-10 * std::max(1.0, std::abs(potential_at_origin(spec)));
  }
  if (out.half_width <= 0.0) {
    double L = 30.0 / l2;
    for (int i = 0; i < 200 && std::abs(potential_value(L, spec)) >=
                                   out.tail_tolerance;
         ++i) {
      L *= 1.25;
    }
    out.half_width = L;
  }
  if (out.step <= 0.0) {
    const double q = std::max({std::sqrt(v_max + e.energy()), 2.0 * l2, 1.0});
    const double h = 0.02 / q;
    const int steps = static_cast<int>(std::ceil(2.0 * out.half_width / h));
    out.step = 2.0 * out.half_width / steps;
  }
  return out;
}

OracleResult integrate_potential(const PotentialFunction& V,
                                 const EnergyPoint& e, double half_width,
                                 double step, Incidence incidence) {
  if (!(half_width > 0.0) || !(step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "oracle: half width and step must be > 0");
  }
  if (step * e.k() >= kResolutionLimit) {
    std::ostringstream msg;
    msg << "oracle: h k = " << step * e.k() << " >= 0.5 at E = " << e.energy();
    throw Error(ErrorCode::Resolution, msg.str());
  }
  const int steps =
      std::max(2, static_cast<int>(std::lround(2.0 * half_width / step)));
  const auto coarse = sweep(V, e.energy(), e.k(), half_width, steps, incidence);
  const auto fine =
      sweep(V, e.energy(), e.k(), half_width, 2 * steps, incidence);
  OracleResult out = finish(fine, coarse);
  out.half_width = half_width;
  out.step = 2.0 * half_width / steps;
  out.tail_residual =
      std::max(std::abs(V(half_width)), std::abs(V(-half_width)));
  return out;
}

OracleResult integrate_rt(const EnergyPoint& e, const PotentialSpec& spec,
                          const OracleConfig& config) {
  const OracleConfig cfg = resolve_oracle_config(e, spec, config);
  const double tail = std::max(std::abs(potential_value(cfg.half_width, spec)),
                               std::abs(potential_value(-cfg.half_width, spec)));
  if (tail >= cfg.tail_tolerance) {
    std::ostringstream msg;
    msg << "oracle: |V(+-L)| = " << tail << " >= " << cfg.tail_tolerance
        << " at L = " << cfg.half_width;
    throw Error(ErrorCode::TailNotDecayed, msg.str());
  }
  const double lambda = spec.lambda();
  const PotentialFunction V = [&](double x) {
    return potential_at(map_x(x, lambda), spec);
  };
  return integrate_potential(V, e, cfg.half_width, cfg.step,
                             Incidence::FromLeft);
}

HandednessCheck left_right_check(const EnergyPoint& e,
                                 const PotentialSpec& spec,
                                 const OracleConfig& config) {
  const OracleConfig cfg = resolve_oracle_config(e, spec, config);
  const double lambda = spec.lambda();
  const PotentialFunction V = [&](double x) {
    return potential_at(map_x(x, lambda), spec);
  };
  const auto left =
      integrate_potential(V, e, cfg.half_width, cfg.step, Incidence::FromLeft);
  const auto right =
      integrate_potential(V, e, cfg.half_width, cfg.step, Incidence::FromRight);
  return {left.R, right.R};
}

}  // namespace ginocchio
