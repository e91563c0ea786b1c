#include "ginocchio/scattering.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ginocchio/error.hpp"

namespace ginocchio {

namespace {

constexpr double kLogOverflow = 700.0;

double signed_kappa(const EnergyPoint& e, const PotentialSpec& spec,
                    const ScatteringOptions& opts) {
  const double kappa = e.k() / (spec.lambda() * spec.lambda());
  return opts.time_reversed ? -kappa : kappa;
}

}  // namespace

EnergyPoint::EnergyPoint(double energy) : energy_(energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorCode::InvalidArgument, "energy must be finite and > 0");
  }
  k_ = Units::wavenumber(energy);
}

Complex mu(const EnergyPoint& e, const PotentialSpec& spec,
           const ScatteringOptions& opts) {
  const double l2 = spec.lambda() * spec.lambda();
  // Upper sign of the potential (sign = -1) pairs with +nu(nu+1) here.
  const double pm = opts.binding == SignBinding::UpperWithUpper
                        ? -static_cast<double>(spec.sign())
                        : static_cast<double>(spec.sign());
  Complex radicand =
      0.25 + pm * spec.strength() + (l2 - 1.0) / (l2 * l2) * e.energy();
  // pm * (real strength) leaves a -0 imaginary part, which would put a
  // negative real radicand on the lower side of the cut.
  if (radicand.imag() == 0.0) radicand.imag(0.0);
  const Complex m = std::sqrt(radicand) - 0.5;
  return opts.branch == MuBranch::Principal ? m : -1.0 - m;
}

SingularityDiagnostics diagnostics(const EnergyPoint& e,
                                   const PotentialSpec& spec,
                                   const ScatteringOptions& opts) {
  const Complex m = mu(e, spec, opts);
  const Complex ik(0.0, signed_kappa(e, spec, opts));
  return {-m - ik, m + 1.0 - ik};
}

AmplitudeSet amplitudes(const EnergyPoint& e, const PotentialSpec& spec,
                        const ScatteringOptions& opts) {
  const Complex m = mu(e, spec, opts);
  const Complex ik(0.0, signed_kappa(e, spec, opts));
  const Complex delta = -m - ik;
  const Complex omega = m + 1.0 - ik;

  AmplitudeSet out;
  if (near_nonpositive_integer(delta) || near_nonpositive_integer(omega)) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    out.at_singularity = true;
    out.r = out.t = Complex(inf, 0.0);
    out.R = out.T = out.U = inf;
    return out;
  }

  const Complex shared = log_gamma(omega) + log_gamma(delta) - log_gamma(-ik);
  const Complex log_t = shared - log_gamma(1.0 - ik);
  // 1/Gamma(mu+1) or 1/Gamma(-mu) vanishing means exact reflectionlessness.
  const bool r_zero =
      near_nonpositive_integer(m + 1.0) || near_nonpositive_integer(-m);
  const Complex log_r =
      r_zero ? Complex()
             : shared + log_gamma(ik) - log_gamma(m + 1.0) - log_gamma(-m);

  if (2.0 * log_t.real() > kLogOverflow ||
      (!r_zero && 2.0 * log_r.real() > kLogOverflow)) {
    std::ostringstream msg;
    msg << "amplitudes overflow at E = " << e.energy() << " for "
        << spec.describe();
    throw Error(ErrorCode::NumericalOverflow, msg.str());
  }

  out.t = std::exp(log_t);
  out.r = r_zero ? Complex() : std::exp(log_r);
  out.T = std::exp(2.0 * log_t.real());
  out.R = r_zero ? 0.0 : std::exp(2.0 * log_r.real());
  out.U = out.R + out.T;
  return out;
}

}  // namespace ginocchio
