#include "ginocchio/wavefield.hpp"

#include <cmath>
#include <sstream>

#include "ginocchio/error.hpp"
#include "ginocchio/oracle.hpp"

namespace ginocchio {

namespace {

constexpr double kPoorFit = 1e-6;

}  // namespace

WaveSample psi_exact(double x, const EnergyPoint& e,
                     const PotentialSpec& spec) {
  const double lambda = spec.lambda();
  const double l2 = lambda * lambda;
  const MappedPoint p = map_x(x, lambda);
  const double stretch = 1.0 + (l2 - 1.0) * p.y * p.y;
  const double z = lambda * p.y / std::sqrt(stretch);
  const double one_minus_z2 = p.one_minus_y2 / stretch;
  if (!(one_minus_z2 > 0.0)) {
    std::ostringstream msg;
    msg << "psi_exact: 1 - z^2 underflows at x = " << x;
    throw Error(ErrorCode::NearBoundary, msg.str());
  }
  // w = (1 - z)/2 and 1 - w = (1 + z)/2, each from the accurate side.
  const double w = z > 0.0 ? 0.5 * one_minus_z2 / (1.0 + z) : 0.5 * (1.0 - z);
  const double wc = z < 0.0 ? 0.5 * one_minus_z2 / (1.0 - z) : 0.5 * (1.0 + z);

  const SingularityDiagnostics d = diagnostics(e, spec);
  const double kappa = e.k() / l2;
  const Complex c(1.0, -kappa);
  const Complex hyp = hyp2f1_detailed(d.omega, d.delta, c, w, wc).value;
  // The fourth root is what solves the Schroedinger equation; the bare
  // bracket does so only at lambda = 1.
  const double prefactor = std::sqrt(std::sqrt(l2 + (1.0 - l2) * z * z));
  const Complex phase =
      std::exp(Complex(0.0, -0.5 * kappa) * std::log(0.25 * one_minus_z2));
  return {x, prefactor * phase * hyp};
}

FitWindow default_fit_window(const EnergyPoint& e, const PotentialSpec& spec) {
  const double L = resolve_oracle_config(e, spec).half_width;
  return {0.6 * L, 0.9 * L};
}

JostTriple jost_fit(const EnergyPoint& e, const PotentialSpec& spec,
                    const FitWindow& window, int samples) {
  if (!(window.lo > 0.0) || !(window.hi > window.lo) || samples < 4) {
    throw Error(ErrorCode::InvalidArgument,
                "jost_fit: need 0 < lo < hi and >= 4 samples");
  }
  const double k = e.k();
  const Complex ik(0.0, k);
  JostTriple out;

  // Right window: psi = C e^{ikx}.
  {
    Complex sum;
    std::vector<WaveSample> ws;
    ws.reserve(samples);
    for (int j = 0; j < samples; ++j) {
      const double x =
          window.lo + (window.hi - window.lo) * j / (samples - 1.0);
      ws.push_back(psi_exact(x, e, spec));
      sum += ws.back().psi * std::exp(-ik * x);
    }
    out.C = sum / static_cast<double>(samples);
    double res = 0.0;
    double norm = 0.0;
    for (const auto& s : ws) {
      res += std::norm(s.psi - out.C * std::exp(ik * s.x));
      norm += std::norm(s.psi);
    }
    out.residual_right = std::sqrt(res / norm);
  }

  // Left window: psi = A e^{ikx} + B e^{-ikx}, 2x2 normal equations.
  {
    Complex m01;
    Complex m10;
    Complex rhs0;
    Complex rhs1;
    std::vector<WaveSample> ws;
    ws.reserve(samples);
    for (int j = 0; j < samples; ++j) {
      const double x =
          -window.hi + (window.hi - window.lo) * j / (samples - 1.0);
      ws.push_back(psi_exact(x, e, spec));
      const Complex ep = std::exp(ik * x);
      const Complex em = std::exp(-ik * x);
      m01 += em * em;  // conj(e^{ikx}) e^{-ikx}
      m10 += ep * ep;
      rhs0 += ws.back().psi * em;
      rhs1 += ws.back().psi * ep;
    }
    const double n = static_cast<double>(samples);
    const Complex det = n * n - m01 * m10;
    out.A = (rhs0 * n - m01 * rhs1) / det;
    out.B = (n * rhs1 - m10 * rhs0) / det;
    double res = 0.0;
    double norm = 0.0;
    for (const auto& s : ws) {
      res += std::norm(s.psi - out.A * std::exp(ik * s.x) -
                       out.B * std::exp(-ik * s.x));
      norm += std::norm(s.psi);
    }
    out.residual_left = std::sqrt(res / norm);
  }

  if (out.residual_left > kPoorFit || out.residual_right > kPoorFit) {
    std::ostringstream msg;
    msg << "jost_fit: residuals " << out.residual_left << " (left), "
        << out.residual_right << " (right) exceed " << kPoorFit;
    throw Error(ErrorCode::PoorFit, msg.str());
  }
  return out;
}

}  // namespace ginocchio
