#pragma once

#include "ginocchio/scattering.hpp"

namespace ginocchio {

struct WaveSample {
  double x = 0.0;
  Complex psi;
};

/// Exact scattering solution that stays bounded as x -> +infinity:
///   psi = [l^2 + (1 - l^2) z^2]^{1/4} ((1 - z^2)/4)^{-ik/(2 l^2)}
///         2F1(omega, delta; 1 - ik/l^2; (1 - z)/2),
///   z = l y / sqrt(1 + (l^2 - 1) y^2).
/// 1 - z^2 is carried from 1 - y^2 so the far tails keep full precision.
/// Throws Error(NearBoundary) only once 1 - z^2 underflows.
WaveSample psi_exact(double x, const EnergyPoint& e, const PotentialSpec& spec);

/// Positive fit window [lo, hi]; the left window is its mirror image.
struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// [0.6 L, 0.9 L] with L the oracle's automatic half width.
FitWindow default_fit_window(const EnergyPoint& e, const PotentialSpec& spec);

/// psi ~ A e^{ikx} + B e^{-ikx} on the left, C e^{ikx} on the right, so
/// R = |B/A|^2 and T = |C/A|^2. Asymptotic offsets only shift the phases.
struct JostTriple {
  Complex A;
  Complex B;
  Complex C;
  double residual_left = 0.0;   ///< relative least-squares residual
  double residual_right = 0.0;

  double R() const { return std::norm(B / A); }
  double T() const { return std::norm(C / A); }
};

/// Least-squares plane-wave fit of psi_exact samples in both windows.
/// Throws Error(PoorFit) when a relative residual exceeds 1e-6.
JostTriple jost_fit(const EnergyPoint& e, const PotentialSpec& spec,
                    const FitWindow& window, int samples = 64);

}  // namespace ginocchio
