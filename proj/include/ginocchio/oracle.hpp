#pragma once

#include <functional>

#include "ginocchio/scattering.hpp"

namespace ginocchio {

/// Discretisation of psi'' = (V - E) psi on [-L, L]. Zero fields are filled
/// in by resolve_oracle_config.
struct OracleConfig {
  double half_width = 0.0;      ///< L; 0 = grow from 30/lambda^2 until tails decay
  double step = 0.0;            ///< h; 0 = pick from local wavenumber and lambda
  double tail_tolerance = 0.0;  ///< required |V(+-L)|; 0 = 1e-10 max(1, |V(0)|)
};

struct OracleResult {
  double R = 0.0;
  double T = 0.0;
  double U = 0.0;
  Complex A;  ///< incident coefficient with the transmitted wave normalised to 1
  Complex B;  ///< reflected coefficient
  double tail_residual = 0.0;  ///< max |V(+-L)|
  double step_estimate = 0.0;  ///< Richardson estimate of the error in R, T
  double half_width = 0.0;
  double step = 0.0;
  bool ill_conditioned = false;  ///< |A| < 1e-12, i.e. at a singularity
};

OracleConfig resolve_oracle_config(const EnergyPoint& e,
                                   const PotentialSpec& spec,
                                   const OracleConfig& config = {});

/// Fixed-step RK4 from x = +L (psi = e^{ikx}) back to -L, where psi is
/// split into A e^{ikx} + B e^{-ikx}. Repeated at h/2; the h/2 values are
/// returned with |X_h - X_{h/2}| / 15 as the error estimate.
OracleResult integrate_rt(const EnergyPoint& e, const PotentialSpec& spec,
                          const OracleConfig& config = {});

enum class Incidence { FromLeft, FromRight };

using PotentialFunction = std::function<Complex(double)>;

/// Same integrator for an arbitrary potential, used for the handedness
/// self-test with asymmetric profiles. No tail or auto-step logic.
OracleResult integrate_potential(const PotentialFunction& V,
                                 const EnergyPoint& e, double half_width,
                                 double step, Incidence incidence);

struct HandednessCheck {
  double R_left = 0.0;
  double R_right = 0.0;
};

HandednessCheck left_right_check(const EnergyPoint& e,
                                 const PotentialSpec& spec,
                                 const OracleConfig& config = {});

}  // namespace ginocchio
