#pragma once

#include "ginocchio/potential.hpp"

namespace ginocchio {

/// Positive energy with its wavenumber k = sqrt(E).
class EnergyPoint {
 public:
  explicit EnergyPoint(double energy);

  double energy() const { return energy_; }
  double k() const { return k_; }

 private:
  double energy_;
  double k_;
};

enum class MuBranch { Principal, Flipped };

/// How the +- under the square root of mu(E) follows the potential's sign.
/// UpperWithUpper is the default and the one that reproduces the tabulated
/// singularities; the other is kept for diagnosis.
enum class SignBinding { UpperWithUpper, UpperWithLower };

struct ScatteringOptions {
  bool time_reversed = false;  ///< evaluate at k -> -k
  MuBranch branch = MuBranch::Principal;
  SignBinding binding = SignBinding::UpperWithUpper;
};

/// delta = -mu - i k / lambda^2 = F + iG, omega = mu + 1 - i k / lambda^2 = H + iJ.
struct SingularityDiagnostics {
  Complex delta;
  Complex omega;

  double F() const { return delta.real(); }
  double G() const { return delta.imag(); }
  double H() const { return omega.real(); }
  double J() const { return omega.imag(); }
};

/// r and t with R = |r|^2, T = |t|^2, U = R + T. The e^{2ikr1} phase is
/// not applied (r1 = 0); only moduli are meaningful across conventions.
/// At a Gamma pole of the numerator `at_singularity` is set and R, T, U are
/// +infinity.
struct AmplitudeSet {
  Complex r;
  Complex t;
  double R = 0.0;
  double T = 0.0;
  double U = 0.0;
  double phase_offset_r1 = 0.0;
  bool at_singularity = false;
};

Complex mu(const EnergyPoint& e, const PotentialSpec& spec,
           const ScatteringOptions& opts = {});

SingularityDiagnostics diagnostics(const EnergyPoint& e,
                                   const PotentialSpec& spec,
                                   const ScatteringOptions& opts = {});

/// Closed-form amplitudes assembled from log Gamma sums. Throws
/// Error(NumericalOverflow) if log R or log T exceeds 700 away from a pole.
AmplitudeSet amplitudes(const EnergyPoint& e, const PotentialSpec& spec,
                        const ScatteringOptions& opts = {});

}  // namespace ginocchio
