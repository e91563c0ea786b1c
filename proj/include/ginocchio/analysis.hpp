#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ginocchio/scattering.hpp"

namespace ginocchio {

enum class Spacing { Log, Linear };

struct EnergyGrid {
  double e_min = 0.01;
  double e_max = 1000.0;
  std::size_t points = 2000;
  Spacing spacing = Spacing::Log;

  /// Throws Error(InvalidArgument) unless 0 < e_min < e_max and points >= 2.
  void validate() const;
  std::vector<double> energies() const;
};

/// A sign change of G(E) = Im delta on the scan grid.
struct SsCandidate {
  double energy = 0.0;      ///< root of G, bisected to |G| < 1e-10
  int nearest_n = 0;        ///< integer <= 0 nearest to F(energy)
  double f_distance = 0.0;  ///< |F(energy) - nearest_n|
  /// Energy minimising |delta(E) - n| near the root; this is where R and T
  /// actually peak when delta misses n.
  double closest_energy = 0.0;
  double closest_distance = 0.0;  ///< |delta(closest_energy) - n|
};

/// Bisects every sign change of G on the grid and discards roots whose
/// nearest integer is positive. Empty result is a normal outcome.
std::vector<SsCandidate> scan_ss_candidates(const PotentialSpec& spec,
                                            const EnergyGrid& grid,
                                            unsigned threads = 1,
                                            const ScatteringOptions& opts = {});

enum class FreeParameter { Lambda, ReNu, ImNu, Nu };

const char* to_string(FreeParameter p);
std::optional<FreeParameter> parse_free_parameter(const std::string& s);

struct SpectralSingularity {
  double energy = 0.0;
  int n = 0;
  double residual = 0.0;  ///< max(|F - n|, |G|) at the refined point
  PotentialSpec refined_spec{Complex(0.0), 1.0, 1};
  FreeParameter free = FreeParameter::Nu;
  int iterations = 0;
  bool converged = false;  ///< residual below kCertifyTolerance
};

inline constexpr double kCertifyTolerance = 1e-9;
inline constexpr double kRefinePrecondition = 0.5;

/// Damped Newton with a finite-difference Jacobian (relative step 1e-6) on
/// F = n, G = 0.
///
/// Lambda / ReNu / ImNu solve for (E, p) starting from the G root. Nu keeps E
/// at the closest-approach energy and solves for complex nu, i.e. the
/// smallest change of the potential that turns the near miss into an exact
/// pole where R already peaks. Never throws on non-convergence: the best
/// iterate is returned with converged = false.
SpectralSingularity refine_ss(const PotentialSpec& spec, FreeParameter free,
                              const SsCandidate& seed,
                              const ScatteringOptions& opts = {});

struct DivergenceCheck {
  double R_below = 0.0;
  double T_below = 0.0;
  double R_above = 0.0;
  double T_above = 0.0;
  bool sentinel_at_energy = false;
};

/// Evaluates amplitudes of the refined spec at E*(1 -+ rel_offset) and at E*.
DivergenceCheck check_divergence(const SpectralSingularity& ss,
                                 double rel_offset = 1e-6,
                                 const ScatteringOptions& opts = {});

struct SecondSsVerdict {
  bool excluded = true;
  double witness_energy = 0.0;  ///< first energy with H <= 0 when not excluded
  double min_H = 0.0;
  double min_H_energy = 0.0;
};

/// H(E) = Re omega must stay positive on the grid and at refined grid minima.
SecondSsVerdict exclude_second_ss(const PotentialSpec& spec,
                                  const EnergyGrid& grid, unsigned threads = 1,
                                  const ScatteringOptions& opts = {});

struct ReflectivityMinimum {
  double energy = 0.0;
  double R = 0.0;
  bool reflectionless = false;  ///< R < 1e-9
};

struct MinimaReport {
  std::vector<ReflectivityMinimum> minima;  ///< sorted by energy
};

/// Strict local minima of R on the grid, golden-section refined to relative
/// 1e-8 in E.
MinimaReport find_minima(const PotentialSpec& spec, const EnergyGrid& grid,
                         unsigned threads = 1,
                         const ScatteringOptions& opts = {});

struct UnitarityCrossings {
  std::vector<double> energies;
  bool everywhere_unitary = false;  ///< |U - 1| < 1e-9 on the whole grid
};

UnitarityCrossings unitarity_crossings(const PotentialSpec& spec,
                                       const EnergyGrid& grid,
                                       unsigned threads = 1,
                                       const ScatteringOptions& opts = {});

struct SsSearchOptions {
  FreeParameter free = FreeParameter::Nu;
  /// Candidates whose closest approach misses n by more than this are not
  /// refined; 0.05 absorbs the rounding of tabulated parameters.
  double candidate_tolerance = 0.05;
  unsigned threads = 1;
  ScatteringOptions scattering;
};

struct SsSearchResult {
  std::vector<SsCandidate> candidates;
  std::vector<SpectralSingularity> certified;
  SecondSsVerdict second;
};

/// scan -> refine -> certify, plus the second-singularity verdict.
SsSearchResult find_spectral_singularities(const PotentialSpec& spec,
                                           const EnergyGrid& grid,
                                           const SsSearchOptions& options = {});

}  // namespace ginocchio
