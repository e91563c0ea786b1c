#include "ginocchio/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "ginocchio/error.hpp"
#include "ginocchio/parallel.hpp"

namespace ginocchio {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;
constexpr double kRootTolerance = 1e-10;
constexpr double kMinimumRelTolerance = 1e-8;
constexpr double kUnitarityTolerance = 1e-9;
constexpr double kReflectionless = 1e-9;
constexpr int kMaxNewtonIterations = 100;

std::vector<SingularityDiagnostics> diagnostics_on(
    const PotentialSpec& spec, const std::vector<double>& energies,
    unsigned threads, const ScatteringOptions& opts) {
  std::vector<SingularityDiagnostics> out(energies.size());
  parallel_for(energies.size(), threads, [&](std::size_t i) {
    out[i] = diagnostics(EnergyPoint(energies[i]), spec, opts);
  });
  return out;
}

// Amplitudes with overflow mapped to the singular sentinel.
AmplitudeSet safe_amplitudes(double energy, const PotentialSpec& spec,
                             const ScatteringOptions& opts) {
  try {
    return amplitudes(EnergyPoint(energy), spec, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NumericalOverflow) throw;
    constexpr double inf = std::numeric_limits<double>::infinity();
    AmplitudeSet out;
    out.R = out.T = out.U = inf;
    out.at_singularity = true;
    return out;
  }
}

std::vector<AmplitudeSet> amplitudes_on(const PotentialSpec& spec,
                                        const std::vector<double>& energies,
                                        unsigned threads,
                                        const ScatteringOptions& opts) {
  std::vector<AmplitudeSet> out(energies.size());
  parallel_for(energies.size(), threads, [&](std::size_t i) {
    out[i] = safe_amplitudes(energies[i], spec, opts);
  });
  return out;
}

double golden_minimum(const std::function<double(double)>& f, double a,
                      double b, double rel_tol) {
  double c = b - kGoldenRatio * (b - a);
  double d = a + kGoldenRatio * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > rel_tol * std::abs(0.5 * (a + b));
       ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatio * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

// Bisection on a function with a sign change in [a, b].
double bisect(const std::function<double(double)>& f, double a, double b,
              double fa, double abs_tol, double rel_width) {
  double mid = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (std::abs(fm) < abs_tol || (b - a) < rel_width * std::abs(mid)) break;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return mid;
}

double delta_miss(double energy, int n, const PotentialSpec& spec,
                  const ScatteringOptions& opts) {
  return std::abs(diagnostics(EnergyPoint(energy), spec, opts).delta -
                  Complex(n, 0.0));
}

// Closest approach of delta(E) to n within a factor 1.2 of the G root.
double closest_approach(double root, int n, const PotentialSpec& spec,
                        const ScatteringOptions& opts) {
  constexpr int samples = 201;
  const double lo = root / 1.2;
  const double ratio = std::pow(1.2 * 1.2, 1.0 / (samples - 1));
  std::array<double, samples> es{};
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    es[i] = lo * std::pow(ratio, i);
    const double v = delta_miss(es[i], n, spec, opts);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = es[std::max(0, best - 1)];
  const double b = es[std::min(samples - 1, best + 1)];
  const double e = golden_minimum(
      [&](double x) { return delta_miss(x, n, spec, opts); }, a, b, 1e-13);
  return delta_miss(e, n, spec, opts) < best_val ? e : es[best];
}

struct RefineProblem {
  const PotentialSpec& base;
  FreeParameter free;
  int n;
  double fixed_energy;
  const ScatteringOptions& opts;

  // Maps the two unknowns to (E, spec); throws InvalidArgument when out of
  // the admissible domain.
  std::pair<double, PotentialSpec> apply(const std::array<double, 2>& p) const {
    switch (free) {
      case FreeParameter::Nu:
        return {fixed_energy, base.with_nu({p[0], p[1]})};
      case FreeParameter::Lambda:
        return {p[0], base.with_lambda(p[1])};
      case FreeParameter::ReNu:
        return {p[0], base.with_nu({p[1], base.nu().imag()})};
      case FreeParameter::ImNu:
        return {p[0], base.with_nu({base.nu().real(), p[1]})};
    }
    return {fixed_energy, base};
  }

  std::array<double, 2> residual(const std::array<double, 2>& p) const {
    const auto [e, spec] = apply(p);
    const auto d = diagnostics(EnergyPoint(e), spec, opts);
    return {d.F() - n, d.G()};
  }
};

double max_abs(const std::array<double, 2>& r) {
  return std::max(std::abs(r[0]), std::abs(r[1]));
}

}  // namespace

void EnergyGrid::validate() const {
  if (!(e_min > 0.0) || !(e_max > e_min) || !std::isfinite(e_max)) {
    throw Error(ErrorCode::InvalidArgument,
                "energy grid needs 0 < e_min < e_max");
  }
  if (points < 2) {
    throw Error(ErrorCode::InvalidArgument, "energy grid needs >= 2 points");
  }
}

std::vector<double> EnergyGrid::energies() const {
  validate();
  std::vector<double> out(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / last;
    out[i] = spacing == Spacing::Log
                 ? e_min * std::pow(e_max / e_min, s)
                 : e_min + (e_max - e_min) * s;
  }
  out.back() = e_max;
  return out;
}

const char* to_string(FreeParameter p) {
  switch (p) {
    case FreeParameter::Lambda: return "lambda";
    case FreeParameter::ReNu: return "re_nu";
    case FreeParameter::ImNu: return "im_nu";
    case FreeParameter::Nu: return "nu";
  }
  return "?";
}

std::optional<FreeParameter> parse_free_parameter(const std::string& s) {
  if (s == "lambda") return FreeParameter::Lambda;
  if (s == "re_nu") return FreeParameter::ReNu;
  if (s == "im_nu") return FreeParameter::ImNu;
  if (s == "nu") return FreeParameter::Nu;
  return std::nullopt;
}

std::vector<SsCandidate> scan_ss_candidates(const PotentialSpec& spec,
                                            const EnergyGrid& grid,
                                            unsigned threads,
                                            const ScatteringOptions& opts) {
  const std::vector<double> es = grid.energies();
  const auto diag = diagnostics_on(spec, es, threads, opts);
  auto G = [&](double e) {
    return diagnostics(EnergyPoint(e), spec, opts).G();
  };

  std::vector<SsCandidate> out;
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const double g0 = diag[i].G();
    const double g1 = diag[i + 1].G();
    double root;
    if (g0 == 0.0) {
      root = es[i];
    } else if (g1 != 0.0 && (g0 < 0.0) != (g1 < 0.0)) {
      root = bisect(G, es[i], es[i + 1], g0, kRootTolerance, 1e-15);
    } else {
      continue;
    }
    const double F = diagnostics(EnergyPoint(root), spec, opts).F();
    const double n = std::nearbyint(F);
    if (n > 0.0) continue;
    SsCandidate c;
    c.energy = root;
    c.nearest_n = static_cast<int>(n);
    c.f_distance = std::abs(F - n);
    c.closest_energy = closest_approach(root, c.nearest_n, spec, opts);
    c.closest_distance = delta_miss(c.closest_energy, c.nearest_n, spec, opts);
    out.push_back(c);
  }
  return out;
}

SpectralSingularity refine_ss(const PotentialSpec& spec, FreeParameter free,
                              const SsCandidate& seed,
                              const ScatteringOptions& opts) {
  if (!(seed.f_distance < kRefinePrecondition) || seed.nearest_n > 0) {
    throw Error(ErrorCode::InvalidArgument,
                "refine_ss: seed must have f_distance < 0.5 and n <= 0");
  }
  const RefineProblem problem{spec, free, seed.nearest_n, seed.closest_energy,
                              opts};
  std::array<double, 2> p{};
  switch (free) {
    case FreeParameter::Nu:
      p = {spec.nu().real(), spec.nu().imag()};
      break;
    case FreeParameter::Lambda:
      p = {seed.energy, spec.lambda()};
      break;
    case FreeParameter::ReNu:
      p = {seed.energy, spec.nu().real()};
      break;
    case FreeParameter::ImNu:
      p = {seed.energy, spec.nu().imag()};
      break;
  }

  std::array<double, 2> r = problem.residual(p);
  int iterations = 0;
  for (; iterations < kMaxNewtonIterations && max_abs(r) > 1e-14;
       ++iterations) {
    std::array<std::array<double, 2>, 2> jac{};
    for (int j = 0; j < 2; ++j) {
      std::array<double, 2> q = p;
      const double h = 1e-6 * (p[j] != 0.0 ? std::abs(p[j]) : 1.0);
      q[j] += h;
      const auto rq = problem.residual(q);
      jac[0][j] = (rq[0] - r[0]) / h;
      jac[1][j] = (rq[1] - r[1]) / h;
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (det == 0.0 || !std::isfinite(det)) break;
    const std::array<double, 2> step = {
        (-r[0] * jac[1][1] + r[1] * jac[0][1]) / det,
        (-r[1] * jac[0][0] + r[0] * jac[1][0]) / det};

    bool accepted = false;
    double scale = 1.0;
    for (int halving = 0; halving < 40; ++halving, scale *= 0.5) {
      const std::array<double, 2> trial = {p[0] + scale * step[0],
                                           p[1] + scale * step[1]};
      try {
        const auto rt = problem.residual(trial);
        if (max_abs(rt) < max_abs(r)) {
          p = trial;
          r = rt;
          accepted = true;
          break;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument) throw;
      }
    }
    if (!accepted) break;
  }

  const auto [energy, refined] = problem.apply(p);
  SpectralSingularity ss;
  ss.energy = energy;
  ss.n = seed.nearest_n;
  ss.residual = max_abs(r);
  ss.refined_spec = refined;
  ss.free = free;
  ss.iterations = iterations;
  ss.converged = ss.residual < kCertifyTolerance;
  return ss;
}

DivergenceCheck check_divergence(const SpectralSingularity& ss,
                                 double rel_offset,
                                 const ScatteringOptions& opts) {
  DivergenceCheck out;
  const auto below =
      safe_amplitudes(ss.energy * (1.0 - rel_offset), ss.refined_spec, opts);
  const auto above =
      safe_amplitudes(ss.energy * (1.0 + rel_offset), ss.refined_spec, opts);
  out.R_below = below.R;
  out.T_below = below.T;
  out.R_above = above.R;
  out.T_above = above.T;
  out.sentinel_at_energy =
      safe_amplitudes(ss.energy, ss.refined_spec, opts).at_singularity;
  return out;
}

SecondSsVerdict exclude_second_ss(const PotentialSpec& spec,
                                  const EnergyGrid& grid, unsigned threads,
                                  const ScatteringOptions& opts) {
  const std::vector<double> es = grid.energies();
  const auto diag = diagnostics_on(spec, es, threads, opts);
  auto H = [&](double e) {
    return diagnostics(EnergyPoint(e), spec, opts).H();
  };

  SecondSsVerdict out;
  out.min_H = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const double h = diag[i].H();
    if (h < out.min_H) {
      out.min_H = h;
      out.min_H_energy = es[i];
    }
    if (h <= 0.0 && out.excluded) {
      out.excluded = false;
      out.witness_energy = es[i];
    }
  }
  for (std::size_t i = 1; i + 1 < es.size(); ++i) {
    const double h = diag[i].H();
    if (!(h < diag[i - 1].H() && h <= diag[i + 1].H())) continue;
    const double e = golden_minimum(H, es[i - 1], es[i + 1], 1e-10);
    const double he = H(e);
    if (he < out.min_H) {
      out.min_H = he;
      out.min_H_energy = e;
    }
    if (he <= 0.0 && out.excluded) {
      out.excluded = false;
      out.witness_energy = e;
    }
  }
  return out;
}

MinimaReport find_minima(const PotentialSpec& spec, const EnergyGrid& grid,
                         unsigned threads, const ScatteringOptions& opts) {
  const std::vector<double> es = grid.energies();
  const auto amps = amplitudes_on(spec, es, threads, opts);
  auto R = [&](double e) { return safe_amplitudes(e, spec, opts).R; };

  MinimaReport report;
  for (std::size_t i = 1; i + 1 < es.size(); ++i) {
    const double r = amps[i].R;
    if (!(r < amps[i - 1].R && r < amps[i + 1].R)) continue;
    const double e = golden_minimum(R, es[i - 1], es[i + 1],
                                    kMinimumRelTolerance);
    double re = R(e);
    double best_e = e;
    if (!(re <= r)) {
      re = r;
      best_e = es[i];
    }
    report.minima.push_back({best_e, re, re < kReflectionless});
  }
  return report;
}

UnitarityCrossings unitarity_crossings(const PotentialSpec& spec,
                                       const EnergyGrid& grid,
                                       unsigned threads,
                                       const ScatteringOptions& opts) {
  const std::vector<double> es = grid.energies();
  const auto amps = amplitudes_on(spec, es, threads, opts);
  UnitarityCrossings out;
  out.everywhere_unitary = std::all_of(amps.begin(), amps.end(), [](auto& a) {
    return std::abs(a.U - 1.0) < kUnitarityTolerance;
  });
  if (out.everywhere_unitary) return out;

  auto deficit = [&](double e) { return safe_amplitudes(e, spec, opts).U - 1.0; };
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const double d0 = amps[i].U - 1.0;
    const double d1 = amps[i + 1].U - 1.0;
    if (d0 == 0.0) {
      out.energies.push_back(es[i]);
    } else if (d1 != 0.0 && (d0 < 0.0) != (d1 < 0.0)) {
      out.energies.push_back(
          bisect(deficit, es[i], es[i + 1], d0, 0.0, kMinimumRelTolerance));
    }
  }
  return out;
}

SsSearchResult find_spectral_singularities(const PotentialSpec& spec,
                                           const EnergyGrid& grid,
                                           const SsSearchOptions& options) {
  SsSearchResult result;
  result.candidates =
      scan_ss_candidates(spec, grid, options.threads, options.scattering);
  for (const auto& c : result.candidates) {
    if (!(c.closest_distance < options.candidate_tolerance)) continue;
    SpectralSingularity ss = refine_ss(spec, options.free, c,
                                       options.scattering);
    if (ss.converged) result.certified.push_back(ss);
  }
  result.second =
      exclude_second_ss(spec, grid, options.threads, options.scattering);
  return result;
}

}  // namespace ginocchio
