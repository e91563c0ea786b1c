#include "ginocchio/ginocchio.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "ginocchio/analysis.hpp"
#include "ginocchio/error.hpp"
#include "ginocchio/oracle.hpp"
#include "ginocchio/parallel.hpp"
#include "ginocchio/table1.hpp"
#include "ginocchio/wavefield.hpp"

using namespace ginocchio;

struct gin_spec {
  PotentialSpec value;
};

struct gin_ss_report {
  SsSearchResult value;
};

struct gin_minima {
  MinimaReport value;
};

struct gin_crossings {
  UnitarityCrossings value;
};

namespace {

thread_local std::string g_last_error;

gin_status fail(gin_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn and maps exceptions to status codes.
template <class Fn>
gin_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GIN_OK;
  } catch (const Error& e) {
    return fail(static_cast<gin_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GIN_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GIN_E_INTERNAL, e.what());
  } catch (...) {
    return fail(GIN_E_INTERNAL, "unknown failure");
  }
}

#define GIN_REQUIRE(cond, what)                                  \
  do {                                                           \
    if (!(cond)) return fail(GIN_E_INVALID_ARGUMENT, (what));    \
  } while (0)

Complex to_cpp(gin_complex z) { return {z.re, z.im}; }
gin_complex to_c(Complex z) { return {z.real(), z.imag()}; }

ScatteringOptions to_cpp(const gin_scatter_options* o) {
  ScatteringOptions out;
  if (o == nullptr) return out;
  out.time_reversed = o->time_reversed != 0;
  out.branch = o->flip_branch ? MuBranch::Flipped : MuBranch::Principal;
  out.binding = o->alternate_binding ? SignBinding::UpperWithLower
                                     : SignBinding::UpperWithUpper;
  return out;
}

EnergyGrid to_cpp(const gin_grid& g) {
  EnergyGrid out;
  out.e_min = g.e_min;
  out.e_max = g.e_max;
  out.points = g.points;
  out.spacing = g.linear ? Spacing::Linear : Spacing::Log;
  out.validate();
  return out;
}

// NULL selects the default grid.
EnergyGrid to_cpp(const gin_grid* g) { return g ? to_cpp(*g) : EnergyGrid{}; }

OracleConfig to_cpp(const gin_oracle_config* c) {
  OracleConfig out;
  if (c == nullptr) return out;
  out.half_width = c->half_width;
  out.step = c->step;
  out.tail_tolerance = c->tail_tolerance;
  return out;
}

unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? default_threads() : threads;
}

gin_profile to_c(Profile p) {
  switch (p) {
    case Profile::Barrier: return GIN_PROFILE_BARRIER;
    case Profile::Well: return GIN_PROFILE_WELL;
    case Profile::WellWithSideBarriers:
      return GIN_PROFILE_WELL_WITH_SIDE_BARRIERS;
  }
  return GIN_PROFILE_BARRIER;
}

gin_emissivity to_c(Emissivity e) {
  switch (e) {
    case Emissivity::Emissive: return GIN_EMISSIVE;
    case Emissivity::Absorptive: return GIN_ABSORPTIVE;
    case Emissivity::Mixed: return GIN_MIXED;
    case Emissivity::None: return GIN_NON_EMISSIVE;
  }
  return GIN_NON_EMISSIVE;
}

FreeParameter to_cpp(gin_free_parameter f) {
  switch (f) {
    case GIN_FREE_LAMBDA: return FreeParameter::Lambda;
    case GIN_FREE_RE_NU: return FreeParameter::ReNu;
    case GIN_FREE_IM_NU: return FreeParameter::ImNu;
    case GIN_FREE_NU: return FreeParameter::Nu;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown free parameter");
}

gin_free_parameter to_c(FreeParameter f) {
  switch (f) {
    case FreeParameter::Lambda: return GIN_FREE_LAMBDA;
    case FreeParameter::ReNu: return GIN_FREE_RE_NU;
    case FreeParameter::ImNu: return GIN_FREE_IM_NU;
    case FreeParameter::Nu: return GIN_FREE_NU;
  }
  return GIN_FREE_NU;
}

gin_singularity to_c(const SpectralSingularity& ss) {
  gin_singularity out{};
  out.energy = ss.energy;
  out.n = ss.n;
  out.residual = ss.residual;
  out.nu = to_c(ss.refined_spec.nu());
  out.lambda = ss.refined_spec.lambda();
  out.sign = ss.refined_spec.sign();
  out.free = to_c(ss.free);
  out.iterations = ss.iterations;
  out.converged = ss.converged ? 1 : 0;
  return out;
}

SpectralSingularity to_cpp(const gin_singularity& s) {
  SpectralSingularity out;
  out.energy = s.energy;
  out.n = s.n;
  out.residual = s.residual;
  out.refined_spec = PotentialSpec(to_cpp(s.nu), s.lambda, s.sign);
  out.free = to_cpp(s.free);
  out.iterations = s.iterations;
  out.converged = s.converged != 0;
  return out;
}

gin_second_verdict to_c(const SecondSsVerdict& v) {
  return {v.excluded ? 1 : 0, v.witness_energy, v.min_H, v.min_H_energy};
}

gin_point make_point(const EnergyPoint& e, const PotentialSpec& spec,
                     const ScatteringOptions& opts) {
  gin_point p{};
  p.energy = e.energy();
  const SingularityDiagnostics d = diagnostics(e, spec, opts);
  p.delta = to_c(d.delta);
  p.omega = to_c(d.omega);
  const AmplitudeSet a = amplitudes(e, spec, opts);
  p.r = to_c(a.r);
  p.t = to_c(a.t);
  p.R = a.R;
  p.T = a.T;
  p.U = a.U;
  p.at_singularity = a.at_singularity ? 1 : 0;
  return p;
}

std::vector<double> profile_points(double lambda, size_t points) {
  return profile_grid(lambda, points == 0 ? 2001 : points);
}

}  // namespace

extern "C" {

const char* gin_last_error(void) { return g_last_error.c_str(); }

const char* gin_status_name(gin_status status) {
  switch (status) {
    case GIN_OK: return "ok";
    case GIN_E_INTERNAL: return "internal";
    default: break;
  }
  if (status >= GIN_E_INVALID_ARGUMENT && status <= GIN_E_PARSE) {
    return to_string(static_cast<ErrorCode>(status));
  }
  return "unknown";
}

const char* gin_version(void) { return "1.0.0"; }

gin_status gin_spec_create(gin_complex nu, double lambda, int sign,
                           gin_spec** out) {
  GIN_REQUIRE(out != nullptr, "gin_spec_create: out is null");
  return guarded([&] {
    *out = new gin_spec{PotentialSpec(to_cpp(nu), lambda, sign)};
  });
}

gin_status gin_spec_clone(const gin_spec* spec, gin_spec** out) {
  GIN_REQUIRE(spec && out, "gin_spec_clone: null argument");
  return guarded([&] { *out = new gin_spec{spec->value}; });
}

void gin_spec_destroy(gin_spec* spec) { delete spec; }

gin_status gin_spec_get(const gin_spec* spec, gin_complex* nu, double* lambda,
                        int* sign) {
  GIN_REQUIRE(spec != nullptr, "gin_spec_get: spec is null");
  if (nu) *nu = to_c(spec->value.nu());
  if (lambda) *lambda = spec->value.lambda();
  if (sign) *sign = spec->value.sign();
  return GIN_OK;
}

gin_status gin_x_of_y(double y, double lambda, double* x) {
  GIN_REQUIRE(x != nullptr, "gin_x_of_y: out is null");
  return guarded([&] { *x = x_of_y(y, lambda); });
}

gin_status gin_y_of_x(double x, double lambda, double* y) {
  GIN_REQUIRE(y != nullptr, "gin_y_of_x: out is null");
  return guarded([&] { *y = y_of_x(x, lambda); });
}

gin_status gin_potential(const gin_spec* spec, double x, gin_complex* out) {
  GIN_REQUIRE(spec && out, "gin_potential: null argument");
  return guarded([&] { *out = to_c(potential_value(x, spec->value)); });
}

gin_status gin_potential_origin(const gin_spec* spec, gin_complex* out) {
  GIN_REQUIRE(spec && out, "gin_potential_origin: null argument");
  return guarded([&] { *out = to_c(potential_at_origin(spec->value)); });
}

gin_status gin_classify_profile(const gin_spec* spec, size_t points,
                                gin_profile* out) {
  GIN_REQUIRE(spec && out, "gin_classify_profile: null argument");
  return guarded([&] {
    const auto grid = profile_points(spec->value.lambda(), points);
    *out = to_c(classify_profile(spec->value, grid));
  });
}

gin_status gin_emissivity_of(const gin_spec* spec, size_t points,
                             gin_emissivity* out) {
  GIN_REQUIRE(spec && out, "gin_emissivity_of: null argument");
  return guarded([&] {
    const auto grid = profile_points(spec->value.lambda(), points);
    *out = to_c(emissivity(spec->value, grid));
  });
}

const char* gin_profile_name(gin_profile profile) {
  switch (profile) {
    case GIN_PROFILE_BARRIER: return to_string(Profile::Barrier);
    case GIN_PROFILE_WELL: return to_string(Profile::Well);
    case GIN_PROFILE_WELL_WITH_SIDE_BARRIERS:
      return to_string(Profile::WellWithSideBarriers);
  }
  return "unknown";
}

const char* gin_emissivity_name(gin_emissivity e) {
  switch (e) {
    case GIN_EMISSIVE: return to_string(Emissivity::Emissive);
    case GIN_ABSORPTIVE: return to_string(Emissivity::Absorptive);
    case GIN_MIXED: return to_string(Emissivity::Mixed);
    case GIN_NON_EMISSIVE: return to_string(Emissivity::None);
  }
  return "unknown";
}

gin_status gin_mu(const gin_spec* spec, double energy,
                  const gin_scatter_options* options, gin_complex* out) {
  GIN_REQUIRE(spec && out, "gin_mu: null argument");
  return guarded([&] {
    *out = to_c(mu(EnergyPoint(energy), spec->value, to_cpp(options)));
  });
}

gin_status gin_evaluate(const gin_spec* spec, double energy,
                        const gin_scatter_options* options, gin_point* out) {
  GIN_REQUIRE(spec && out, "gin_evaluate: null argument");
  return guarded([&] {
    *out = make_point(EnergyPoint(energy), spec->value, to_cpp(options));
  });
}

gin_status gin_evaluate_many(const gin_spec* spec, const double* energies,
                             size_t count, const gin_scatter_options* options,
                             unsigned threads, gin_point* out,
                             size_t* failed_index) {
  GIN_REQUIRE(spec && (count == 0 || (energies && out)),
              "gin_evaluate_many: null argument");
  const ScatteringOptions opts = to_cpp(options);
  // Per-slot status so the reported failure is the lowest index whatever the
  // thread count.
  std::vector<gin_status> status(count, GIN_OK);
  std::vector<std::string> messages(count);
  const gin_status outer = guarded([&] {
    parallel_for(count, resolve_threads(threads), [&](std::size_t i) {
      try {
        out[i] = make_point(EnergyPoint(energies[i]), spec->value, opts);
      } catch (const Error& e) {
        status[i] = static_cast<gin_status>(e.code());
        messages[i] = e.what();
      }
    });
  });
  if (outer != GIN_OK) return outer;
  for (size_t i = 0; i < count; ++i) {
    if (status[i] != GIN_OK) {
      if (failed_index) *failed_index = i;
      return fail(status[i], messages[i]);
    }
  }
  return GIN_OK;
}

gin_status gin_grid_default(gin_grid* out) {
  GIN_REQUIRE(out != nullptr, "gin_grid_default: out is null");
  const EnergyGrid g;
  *out = {g.e_min, g.e_max, g.points, g.spacing == Spacing::Linear ? 1 : 0};
  return GIN_OK;
}

gin_status gin_grid_validate(const gin_grid* grid) {
  GIN_REQUIRE(grid != nullptr, "gin_grid_validate: grid is null");
  return guarded([&] { (void)to_cpp(*grid); });
}

gin_status gin_grid_energies(const gin_grid* grid, double* out) {
  GIN_REQUIRE(grid && out, "gin_grid_energies: null argument");
  return guarded([&] {
    const auto es = to_cpp(*grid).energies();
    std::copy(es.begin(), es.end(), out);
  });
}

gin_status gin_search_options_default(gin_search_options* out) {
  GIN_REQUIRE(out != nullptr, "gin_search_options_default: out is null");
  const SsSearchOptions o;
  *out = {};
  out->free = to_c(o.free);
  out->candidate_tolerance = o.candidate_tolerance;
  out->threads = o.threads;
  return GIN_OK;
}

gin_status gin_find_ss(const gin_spec* spec, const gin_grid* grid,
                       const gin_search_options* options,
                       gin_ss_report** out) {
  GIN_REQUIRE(spec && out, "gin_find_ss: null argument");
  return guarded([&] {
    SsSearchOptions o;
    if (options) {
      o.free = to_cpp(options->free);
      o.candidate_tolerance = options->candidate_tolerance;
      o.threads = resolve_threads(options->threads);
      o.scattering = to_cpp(&options->scattering);
    }
    auto result = find_spectral_singularities(spec->value, to_cpp(grid), o);
    *out = new gin_ss_report{std::move(result)};
  });
}

void gin_ss_report_destroy(gin_ss_report* report) { delete report; }

size_t gin_ss_report_candidate_count(const gin_ss_report* report) {
  return report ? report->value.candidates.size() : 0;
}

gin_status gin_ss_report_candidate(const gin_ss_report* report, size_t index,
                                   gin_candidate* out) {
  GIN_REQUIRE(report && out, "gin_ss_report_candidate: null argument");
  GIN_REQUIRE(index < report->value.candidates.size(),
              "gin_ss_report_candidate: index out of range");
  const SsCandidate& c = report->value.candidates[index];
  *out = {c.energy, c.nearest_n, c.f_distance, c.closest_energy,
          c.closest_distance};
  return GIN_OK;
}

size_t gin_ss_report_count(const gin_ss_report* report) {
  return report ? report->value.certified.size() : 0;
}

gin_status gin_ss_report_get(const gin_ss_report* report, size_t index,
                             gin_singularity* out) {
  GIN_REQUIRE(report && out, "gin_ss_report_get: null argument");
  GIN_REQUIRE(index < report->value.certified.size(),
              "gin_ss_report_get: index out of range");
  *out = to_c(report->value.certified[index]);
  return GIN_OK;
}

gin_status gin_ss_report_second(const gin_ss_report* report,
                                gin_second_verdict* out) {
  GIN_REQUIRE(report && out, "gin_ss_report_second: null argument");
  *out = to_c(report->value.second);
  return GIN_OK;
}

gin_status gin_singularity_spec(const gin_singularity* ss, gin_spec** out) {
  GIN_REQUIRE(ss && out, "gin_singularity_spec: null argument");
  return guarded([&] {
    *out = new gin_spec{PotentialSpec(to_cpp(ss->nu), ss->lambda, ss->sign)};
  });
}

gin_status gin_check_divergence(const gin_singularity* ss, double rel_offset,
                                gin_divergence* out) {
  GIN_REQUIRE(ss && out, "gin_check_divergence: null argument");
  return guarded([&] {
    const DivergenceCheck d = check_divergence(to_cpp(*ss), rel_offset);
    *out = {d.R_below, d.T_below, d.R_above, d.T_above,
            d.sentinel_at_energy ? 1 : 0};
  });
}

gin_status gin_exclude_second_ss(const gin_spec* spec, const gin_grid* grid,
                                 unsigned threads,
                                 const gin_scatter_options* options,
                                 gin_second_verdict* out) {
  GIN_REQUIRE(spec && out, "gin_exclude_second_ss: null argument");
  return guarded([&] {
    *out = to_c(exclude_second_ss(spec->value, to_cpp(grid),
                                  resolve_threads(threads), to_cpp(options)));
  });
}

gin_status gin_find_minima(const gin_spec* spec, const gin_grid* grid,
                           unsigned threads,
                           const gin_scatter_options* options,
                           gin_minima** out) {
  GIN_REQUIRE(spec && out, "gin_find_minima: null argument");
  return guarded([&] {
    auto report = find_minima(spec->value, to_cpp(grid),
                              resolve_threads(threads), to_cpp(options));
    *out = new gin_minima{std::move(report)};
  });
}

void gin_minima_destroy(gin_minima* minima) { delete minima; }

size_t gin_minima_count(const gin_minima* minima) {
  return minima ? minima->value.minima.size() : 0;
}

gin_status gin_minima_get(const gin_minima* minima, size_t index,
                          gin_minimum* out) {
  GIN_REQUIRE(minima && out, "gin_minima_get: null argument");
  GIN_REQUIRE(index < minima->value.minima.size(),
              "gin_minima_get: index out of range");
  const ReflectivityMinimum& m = minima->value.minima[index];
  *out = {m.energy, m.R, m.reflectionless ? 1 : 0};
  return GIN_OK;
}

gin_status gin_unitarity_crossings(const gin_spec* spec, const gin_grid* grid,
                                   unsigned threads,
                                   const gin_scatter_options* options,
                                   gin_crossings** out) {
  GIN_REQUIRE(spec && out, "gin_unitarity_crossings: null argument");
  return guarded([&] {
    auto c = unitarity_crossings(spec->value, to_cpp(grid),
                                 resolve_threads(threads), to_cpp(options));
    *out = new gin_crossings{std::move(c)};
  });
}

void gin_crossings_destroy(gin_crossings* crossings) { delete crossings; }

size_t gin_crossings_count(const gin_crossings* crossings) {
  return crossings ? crossings->value.energies.size() : 0;
}

double gin_crossings_get(const gin_crossings* crossings, size_t index) {
  if (!crossings || index >= crossings->value.energies.size()) return NAN;
  return crossings->value.energies[index];
}

int gin_crossings_everywhere_unitary(const gin_crossings* crossings) {
  return crossings && crossings->value.everywhere_unitary ? 1 : 0;
}

gin_status gin_oracle(const gin_spec* spec, double energy,
                      const gin_oracle_config* config,
                      gin_oracle_result* out) {
  GIN_REQUIRE(spec && out, "gin_oracle: null argument");
  return guarded([&] {
    const OracleResult r =
        integrate_rt(EnergyPoint(energy), spec->value, to_cpp(config));
    *out = {r.R,           r.T,          r.U,    to_c(r.A),
            to_c(r.B),     r.tail_residual,      r.step_estimate,
            r.half_width,  r.step,       r.ill_conditioned ? 1 : 0};
  });
}

gin_status gin_oracle_left_right(const gin_spec* spec, double energy,
                                 const gin_oracle_config* config,
                                 double* R_left, double* R_right) {
  GIN_REQUIRE(spec && R_left && R_right, "gin_oracle_left_right: null argument");
  return guarded([&] {
    const HandednessCheck h =
        left_right_check(EnergyPoint(energy), spec->value, to_cpp(config));
    *R_left = h.R_left;
    *R_right = h.R_right;
  });
}

gin_status gin_psi(const gin_spec* spec, double energy, double x,
                   gin_complex* out) {
  GIN_REQUIRE(spec && out, "gin_psi: null argument");
  return guarded([&] {
    *out = to_c(psi_exact(x, EnergyPoint(energy), spec->value).psi);
  });
}

gin_status gin_jost_fit(const gin_spec* spec, double energy, double lo,
                        double hi, int samples, gin_jost* out) {
  GIN_REQUIRE(spec && out, "gin_jost_fit: null argument");
  return guarded([&] {
    const EnergyPoint e(energy);
    const FitWindow window = (lo == 0.0 && hi == 0.0)
                                 ? default_fit_window(e, spec->value)
                                 : FitWindow{lo, hi};
    const JostTriple j =
        jost_fit(e, spec->value, window, samples == 0 ? 64 : samples);
    *out = {to_c(j.A),       to_c(j.B),        to_c(j.C), j.residual_left,
            j.residual_right, j.R(),            j.T()};
  });
}

size_t gin_table_row_count(void) { return table_rows().size(); }

gin_status gin_table_get(size_t index, gin_table_row* out) {
  GIN_REQUIRE(out != nullptr, "gin_table_get: out is null");
  GIN_REQUIRE(index < table_rows().size(), "gin_table_get: index out of range");
  const TableRow& r = table_rows()[index];
  *out = {r.id,     r.sign,           to_c(r.nu),
          r.lambda, r.e_star,         r.n,
          to_c(r.v0_printed),         to_c(r.profile),
          r.no_ss_family ? 1 : 0,     r.v0_discrepancy};
  return GIN_OK;
}

gin_status gin_table_check(size_t index, const gin_grid* grid,
                           unsigned threads, gin_row_verdict* out) {
  GIN_REQUIRE(out != nullptr, "gin_table_check: out is null");
  GIN_REQUIRE(index < table_rows().size(),
              "gin_table_check: index out of range");
  return guarded([&] {
    TableCheckOptions opts;
    if (grid) opts.grid = to_cpp(*grid);
    opts.threads = resolve_threads(threads);
    const RowVerdict v = check_row(table_rows()[index], opts);
    gin_row_verdict r{};
    r.id = v.id;
    r.certified = v.certified;
    r.has_singularity = v.singularity.has_value() ? 1 : 0;
    if (v.singularity) r.singularity = to_c(*v.singularity);
    r.e_rel_error = v.e_rel_error;
    r.e_ok = v.e_ok;
    r.n_ok = v.n_ok;
    r.v0_formula = to_c(v.v0_formula);
    r.v0_ok = v.v0_ok;
    r.v0_flagged = v.v0_flagged;
    r.has_profile = v.profile_found.has_value() ? 1 : 0;
    if (v.profile_found) r.profile_found = to_c(*v.profile_found);
    r.profile_ok = v.profile_ok;
    r.second_excluded = v.second_excluded;
    r.draw_count = std::min<size_t>(v.draws.size(), GIN_MAX_FAMILY_DRAWS);
    for (size_t i = 0; i < r.draw_count; ++i) {
      const FamilyDraw& d = v.draws[i];
      r.draws[i] = {to_c(d.spec.nu()), d.spec.lambda(), d.spec.sign(),
                    d.certified, d.candidates};
    }
    r.no_ss_ok = v.no_ss_ok;
    r.passed = v.passed;
    *out = r;
  });
}

}  // extern "C"
