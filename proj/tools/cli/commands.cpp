#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/handles.hpp"

namespace gincli {

namespace {

constexpr double kOracleAgreement = 1e-3;

struct ResolvedCase {
  SpecHandle spec;
  gin_complex nu{};
  double lambda = 1.0;
  int sign = 1;
};

gin_table_row table_row_by_id(int id) {
  const size_t count = gin_table_row_count();
  for (size_t i = 0; i < count; ++i) {
    gin_table_row row{};
    check(gin_table_get(i, &row), "table row");
    if (row.id == id) return row;
  }
  throw CliFailure(kExitConfig, "no table row " + std::to_string(id));
}

ResolvedCase resolve_case(const CaseConfig& c) {
  ResolvedCase r;
  if (c.row) {
    const gin_table_row row = table_row_by_id(*c.row);
    if (row.no_ss_family) {
      throw CliFailure(kExitConfig,
                       "row " + std::to_string(row.id) +
                           " is a parameter family; give nu and lambda");
    }
    r.nu = row.nu;
    r.lambda = row.lambda;
    r.sign = row.sign;
  } else if (!c.nu || !c.lambda || !c.sign) {
    throw CliFailure(kExitConfig,
                     "the case needs nu, lambda and sign (or a table row)");
  }
  if (c.nu) r.nu = *c.nu;
  if (c.lambda) r.lambda = *c.lambda;
  if (c.sign) r.sign = *c.sign;
  r.spec = make_spec(r.nu, r.lambda, r.sign);
  return r;
}

gin_grid resolve_grid(const CaseConfig& c, gin_grid defaults) {
  gin_grid g = defaults;
  if (c.e_min) g.e_min = *c.e_min;
  if (c.e_max) g.e_max = *c.e_max;
  if (c.points) g.points = *c.points;
  if (c.linear) g.linear = *c.linear ? 1 : 0;
  check(gin_grid_validate(&g), "invalid energy grid", kExitConfig);
  return g;
}

gin_grid default_grid() {
  gin_grid g{};
  gin_grid_default(&g);
  return g;
}

std::vector<double> grid_energies(const gin_grid& g) {
  std::vector<double> es(g.points);
  check(gin_grid_energies(&g, es.data()), "energy grid", kExitConfig);
  return es;
}

gin_scatter_options scatter_options(const CaseConfig& c) {
  gin_scatter_options o{};
  o.time_reversed = c.time_reversed ? 1 : 0;
  return o;
}

std::string describe(gin_complex nu, double lambda, int sign) {
  return "nu=" + format_complex(nu) + " lambda=" + format_number(lambda) +
         " sign=" + (sign < 0 ? "-" : "+");
}

std::string describe(const ResolvedCase& r) {
  gin_complex v0{};
  check(gin_potential_origin(r.spec.get(), &v0), "V(0)");
  return describe(r.nu, r.lambda, r.sign) + " V0=" + format_complex(v0);
}

std::vector<gin_point> evaluate(const gin_spec* spec,
                                const std::vector<double>& es,
                                const gin_scatter_options& opts,
                                unsigned threads) {
  std::vector<gin_point> pts(es.size());
  size_t failed = 0;
  const gin_status s = gin_evaluate_many(spec, es.data(), es.size(), &opts,
                                         threads, pts.data(), &failed);
  if (s != GIN_OK) {
    throw CliFailure(kExitNumerical,
                     "evaluation failed at E = " + format_number(es[failed]) +
                         ": " + gin_status_name(s) + ": " + gin_last_error());
  }
  return pts;
}

// Writes to config.out_path when set, otherwise to `out`.
template <class Fn>
int with_output(const CaseConfig& config, std::ostream& out, Fn&& fn) {
  if (config.out_path.empty()) return fn(out);
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    throw CliFailure(kExitConfig,
                     "cannot open output file '" + config.out_path + "'");
  }
  const int code = fn(file);
  file.flush();
  if (!file) {
    throw CliFailure(kExitNumerical,
                     "failed writing '" + config.out_path + "'");
  }
  return code;
}

std::optional<gin_singularity> first_singularity(
    const gin_spec* spec, const gin_search_options& opts) {
  const gin_grid grid = default_grid();
  gin_ss_report* raw = nullptr;
  check(gin_find_ss(spec, &grid, &opts, &raw), "singularity search");
  ReportHandle report(raw);
  if (gin_ss_report_count(report.get()) == 0) return std::nullopt;
  gin_singularity ss{};
  check(gin_ss_report_get(report.get(), 0, &ss), "singularity search");
  return ss;
}

const char* free_name(gin_free_parameter f) {
  switch (f) {
    case GIN_FREE_LAMBDA: return "lambda";
    case GIN_FREE_RE_NU: return "re_nu";
    case GIN_FREE_IM_NU: return "im_nu";
    case GIN_FREE_NU: return "nu";
  }
  return "?";
}

const char* yes_no(int v) { return v ? "yes" : "no"; }

}  // namespace

int run_guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const CliFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

// ---- eval -----------------------------------------------------------------

int cmd_eval(const CaseConfig& config, std::ostream& out, std::ostream&) {
  const ResolvedCase rc = resolve_case(config);
  const gin_grid grid = resolve_grid(config, default_grid());
  const auto es = grid_energies(grid);
  const gin_scatter_options opts = scatter_options(config);
  const auto pts = evaluate(rc.spec.get(), es, opts, config.parallel);

  std::vector<std::optional<gin_oracle_result>> oracle(es.size());
  if (config.oracle) {
    for (size_t i = 0; i < es.size(); ++i) {
      if (pts[i].at_singularity) continue;
      gin_oracle_result o{};
      const gin_status s =
          gin_oracle(rc.spec.get(), es[i], &config.oracle_config, &o);
      if (s != GIN_OK) {
        throw CliFailure(kExitNumerical,
                         "oracle failed at E = " + format_number(es[i]) +
                             ": " + gin_status_name(s) + ": " +
                             gin_last_error());
      }
      oracle[i] = o;
    }
  }

  using Column = std::string (*)(const gin_point&);
  static const std::vector<std::pair<std::string, Column>> kColumns = {
      {"F", [](const gin_point& p) { return format_number(p.delta.re); }},
      {"G", [](const gin_point& p) { return format_number(p.delta.im); }},
      {"H", [](const gin_point& p) { return format_number(p.omega.re); }},
      {"J", [](const gin_point& p) { return format_number(p.omega.im); }},
      {"R", [](const gin_point& p) { return format_number(p.R); }},
      {"T", [](const gin_point& p) { return format_number(p.T); }},
      {"U", [](const gin_point& p) { return format_number(p.U); }},
  };
  // E is always the first column; listing it is allowed.
  std::vector<std::string> selected;
  for (const auto& name : config.outputs) {
    if (name != "E") selected.push_back(name);
  }
  if (config.outputs.empty()) {
    for (const auto& [name, fn] : kColumns) selected.push_back(name);
    if (config.oracle) {
      selected.push_back("R_oracle");
      selected.push_back("T_oracle");
    }
  }
  for (const auto& name : selected) {
    const bool known =
        std::any_of(kColumns.begin(), kColumns.end(),
                    [&](const auto& c) { return c.first == name; }) ||
        name == "R_oracle" || name == "T_oracle";
    if (!known) {
      throw CliFailure(kExitConfig, "unknown output column '" + name + "'");
    }
    if ((name == "R_oracle" || name == "T_oracle") && !config.oracle) {
      throw CliFailure(kExitConfig, "column '" + name + "' needs oracle = true");
    }
  }

  return with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.comment(describe(rc) +
                (config.time_reversed ? " time_reversed" : ""));
    std::vector<std::string> header{"E"};
    header.insert(header.end(), selected.begin(), selected.end());
    csv.header(header);
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<std::string> cells{format_number(es[i])};
      for (const auto& name : selected) {
        if (name == "R_oracle" || name == "T_oracle") {
          if (!oracle[i]) {
            cells.push_back("INF");
          } else {
            cells.push_back(format_number(name == "R_oracle" ? oracle[i]->R
                                                             : oracle[i]->T));
          }
          continue;
        }
        for (const auto& [col, fn] : kColumns) {
          if (col == name) cells.push_back(fn(pts[i]));
        }
      }
      csv.row(cells);
    }
    return kExitOk;
  });
}

// ---- find-ss --------------------------------------------------------------

int cmd_find_ss(const CaseConfig& config, std::ostream& out,
                std::ostream& err) {
  const ResolvedCase rc = resolve_case(config);
  const gin_grid grid = resolve_grid(config, default_grid());
  gin_search_options opts{};
  gin_search_options_default(&opts);
  opts.free = config.free;
  opts.candidate_tolerance = config.candidate_tolerance;
  opts.threads = config.parallel;
  opts.scattering = scatter_options(config);

  gin_ss_report* raw = nullptr;
  check(gin_find_ss(rc.spec.get(), &grid, &opts, &raw), "singularity search");
  ReportHandle report(raw);
  gin_second_verdict second{};
  check(gin_ss_report_second(report.get(), &second), "second-SS verdict");

  err << describe(rc) << '\n';
  const size_t ncand = gin_ss_report_candidate_count(report.get());
  err << ncand << " candidate(s) where G changes sign\n";
  for (size_t i = 0; i < ncand; ++i) {
    gin_candidate c{};
    check(gin_ss_report_candidate(report.get(), i, &c), "candidate");
    err << "  E=" << format_number(c.energy) << " n=" << c.nearest_n
        << " |F-n|=" << format_number(c.f_distance)
        << " closest |delta-n|=" << format_number(c.closest_distance)
        << " at E=" << format_number(c.closest_energy) << '\n';
  }
  const size_t count = gin_ss_report_count(report.get());
  err << count << " certified spectral singularit"
      << (count == 1 ? "y" : "ies") << '\n';
  err << "second singularity "
      << (second.excluded ? "excluded (H > 0 on the range)"
                          : "not excluded, H <= 0 at E=" +
                                format_number(second.witness_energy))
      << "; min H=" << format_number(second.min_H)
      << " at E=" << format_number(second.min_H_energy) << '\n';

  with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.comment(describe(rc));
    csv.header({"E_star", "n", "residual", "nu", "lambda", "sign", "free",
                "iterations", "converged", "second_excluded", "min_H",
                "min_H_energy"});
    for (size_t i = 0; i < count; ++i) {
      gin_singularity ss{};
      check(gin_ss_report_get(report.get(), i, &ss), "singularity");
      csv.row({format_number(ss.energy), std::to_string(ss.n),
               format_number(ss.residual), format_complex(ss.nu),
               format_number(ss.lambda), ss.sign < 0 ? "-" : "+",
               free_name(ss.free), std::to_string(ss.iterations),
               yes_no(ss.converged), yes_no(second.excluded),
               format_number(second.min_H),
               format_number(second.min_H_energy)});
    }
    return kExitOk;
  });
  return count > 0 ? kExitOk : kExitNotFound;
}

// ---- minima ---------------------------------------------------------------

int cmd_minima(const CaseConfig& config, std::ostream& out, std::ostream& err) {
  const ResolvedCase rc = resolve_case(config);
  const gin_grid grid = resolve_grid(config, default_grid());
  const gin_scatter_options opts = scatter_options(config);
  gin_minima* raw = nullptr;
  check(gin_find_minima(rc.spec.get(), &grid, config.parallel, &opts, &raw),
        "minima scan");
  MinimaHandle minima(raw);
  const size_t count = gin_minima_count(minima.get());
  size_t zeros = 0;
  with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.comment(describe(rc));
    csv.header({"E", "R", "reflectionless"});
    for (size_t i = 0; i < count; ++i) {
      gin_minimum m{};
      check(gin_minima_get(minima.get(), i, &m), "minimum");
      zeros += m.reflectionless ? 1 : 0;
      csv.row({format_number(m.energy), format_number(m.R),
               yes_no(m.reflectionless)});
    }
    return kExitOk;
  });
  err << count << " local minima of R, " << zeros << " reflectionless\n";
  return kExitOk;
}

// ---- table1 ---------------------------------------------------------------

int cmd_table1(const CaseConfig& config, std::ostream& out, std::ostream& err) {
  const size_t count = gin_table_row_count();
  std::vector<gin_table_row> rows(count);
  std::vector<gin_row_verdict> verdicts(count);
  for (size_t i = 0; i < count; ++i) {
    check(gin_table_get(i, &rows[i]), "table row");
    check(gin_table_check(i, nullptr, config.parallel, &verdicts[i]),
          ("table row " + std::to_string(rows[i].id)).c_str());
  }

  size_t reproduced = 0;
  size_t confirmed = 0;
  std::vector<int> failed;
  std::vector<int> flagged;
  with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"row", "sign", "nu", "lambda", "E_printed", "E_found",
                "E_rel_error", "n_printed", "n_found", "V0_printed",
                "V0_formula", "profile_printed", "profile_found", "E_ok",
                "n_ok", "V0_ok", "profile_ok", "second_excluded", "flag",
                "verdict"});
    for (size_t i = 0; i < count; ++i) {
      const gin_table_row& r = rows[i];
      const gin_row_verdict& v = verdicts[i];
      if (!v.passed) failed.push_back(r.id);
      if (r.no_ss_family) {
        confirmed += v.no_ss_ok ? 1 : 0;
        for (size_t d = 0; d < v.draw_count; ++d) {
          const gin_family_draw& draw = v.draws[d];
          csv.row({std::to_string(r.id), r.sign < 0 ? "-" : "+",
                   format_complex(draw.nu), format_number(draw.lambda), "",
                   "", "", "", "", "", "", "", "", "", "", "", "", "",
                   "certified=" + std::to_string(draw.certified),
                   draw.certified == 0 ? "no_ss" : "FAIL"});
        }
        continue;
      }
      reproduced += (v.e_ok && v.n_ok) ? 1 : 0;
      if (v.v0_flagged) flagged.push_back(r.id);
      csv.row({std::to_string(r.id), r.sign < 0 ? "-" : "+",
               format_complex(r.nu), format_number(r.lambda),
               format_number(r.e_star),
               v.has_singularity ? format_number(v.singularity.energy) : "",
               v.has_singularity ? format_number(v.e_rel_error) : "",
               std::to_string(r.n),
               v.has_singularity ? std::to_string(v.singularity.n) : "",
               format_complex(r.v0_printed), format_complex(v.v0_formula),
               gin_profile_name(r.profile),
               v.has_profile ? gin_profile_name(v.profile_found)
                             : "unclassifiable",
               yes_no(v.e_ok), yes_no(v.n_ok), yes_no(v.v0_ok),
               yes_no(v.profile_ok), yes_no(v.second_excluded),
               v.v0_flagged ? "V0_discrepancy" : "",
               v.passed ? "pass" : "FAIL"});
    }
    return kExitOk;
  });

  size_t ss_rows = 0;
  size_t family_rows = 0;
  for (const auto& r : rows) (r.no_ss_family ? family_rows : ss_rows)++;
  err << reproduced << " of " << ss_rows << " singular rows reproduced, "
      << confirmed << " of " << family_rows << " no-SS families confirmed\n";
  for (size_t i = 0; i < count; ++i) {
    if (!verdicts[i].v0_flagged) continue;
    err << "row " << rows[i].id << ": printed V(0) "
        << format_complex(rows[i].v0_printed) << " vs formula "
        << format_complex(verdicts[i].v0_formula) << " ("
        << rows[i].v0_discrepancy << ")\n";
  }
  if (!failed.empty()) {
    err << "failed rows:";
    for (int id : failed) err << ' ' << id;
    err << '\n';
    return kExitNotFound;
  }
  return kExitOk;
}

// ---- figure ---------------------------------------------------------------

namespace {

struct Panel {
  std::string name;
  std::string text;
};

struct FigureCase {
  gin_complex nu;
  double lambda;
  int sign;
  std::optional<gin_complex> hermitian_nu;
  bool has_ss;
  double e_min;
  double e_max;
  double im_scale;  // panel (b) scaling of Im V
  bool full;        // panels b-d as well as a
};

constexpr size_t kFigurePoints = 10000;
constexpr size_t kProfilePoints = 801;

FigureCase figure_case(const std::string& name) {
  const gin_complex herm{-0.5, 2.0};
  if (name == "fig1") {
    const gin_table_row r = table_row_by_id(11);
    return {r.nu, r.lambda, r.sign, std::nullopt, true, 1.0, 400.0, 1.0, true};
  }
  if (name == "fig2a") return {{-0.6, -2.0}, 6.0, -1, herm, false, 1.0, 1000.0, 1.0, false};
  if (name == "fig2b") return {{-0.6, 2.0}, 6.0, -1, herm, true, 1.0, 1000.0, 1.0, false};
  if (name == "fig2c") return {{-0.6, -2.0}, 6.0, 1, herm, false, 1.0, 1000.0, 1.0, false};
  if (name == "fig2d") return {{-0.6, 2.0}, 6.0, 1, herm, false, 1.0, 1000.0, 1.0, false};
  if (name == "fig3") {
    const gin_table_row r = table_row_by_id(17);
    return {r.nu, r.lambda, r.sign, gin_complex{-0.5, 0.5}, true, 1.0, 300.0,
            10.0, true};
  }
  throw CliFailure(kExitConfig, "unknown figure '" + name + "'");
}

std::vector<Panel> build_figure(const std::string& name, unsigned threads) {
  const FigureCase fc = figure_case(name);
  const SpecHandle spec = make_spec(fc.nu, fc.lambda, fc.sign, kExitNumerical);
  const gin_grid grid{fc.e_min, fc.e_max, kFigurePoints, 1};
  const auto es = grid_energies(grid);
  const gin_scatter_options opts{};
  const auto pts = evaluate(spec.get(), es, opts, threads);

  std::vector<gin_point> herm;
  if (fc.hermitian_nu) {
    const SpecHandle h = make_spec(*fc.hermitian_nu, fc.lambda, fc.sign,
                                   kExitNumerical);
    herm = evaluate(h.get(), es, opts, threads);
  }
  std::optional<gin_singularity> ss;
  std::vector<gin_point> refined;
  if (fc.has_ss) {
    gin_search_options so{};
    gin_search_options_default(&so);
    so.threads = threads;
    ss = first_singularity(spec.get(), so);
    if (!ss) {
      throw CliFailure(kExitNumerical, name + ": no spectral singularity found");
    }
    gin_spec* raw = nullptr;
    check(gin_singularity_spec(&*ss, &raw), "refined spec");
    const SpecHandle rs(raw);
    refined = evaluate(rs.get(), es, opts, threads);
  }

  std::string echo = describe(fc.nu, fc.lambda, fc.sign);
  if (fc.hermitian_nu) {
    echo += " hermitian_nu=" + format_complex(*fc.hermitian_nu);
  }
  if (ss) {
    echo += " refined_nu=" + format_complex(ss->nu) +
            " E_star=" + format_number(ss->energy) +
            " n=" + std::to_string(ss->n);
  }

  std::vector<Panel> panels;
  auto emit = [&](const std::string& panel,
                  const std::vector<std::string>& header, auto&& fill) {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.comment(echo);
    csv.header(header);
    fill(csv);
    panels.push_back({panel, os.str()});
  };

  const std::string base = fc.full ? name + "_a" : name;
  std::vector<std::string> header{"E"};
  if (fc.hermitian_nu) {
    header.insert(header.end(), {"R_hermitian", "T_hermitian"});
  }
  header.insert(header.end(), {"R", "T"});
  if (ss) header.insert(header.end(), {"R_refined", "T_refined"});
  emit(base, header, [&](CsvWriter& csv) {
    for (size_t i = 0; i < es.size(); ++i) {
      std::vector<std::string> cells{format_number(es[i])};
      if (!herm.empty()) {
        cells.push_back(format_number(herm[i].R));
        cells.push_back(format_number(herm[i].T));
      }
      cells.push_back(format_number(pts[i].R));
      cells.push_back(format_number(pts[i].T));
      if (!refined.empty()) {
        cells.push_back(format_number(refined[i].R));
        cells.push_back(format_number(refined[i].T));
      }
      csv.row(cells);
    }
  });
  if (!fc.full) return panels;

  double x_max = 0.0;
  check(gin_x_of_y(0.999, fc.lambda, &x_max), "profile range");
  const std::string im_col = fc.im_scale == 1.0 ? "ImV" : "ImV_x10";
  emit(name + "_b", {"x", "ReV", im_col}, [&](CsvWriter& csv) {
    for (size_t i = 0; i < kProfilePoints; ++i) {
      const double x =
          -x_max + 2.0 * x_max * static_cast<double>(i) / (kProfilePoints - 1);
      gin_complex v{};
      check(gin_potential(spec.get(), x, &v), "potential");
      csv.row({format_number(x), format_number(v.re),
               format_number(fc.im_scale * v.im)});
    }
  });
  emit(name + "_c", {"E", "F", "G"}, [&](CsvWriter& csv) {
    for (size_t i = 0; i < es.size(); ++i) {
      csv.row({format_number(es[i]), format_number(pts[i].delta.re),
               format_number(pts[i].delta.im)});
    }
  });
  emit(name + "_d", {"E", "H", "J"}, [&](CsvWriter& csv) {
    for (size_t i = 0; i < es.size(); ++i) {
      csv.row({format_number(es[i]), format_number(pts[i].omega.re),
               format_number(pts[i].omega.im)});
    }
  });
  return panels;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig1",  "fig2a", "fig2b",
                                                 "fig2c", "fig2d", "fig3"};
  return names;
}

int cmd_figure(const std::string& name, const CaseConfig& config,
               std::ostream& out, std::ostream& err) {
  const auto& names = figure_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw CliFailure(kExitConfig, "unknown figure '" + name + "'");
  }
  const auto panels = build_figure(name, config.parallel);
  if (config.out_path.empty()) {
    for (const auto& p : panels) out << "# panel " << p.name << '\n' << p.text;
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(config.out_path, ec);
  if (ec) {
    throw CliFailure(kExitConfig, "cannot create directory '" +
                                      config.out_path + "': " + ec.message());
  }
  for (const auto& p : panels) {
    const auto path = std::filesystem::path(config.out_path) / (p.name + ".csv");
    std::ofstream file(path, std::ios::binary);
    file << p.text;
    if (!file) {
      throw CliFailure(kExitNumerical, "failed writing '" + path.string() + "'");
    }
    err << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

// ---- oracle-check ---------------------------------------------------------

int cmd_oracle_check(const CaseConfig& config, std::ostream& out,
                     std::ostream& err) {
  const ResolvedCase rc = resolve_case(config);
  gin_grid defaults{1.0, 400.0, 20, 1};
  const gin_grid grid = resolve_grid(config, defaults);
  const auto es = grid_energies(grid);
  const gin_scatter_options opts = scatter_options(config);
  if (config.time_reversed) {
    throw CliFailure(kExitConfig,
                     "oracle-check integrates the physical problem only; "
                     "drop --time-reversed");
  }
  const auto pts = evaluate(rc.spec.get(), es, opts, config.parallel);

  size_t disagreements = 0;
  size_t skipped = 0;
  with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.comment(describe(rc));
    csv.header({"E", "R", "T", "R_oracle", "T_oracle", "rel_R", "rel_T",
                "step_estimate", "R_left", "R_right", "status"});
    for (size_t i = 0; i < es.size(); ++i) {
      gin_oracle_result o{};
      const gin_status s =
          gin_oracle(rc.spec.get(), es[i], &config.oracle_config, &o);
      if (s != GIN_OK) {
        throw CliFailure(kExitNumerical,
                         "oracle failed at E = " + format_number(es[i]) +
                             ": " + gin_status_name(s) + ": " +
                             gin_last_error());
      }
      double r_left = 0.0;
      double r_right = 0.0;
      check(gin_oracle_left_right(rc.spec.get(), es[i], &config.oracle_config,
                                  &r_left, &r_right),
            "left/right check");
      const double rel_r = std::abs(o.R - pts[i].R) / std::max(pts[i].R, 1e-300);
      const double rel_t = std::abs(o.T - pts[i].T) / std::max(pts[i].T, 1e-300);
      std::string status = "ok";
      if (pts[i].at_singularity || o.ill_conditioned) {
        status = "singular";
        ++skipped;
      } else if (!(rel_r <= kOracleAgreement && rel_t <= kOracleAgreement)) {
        status = "DISAGREE";
        ++disagreements;
      }
      csv.row({format_number(es[i]), format_number(pts[i].R),
               format_number(pts[i].T), format_number(o.R), format_number(o.T),
               format_number(rel_r), format_number(rel_t),
               format_number(o.step_estimate), format_number(r_left),
               format_number(r_right), status});
    }
    return kExitOk;
  });
  err << es.size() - disagreements - skipped << " of " << es.size()
      << " energies agree to relative " << format_number(kOracleAgreement);
  if (skipped) err << " (" << skipped << " at a singularity skipped)";
  err << '\n';
  return disagreements == 0 ? kExitOk : kExitNotFound;
}

}  // namespace gincli
