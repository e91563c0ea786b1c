#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/handles.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> nu;
  std::optional<std::string> lambda;
  std::optional<std::string> sign;
  std::optional<std::string> row;
  std::optional<std::string> emin;
  std::optional<std::string> emax;
  std::optional<std::string> points;
  std::optional<std::string> free;
  std::optional<std::string> parallel;
  std::optional<std::string> out;
  bool time_reversed = false;
  std::string figure;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "key = value case file");
  cmd->add_option("--nu", f.nu, "complex nu, e.g. 4.67+7.8366i");
  cmd->add_option("--lambda", f.lambda, "shape parameter lambda > 0");
  cmd->add_option("--sign", f.sign, "sign multiplying lambda^2 nu(nu+1): + or -");
  cmd->add_option("--row", f.row, "take nu, lambda, sign from a table row");
  cmd->add_option("--emin", f.emin, "lower end of the energy grid");
  cmd->add_option("--emax", f.emax, "upper end of the energy grid");
  cmd->add_option("--points", f.points, "number of grid energies");
  cmd->add_option("--free", f.free, "refinement parameter: nu, lambda, re_nu, im_nu");
  cmd->add_flag("--time-reversed", f.time_reversed, "evaluate at k -> -k");
  cmd->add_option("--parallel", f.parallel, "worker threads (0: all cores)");
  cmd->add_option("--out", f.out, "output file (directory for figure)");
}

gincli::CaseConfig build_config(const Flags& f) {
  gincli::CaseConfig c;
  if (!f.config.empty()) gincli::load_config_file(c, f.config);
  const std::pair<const char*, const std::optional<std::string>*> overrides[] = {
      {"nu", &f.nu},         {"lambda", &f.lambda}, {"sign", &f.sign},
      {"row", &f.row},       {"emin", &f.emin},     {"emax", &f.emax},
      {"points", &f.points}, {"free", &f.free},     {"parallel", &f.parallel},
      {"out", &f.out},
  };
  for (const auto& [key, value] : overrides) {
    if (*value) gincli::apply_setting(c, key, **value);
  }
  if (f.time_reversed) c.time_reversed = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering, spectral singularities and reflectivity minima of "
               "the complex Ginocchio potential"};
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"eval", "F, G, H, J, R, T, U on an energy grid"},
      {"find-ss", "locate and certify spectral singularities"},
      {"minima", "local minima of the reflectivity"},
      {"table1", "reproduce the table of singular cases"},
      {"figure", "data series for a figure (fig1, fig2a-d, fig3)"},
      {"oracle-check", "compare R, T with direct ODE integration"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, flags);
    if (std::string(c.name) == "figure") {
      sub->add_option("name", flags.figure, "figure name")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gincli::kExitConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  return gincli::run_guarded(
      [&] {
        const gincli::CaseConfig config = build_config(flags);
        if (name == "eval") return gincli::cmd_eval(config, std::cout, std::cerr);
        if (name == "find-ss") return gincli::cmd_find_ss(config, std::cout, std::cerr);
        if (name == "minima") return gincli::cmd_minima(config, std::cout, std::cerr);
        if (name == "table1") return gincli::cmd_table1(config, std::cout, std::cerr);
        if (name == "figure") {
          return gincli::cmd_figure(flags.figure, config, std::cout, std::cerr);
        }
        return gincli::cmd_oracle_check(config, std::cout, std::cerr);
      },
      std::cerr);
}
