#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace gincli {

/// Each command writes its CSV to `out` (or to config.out_path when set),
/// human-readable notes to `err`, and returns the process exit code.
/// Failures are reported as CliFailure.
int cmd_eval(const CaseConfig& config, std::ostream& out, std::ostream& err);
int cmd_find_ss(const CaseConfig& config, std::ostream& out, std::ostream& err);
int cmd_minima(const CaseConfig& config, std::ostream& out, std::ostream& err);
int cmd_table1(const CaseConfig& config, std::ostream& out, std::ostream& err);
int cmd_figure(const std::string& name, const CaseConfig& config,
               std::ostream& out, std::ostream& err);
int cmd_oracle_check(const CaseConfig& config, std::ostream& out,
                     std::ostream& err);

const std::vector<std::string>& figure_names();

/// Exit-code-mapping wrapper used by main and the tests.
int run_guarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace gincli
