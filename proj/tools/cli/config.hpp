#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ginocchio/ginocchio.h"

namespace gincli {

/// One scan case. Unset fields fall back to per-command defaults.
struct CaseConfig {
  std::optional<gin_complex> nu;
  std::optional<double> lambda;
  std::optional<int> sign;
  std::optional<int> row;  ///< take nu, lambda and sign from a table row

  std::optional<double> e_min;
  std::optional<double> e_max;
  std::optional<std::size_t> points;
  std::optional<bool> linear;

  bool time_reversed = false;
  unsigned parallel = 0;  ///< 0: hardware concurrency
  bool oracle = false;    ///< add oracle columns to eval output
  gin_oracle_config oracle_config{};
  gin_free_parameter free = GIN_FREE_NU;
  double candidate_tolerance = 0.05;
  std::vector<std::string> outputs;  ///< eval column selection; empty: all
  std::string out_path;
};

/// Parses "a+bi", "a-bi", "a", "bi", "-i" and the like. Throws CliFailure
/// (exit 2) on malformed text.
gin_complex parse_complex(const std::string& text);
double parse_real(const std::string& text, const char* what);
int parse_sign(const std::string& text);
gin_free_parameter parse_free(const std::string& text);

/// Applies one key = value pair. Throws CliFailure (exit 2) on unknown keys
/// or bad values.
void apply_setting(CaseConfig& config, const std::string& key,
                   const std::string& value);

/// Reads a key = value file; '#' starts a comment.
void load_config(CaseConfig& config, std::istream& in,
                 const std::string& source);
void load_config_file(CaseConfig& config, const std::string& path);

}  // namespace gincli
