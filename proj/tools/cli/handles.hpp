#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "ginocchio/ginocchio.h"

namespace gincli {

/// Failure carrying the process exit code.
class CliFailure : public std::runtime_error {
 public:
  CliFailure(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Throws CliFailure with the library message when status is not GIN_OK.
inline void check(gin_status status, const char* context,
                  int exit_code = kExitNumerical) {
  if (status == GIN_OK) return;
  throw CliFailure(exit_code, std::string(context) + ": " +
                                  gin_status_name(status) + ": " +
                                  gin_last_error());
}

struct SpecDeleter {
  void operator()(gin_spec* p) const { gin_spec_destroy(p); }
};
struct ReportDeleter {
  void operator()(gin_ss_report* p) const { gin_ss_report_destroy(p); }
};
struct MinimaDeleter {
  void operator()(gin_minima* p) const { gin_minima_destroy(p); }
};

using SpecHandle = std::unique_ptr<gin_spec, SpecDeleter>;
using ReportHandle = std::unique_ptr<gin_ss_report, ReportDeleter>;
using MinimaHandle = std::unique_ptr<gin_minima, MinimaDeleter>;

inline SpecHandle make_spec(gin_complex nu, double lambda, int sign,
                            int exit_code = kExitConfig) {
  gin_spec* raw = nullptr;
  check(gin_spec_create(nu, lambda, sign, &raw), "invalid potential", exit_code);
  return SpecHandle(raw);
}

}  // namespace gincli
