#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ginocchio/ginocchio.h"

namespace gincli {

/// 12 significant digits; infinities become INF.
std::string format_number(double v);
/// "a+bi" with both parts formatted by format_number.
std::string format_complex(gin_complex z);

/// Comma-separated rows with LF endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& text);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);

 private:
  void line(const std::vector<std::string>& cells);
  std::ostream& out_;
};

}  // namespace gincli
