#include "cli/csv.hpp"

#include <cmath>
#include <cstdio>

namespace gincli {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "INF" : "-INF";
  if (std::isnan(v)) return "NAN";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(gin_complex z) {
  std::string im = format_number(z.im);
  if (im[0] != '-') im.insert(im.begin(), '+');
  return format_number(z.re) + im + "i";
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void CsvWriter::header(const std::vector<std::string>& names) { line(names); }

void CsvWriter::row(const std::vector<std::string>& cells) { line(cells); }

void CsvWriter::line(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace gincli
