#include "cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli/handles.hpp"

namespace gincli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& what) {
  throw CliFailure(kExitConfig, what);
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  bad("expected a boolean, got '" + s + "'");
}

std::size_t parse_count(const std::string& s, const char* what) {
  const double v = parse_real(s, what);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    bad(std::string(what) + ": expected a non-negative integer, got '" + s +
        "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

double parse_real(const std::string& text, const char* what) {
  double v = 0.0;
  if (!parse_number(trim(text), v)) {
    bad(std::string(what) + ": not a finite number: '" + text + "'");
  }
  return v;
}

gin_complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty()) bad("empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') {
    double re = 0.0;
    if (!parse_number(s, re)) bad("malformed complex number '" + text + "'");
    return {re, 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  double re = 0.0;
  double im = 0.0;
  if ((!re_text.empty() && !parse_number(re_text, re)) ||
      !parse_number(im_text, im)) {
    bad("malformed complex number '" + text + "'");
  }
  return {re, im};
}

int parse_sign(const std::string& text) {
  const std::string s = trim(text);
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  bad("sign must be + or -, got '" + text + "'");
}

gin_free_parameter parse_free(const std::string& text) {
  const std::string s = trim(text);
  if (s == "nu") return GIN_FREE_NU;
  if (s == "lambda") return GIN_FREE_LAMBDA;
  if (s == "re_nu") return GIN_FREE_RE_NU;
  if (s == "im_nu") return GIN_FREE_IM_NU;
  bad("free must be one of nu, lambda, re_nu, im_nu; got '" + text + "'");
}

void apply_setting(CaseConfig& c, const std::string& key,
                   const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "nu") {
    c.nu = parse_complex(value);
  } else if (key == "lambda") {
    c.lambda = parse_real(value, "lambda");
  } else if (key == "sign") {
    c.sign = parse_sign(value);
  } else if (key == "row") {
    c.row = static_cast<int>(parse_count(value, "row"));
  } else if (key == "emin") {
    c.e_min = parse_real(value, "emin");
  } else if (key == "emax") {
    c.e_max = parse_real(value, "emax");
  } else if (key == "points") {
    c.points = parse_count(value, "points");
  } else if (key == "spacing") {
    if (value == "log") {
      c.linear = false;
    } else if (value == "linear") {
      c.linear = true;
    } else {
      bad("spacing must be log or linear, got '" + value + "'");
    }
  } else if (key == "time_reversed") {
    c.time_reversed = parse_bool(value);
  } else if (key == "parallel") {
    c.parallel = static_cast<unsigned>(parse_count(value, "parallel"));
  } else if (key == "oracle") {
    c.oracle = parse_bool(value);
  } else if (key == "oracle_half_width") {
    c.oracle_config.half_width = parse_real(value, key.c_str());
  } else if (key == "oracle_step") {
    c.oracle_config.step = parse_real(value, key.c_str());
  } else if (key == "oracle_tail_tolerance") {
    c.oracle_config.tail_tolerance = parse_real(value, key.c_str());
  } else if (key == "free") {
    c.free = parse_free(value);
  } else if (key == "candidate_tolerance") {
    c.candidate_tolerance = parse_real(value, key.c_str());
  } else if (key == "outputs") {
    c.outputs.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) c.outputs.push_back(item);
    }
  } else if (key == "out") {
    c.out_path = value;
  } else {
    bad("unknown config key '" + key + "'");
  }
}

void load_config(CaseConfig& config, std::istream& in,
                 const std::string& source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      bad(source + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    try {
      apply_setting(config, key, line.substr(eq + 1));
    } catch (const CliFailure& e) {
      bad(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void load_config_file(CaseConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open config file '" + path + "'");
  load_config(config, in, path);
}

}  // namespace gincli
