#include "ginocchio/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ginocchio/error.hpp"

namespace ginocchio {

namespace {

constexpr double kSignificance = 1e-6;
constexpr double kImagZero = 1e-12;

double sech_squared(double u) {
  const double e = std::exp(-2.0 * std::abs(u));
  return 4.0 * e / ((1.0 + e) * (1.0 + e));
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be finite and > 0");
  }
}

}  // namespace

double Units::wavenumber(double energy) {
  return std::sqrt(two_m * energy / hbar_squared);
}

PotentialSpec::PotentialSpec(Complex nu, double lambda, int sign)
    : nu_(nu), lambda_(lambda), sign_(sign) {
  require_finite(nu, "nu");
  require_lambda(lambda);
  if (sign != -1 && sign != 1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be -1 or +1");
  }
}

std::string PotentialSpec::describe() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "nu=%.12g%+.12gi lambda=%.12g sign=%c",
                nu_.real(), nu_.imag(), lambda_, sign_ < 0 ? '-' : '+');
  return buf;
}

double x_of_u(double u, double lambda) {
  const double l2 = lambda * lambda;
  if (lambda > 1.0) {
    const double s = std::sqrt(l2 - 1.0);
    return (u + s * std::atan(s * std::tanh(u))) / l2;
  }
  if (lambda < 1.0) {
    const double s = std::sqrt(1.0 - l2);
    return (u - s * std::atanh(s * std::tanh(u))) / l2;
  }
  return u;
}

double x_of_y(double y, double lambda) {
  require_lambda(lambda);
  if (!(std::abs(y) < 1.0)) {
    throw Error(ErrorCode::Domain, "x_of_y: |y| must be < 1");
  }
  const double l2 = lambda * lambda;
  if (lambda > 1.0) {
    const double s = std::sqrt(l2 - 1.0);
    return (std::atanh(y) + s * std::atan(s * y)) / l2;
  }
  if (lambda < 1.0) {
    const double s = std::sqrt(1.0 - l2);
    return (std::atanh(y) - s * std::atanh(s * y)) / l2;
  }
  return std::atanh(y);
}

double dx_dy(double y, double lambda) {
  const double y2 = y * y;
  return 1.0 / ((1.0 - y2) * (1.0 + (lambda * lambda - 1.0) * y2));
}

MappedPoint map_x(double x, double lambda) {
  require_lambda(lambda);
  if (!std::isfinite(x)) throw Error(ErrorCode::Domain, "map_x: x not finite");
  const double ax = std::abs(x);
  const double l2 = lambda * lambda;
  double lo = ax * std::min(1.0, l2);
  double hi = ax * std::max(1.0, l2);
  double u = 0.5 * (lo + hi);
  const double tol = 1e-14 * std::max(1.0, ax);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double f = x_of_u(u, lambda) - ax;
    if (std::abs(f) <= tol) break;
    if (f > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double t = std::tanh(u);
    const double slope = 1.0 / (1.0 + (l2 - 1.0) * t * t);
    double next = u - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == u) break;
    u = next;
  }
  if (x < 0.0) u = -u;
  return {u, std::tanh(u), sech_squared(u)};
}

double y_of_x(double x, double lambda) { return map_x(x, lambda).y; }

Complex potential_at(const MappedPoint& p, const PotentialSpec& spec) {
  const double l2 = spec.lambda() * spec.lambda();
  const double y2 = p.y * p.y;
  const double shape =
      0.25 * (1.0 - l2) *
      (5.0 * (1.0 - l2) * y2 * y2 - (7.0 - l2) * y2 + 2.0);
  return (static_cast<double>(spec.sign()) * l2 * spec.strength() + shape) *
         p.one_minus_y2;
}

Complex potential_value(double x, const PotentialSpec& spec) {
  return potential_at(map_x(x, spec.lambda()), spec);
}

Complex potential_at_origin(const PotentialSpec& spec) {
  const double l2 = spec.lambda() * spec.lambda();
  return static_cast<double>(spec.sign()) * l2 * spec.strength() +
         0.5 * (1.0 - l2);
}

const char* to_string(Profile p) {
  switch (p) {
    case Profile::Barrier: return "barrier";
    case Profile::Well: return "well";
    case Profile::WellWithSideBarriers: return "well_with_side_barriers";
  }
  return "?";
}

const char* to_string(Emissivity e) {
  switch (e) {
    case Emissivity::Emissive: return "emissive";
    case Emissivity::Absorptive: return "absorptive";
    case Emissivity::Mixed: return "mixed";
    case Emissivity::None: return "none";
  }
  return "?";
}

std::vector<double> profile_grid(double lambda, std::size_t points) {
  require_lambda(lambda);
  if (points < 3) {
    throw Error(ErrorCode::InvalidArgument, "profile_grid: need >= 3 points");
  }
  constexpr double y_max = 1.0 - 1e-6;
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double y =
        -y_max + 2.0 * y_max * static_cast<double>(i) /
                     static_cast<double>(points - 1);
    xs[i] = x_of_y(y, lambda);
  }
  return xs;
}

Profile classify_profile(const PotentialSpec& spec,
                         std::span<const double> x_grid) {
  if (x_grid.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "classify_profile: grid too small");
  }
  std::vector<double> re(x_grid.size());
  std::transform(x_grid.begin(), x_grid.end(), re.begin(),
                 [&](double x) { return potential_value(x, spec).real(); });

  const auto [min_it, max_it] = std::minmax_element(re.begin(), re.end());
  const double scale = std::max(std::abs(*min_it), std::abs(*max_it));
  const double floor = kSignificance * scale;
  const bool has_pos = *max_it > floor;
  const bool has_neg = *min_it < -floor;

  // Local extrema counted on significant values only.
  auto count_extrema = [&](bool maxima) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < re.size(); ++i) {
      if (std::abs(re[i]) <= floor) continue;
      const double a = maxima ? re[i] : -re[i];
      const double l = maxima ? re[i - 1] : -re[i - 1];
      const double r = maxima ? re[i + 1] : -re[i + 1];
      if (a > l && a >= r) ++count;
    }
    return count;
  };

  if (has_pos && !has_neg && count_extrema(true) == 1) return Profile::Barrier;
  if (has_neg && !has_pos && count_extrema(false) == 1) return Profile::Well;
  if (has_pos && has_neg) {
    const double x_max = std::abs(x_grid[max_it - re.begin()]);
    const double x_min = std::abs(x_grid[min_it - re.begin()]);
    if (x_max > x_min) return Profile::WellWithSideBarriers;
  }
  std::ostringstream msg;
  msg << "classify_profile: unrecognised Re V pattern for " << spec.describe()
      << " (max " << *max_it << " at x=" << x_grid[max_it - re.begin()]
      << ", min " << *min_it << " at x=" << x_grid[min_it - re.begin()]
      << ")";
  throw Error(ErrorCode::Unclassifiable, msg.str());
}

Emissivity emissivity(const PotentialSpec& spec,
                      std::span<const double> x_grid) {
  bool pos = false;
  bool neg = false;
  for (double x : x_grid) {
    const double im = potential_value(x, spec).imag();
    if (im > kImagZero) pos = true;
    if (im < -kImagZero) neg = true;
  }
  if (pos && neg) return Emissivity::Mixed;
  if (pos) return Emissivity::Emissive;
  if (neg) return Emissivity::Absorptive;
  return Emissivity::None;
}

}  // namespace ginocchio
