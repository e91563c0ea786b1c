#include "ginocchio/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "ginocchio/error.hpp"

namespace ginocchio {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494002;
constexpr double kHalfLogTwoPi = 0.91893853320467274;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSeriesTolerance = 1e-15;
constexpr int kSeriesCap = 10000;
constexpr double kDegenerateGap = 1e-8;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Largest w for which the direct series is tried above 1/2.
constexpr double kSeriesReach = 0.95;
// Series results this accurate are taken without trying the transformation.
constexpr double kGoodEnough = 1e-14;
constexpr double kPolynomialSnap = 1e-12;

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double wrap_phase(double phi) {
  phi = std::remainder(phi, 2.0 * kPi);
  if (phi <= -kPi) phi += 2.0 * kPi;
  return phi;
}

// Principal log of sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double x = z.real() - 2.0 * std::nearbyint(0.5 * z.real());
  const double y = z.imag();
  if (std::abs(y) < 20.0) {
    const Complex s(std::sin(kPi * x) * std::cosh(kPi * y),
                    std::cos(kPi * x) * std::sinh(kPi * y));
    return std::log(s);
  }
  const double sgn = y > 0 ? 1.0 : -1.0;
  return {kPi * std::abs(y) - std::numbers::ln2,
          wrap_phase(sgn * (0.5 * kPi - kPi * x))};
}

// Non-positive integer -m within the snapping tolerance, or -1 if none.
int polynomial_degree(Complex z) {
  const double r = std::nearbyint(z.real());
  if (r > 0.0 || std::abs(z - Complex(r, 0.0)) >= kPolynomialSnap) return -1;
  return static_cast<int>(-r);
}

// log(1/Gamma(z)), with a flag for the zeros of 1/Gamma.
struct LogRecipGamma {
  Complex value;
  bool zero = false;
};

LogRecipGamma log_recip_gamma(Complex z) {
  if (near_nonpositive_integer(z)) return {{}, true};
  return {-log_gamma(z), false};
}

}  // namespace

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be finite");
  }
}

bool near_nonpositive_integer(Complex z, double tol) {
  const double r = std::nearbyint(z.real());
  return r <= 0.0 && std::abs(z - Complex(r, 0.0)) < tol;
}

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma argument");
  if (near_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "log_gamma: pole at z = " << z;
    throw Error(ErrorCode::Pole, msg.str());
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  const double correction =
      std::copysign(2.0 * kPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
  return Complex(kLogPi, correction) - log_sin_pi(z) -
         lanczos_log_gamma(1.0 - z);
}

GammaLogParts gamma_magnitude_phase(Complex z) {
  const Complex lg = log_gamma(z);
  return {lg.real(), lg.imag()};
}

Hyp2f1Result hyp2f1_series(Complex a, Complex b, Complex c, double w) {
  require_finite(a, "hyp2f1 a");
  require_finite(b, "hyp2f1 b");
  require_finite(c, "hyp2f1 c");
  if (near_nonpositive_integer(c)) {
    throw Error(ErrorCode::Pole, "hyp2f1: c is a non-positive integer");
  }
  const int deg_a = polynomial_degree(a);
  const int deg_b = polynomial_degree(b);
  if (deg_a >= 0) a = Complex(-deg_a, 0.0);
  if (deg_b >= 0) b = Complex(-deg_b, 0.0);
  const bool polynomial = deg_a >= 0 || deg_b >= 0;

  Hyp2f1Result out;
  out.method = polynomial ? Hyp2f1Method::Polynomial : Hyp2f1Method::Series;
  Complex term = 1.0;
  Complex sum = 1.0;
  double magnitude = 1.0;
  out.terms = 1;
  for (int n = 0;; ++n) {
    if (w == 0.0) break;
    const double nd = static_cast<double>(n);
    term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * w;
    if (term == 0.0) break;
    sum += term;
    magnitude += std::abs(term);
    ++out.terms;
    const double ratio = std::abs(term) / std::abs(sum);
    out.achieved_tolerance = ratio;
    if (ratio < kSeriesTolerance) break;
    if (out.terms >= kSeriesCap) {
      std::ostringstream msg;
      msg << "hyp2f1: series did not converge in " << kSeriesCap
          << " terms (w = " << w << ", last ratio " << ratio << ")";
      throw Error(ErrorCode::NoConvergence, msg.str());
    }
  }
  if (polynomial) out.achieved_tolerance = 0.0;
  out.value = sum;
  out.error_estimate =
      out.achieved_tolerance + 4.0 * kEps * magnitude / std::abs(sum);
  return out;
}

Hyp2f1Result hyp2f1_transformed(Complex a, Complex b, Complex c, [[maybe_unused]] double w,
                                double one_minus_w) {
  const Complex s = c - a - b;
  if (std::abs(s - std::nearbyint(s.real())) < kDegenerateGap) {
    throw Error(ErrorCode::TransformDegenerate,
                "hyp2f1: c - a - b is an integer; 1 - w transformation is "
                "degenerate");
  }
  if (near_nonpositive_integer(c)) {
    throw Error(ErrorCode::Pole, "hyp2f1: c is a non-positive integer");
  }
  const Complex log_gc = log_gamma(c);

  Hyp2f1Result out;
  out.method = Hyp2f1Method::Transformed;
  Complex value = 0.0;
  // Absolute error budget of the two terms, each relative to its size.
  double error = 0.0;
  const auto add = [&](const Complex& log_pref, const Hyp2f1Result& f) {
    const Complex term = std::exp(log_pref) * f.value;
    value += term;
    const double log_error = 8.0 * kEps * (1.0 + std::abs(log_pref));
    error += std::abs(term) * (log_error + f.error_estimate);
  };

  const LogRecipGamma ca = log_recip_gamma(c - a);
  const LogRecipGamma cb = log_recip_gamma(c - b);
  if (!ca.zero && !cb.zero) {
    const Hyp2f1Result f1 = hyp2f1_series(a, b, 1.0 - s, one_minus_w);
    add(log_gc + log_gamma(s) + ca.value + cb.value, f1);
    out.terms += f1.terms;
    out.achieved_tolerance = f1.achieved_tolerance;
  }
  const LogRecipGamma ra = log_recip_gamma(a);
  const LogRecipGamma rb = log_recip_gamma(b);
  if (!ra.zero && !rb.zero) {
    const Hyp2f1Result f2 = hyp2f1_series(c - a, c - b, 1.0 + s, one_minus_w);
    const Complex log_pref = s * std::log(one_minus_w) + log_gc +
                             log_gamma(-s) + ra.value + rb.value;
    add(log_pref, f2);
    out.terms += f2.terms;
    out.achieved_tolerance =
        std::max(out.achieved_tolerance, f2.achieved_tolerance);
  }
  out.value = value;
  out.error_estimate = error / std::abs(value);
  return out;
}

Hyp2f1Result hyp2f1_detailed(Complex a, Complex b, Complex c, double w,
                             double one_minus_w) {
  // w may round to 1 when 1 - w is still resolved; only 1 - w is used then.
  if (!(w >= 0.0 && w <= 1.0) || !(one_minus_w > 0.0)) {
    throw Error(ErrorCode::Domain, "hyp2f1: w must lie in [0, 1)");
  }
  if (near_nonpositive_integer(c)) {
    throw Error(ErrorCode::Pole, "hyp2f1: c is a non-positive integer");
  }
  if (w <= 0.5 || polynomial_degree(a) >= 0 || polynomial_degree(b) >= 0) {
    return hyp2f1_series(a, b, c, w);
  }
  const Complex s = c - a - b;
  if (std::abs(s - std::nearbyint(s.real())) < kDegenerateGap) {
    try {
      Hyp2f1Result out = hyp2f1_series(a, b, c, w);
      out.method = Hyp2f1Method::DegenerateSeries;
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
      throw Error(ErrorCode::TransformDegenerate,
                  std::string("hyp2f1: integer c - a - b and series fallback "
                              "failed: ") +
                      e.what());
    }
  }
  std::optional<Hyp2f1Result> direct;
  if (w <= kSeriesReach) {
    try {
      direct = hyp2f1_series(a, b, c, w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
    }
    if (direct && direct->error_estimate < kGoodEnough) return *direct;
  }
  Hyp2f1Result transformed = hyp2f1_transformed(a, b, c, w, one_minus_w);
  if (direct && direct->error_estimate < transformed.error_estimate) {
    return *direct;
  }
  return transformed;
}

Complex hyp2f1(Complex a, Complex b, Complex c, double w) {
  return hyp2f1_detailed(a, b, c, w, 1.0 - w).value;
}

}  // namespace ginocchio
