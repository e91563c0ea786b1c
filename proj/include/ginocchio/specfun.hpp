#pragma once

#include <complex>

namespace ginocchio {

using Complex = std::complex<double>;

/// Throws Error(InvalidArgument) when either component is NaN or infinite.
void require_finite(Complex z, const char* what);

/// True when z lies within `tol` (absolute) of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z, double tol = 1e-12);

/// Principal branch of log Gamma(z).
///
/// Lanczos approximation (g = 7, nine coefficients) for Re z >= 1/2 and the
/// reflection formula with a 2*pi*i branch correction below that, so that
/// log_gamma(z + 1) = log(z) + log_gamma(z) holds off the negative real axis.
/// Throws Error(Pole) within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

struct GammaLogParts {
  double magnitude_log;  ///< log|Gamma(z)|
  double phase;          ///< arg Gamma(z); not continuous across 2*pi wraps
};

GammaLogParts gamma_magnitude_phase(Complex z);

enum class Hyp2f1Method { Polynomial, Series, Transformed, DegenerateSeries };

struct Hyp2f1Result {
  Complex value;
  int terms = 0;  ///< terms summed (both series when transformed)
  Hyp2f1Method method = Hyp2f1Method::Series;
  double achieved_tolerance = 0.0;  ///< |last term| / |partial sum|
  double error_estimate = 0.0;  ///< rounding plus truncation, relative
};

/// Gauss 2F1(a, b; c; w) for real 0 <= w < 1.
///
/// Direct power series for w <= 1/2. Above that the 1 - w connection formula
/// is used unless the series (tried up to w = 0.95) has the smaller error
/// estimate; the two connection terms can cancel badly for large |a|, |b|.
/// `one_minus_w` is passed separately so callers holding 1 - w to full
/// relative precision (w close to 1) do not lose it.
Hyp2f1Result hyp2f1_detailed(Complex a, Complex b, Complex c, double w,
                             double one_minus_w);

Complex hyp2f1(Complex a, Complex b, Complex c, double w);

/// Defining power series only, for any |w| < 1; exposed for cross-checks.
Hyp2f1Result hyp2f1_series(Complex a, Complex b, Complex c, double w);

/// 1 - w connection formula only; throws TransformDegenerate if c - a - b is
/// within 1e-8 of an integer.
Hyp2f1Result hyp2f1_transformed(Complex a, Complex b, Complex c, double w,
                                double one_minus_w);

}  // namespace ginocchio
