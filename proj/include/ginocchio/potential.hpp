#pragma once

#include <span>
#include <string>
#include <vector>

#include "ginocchio/specfun.hpp"

namespace ginocchio {

/// Units are fixed at 2m = 1 and hbar^2 = 1, so k = sqrt(E).
struct Units {
  static constexpr double two_m = 1.0;
  static constexpr double hbar_squared = 1.0;
  static double wavenumber(double energy);
};

/// Parameters of the complex Ginocchio potential.
///
/// `sign` multiplies lambda^2 nu (nu + 1) directly: -1 selects the upper
/// (barrier-forming for real nu(nu+1) > 0) sign, +1 the lower one.
class PotentialSpec {
 public:
  PotentialSpec(Complex nu, double lambda, int sign);

  Complex nu() const { return nu_; }
  double lambda() const { return lambda_; }
  int sign() const { return sign_; }

  PotentialSpec with_nu(Complex nu) const { return {nu, lambda_, sign_}; }
  PotentialSpec with_lambda(double lambda) const {
    return {nu_, lambda, sign_};
  }

  /// nu (nu + 1)
  Complex strength() const { return nu_ * (nu_ + 1.0); }

  std::string describe() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  Complex nu_;
  double lambda_;
  int sign_;
};

/// Point of the coordinate map, carrying u = atanh(y) and 1 - y^2 so that
/// callers far in the tails keep full relative precision.
struct MappedPoint {
  double u = 0.0;
  double y = 0.0;
  double one_minus_y2 = 1.0;
};

double x_of_y(double y, double lambda);
/// dx/dy = 1 / ((1 - y^2)(1 + (lambda^2 - 1) y^2)).
double dx_dy(double y, double lambda);
/// x as a function of u = atanh(y).
double x_of_u(double u, double lambda);

/// Inverse of x_of_y. Bisection-safeguarded Newton in u = atanh(y); for
/// lambda^2 |x| beyond ~18 the returned y rounds to +-1 in double precision,
/// use map_x when 1 - y^2 is needed.
double y_of_x(double x, double lambda);
MappedPoint map_x(double x, double lambda);

Complex potential_value(double x, const PotentialSpec& spec);
Complex potential_at(const MappedPoint& p, const PotentialSpec& spec);
/// sign lambda^2 nu(nu+1) + (1 - lambda^2)/2, the value at x = 0.
Complex potential_at_origin(const PotentialSpec& spec);

enum class Profile { Barrier, Well, WellWithSideBarriers };
enum class Emissivity { Emissive, Absorptive, Mixed, None };

const char* to_string(Profile p);
const char* to_string(Emissivity e);

/// Symmetric x grid covering |y| <= 1 - 1e-6 uniformly in y, which is where
/// the structure of V lives for every lambda.
std::vector<double> profile_grid(double lambda, std::size_t points);

/// Barrier, well or well with side barriers from the sign pattern of Re V.
/// Throws Error(Unclassifiable) reporting the extrema otherwise.
Profile classify_profile(const PotentialSpec& spec,
                         std::span<const double> x_grid);

Emissivity emissivity(const PotentialSpec& spec,
                      std::span<const double> x_grid);

}  // namespace ginocchio
