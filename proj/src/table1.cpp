#include "ginocchio/table1.hpp"

#include <array>
#include <cmath>
#include <random>

#include "ginocchio/error.hpp"

namespace ginocchio {

namespace {

using P = Profile;

constexpr const char* kRow1Note =
    "printed real part is 5.0 below the formula value; imaginary part agrees";
constexpr const char* kInconsistentNote =
    "printed value does not follow from the printed nu, lambda and sign";

const std::array<TableRow, 20> kRows = {{
    {1, -1, {0.0, -2.65}, 3.4, 104.229, -1, {70.90, 30.63}, P::Barrier, false, kRow1Note},
    {2, -1, {1.0, -4.5}, 4.123, 650.126, -4, {302.235, 229.488}, P::Barrier},
    {3, -1, {6.0, -12.0}, 1.4366, 359.557, -8, {209.978, 322.359}, P::Barrier, false, kInconsistentNote},
    {4, -1, {-8.39, 10.4}, 1.351, 248.522, -9, {83.8348, 299.537}, P::Barrier},
    {5, -1, {4.2, -12.57}, 1.2, 239.275, -5, {195.857, 170.148}, P::Barrier},
    {6, -1, {-6.99, 11.3}, 1.0, 127.690, -6, {85.890, 146.674}, P::Barrier, false, kInconsistentNote},
    {7, 1, {3.75, 0.5}, 3.1221, 190.868, -1, {166.817, 41.4269}, P::Barrier},
    {8, 1, {2.776, 2.15}, 2.1, 78.761, -3, {24.1326, 62.122}, P::Barrier},
    {9, 1, {-7.384, -3.05}, 1.63, 153.668, -4, {99.706, 111.570}, P::Barrier},
    {10, 1, {-4.75, -4.928}, 1.85, 121.598, -6, {-23.364, 143.362}, P::Well},
    {11, 1, {4.67, 7.8366}, 1.74, 166.720, -9, {-106.778, 245.328}, P::Well},
    {12, -1, {-6.0, 1.0}, 4.261, 236.028, -6, {-535.106, 199.717}, P::Well},
    {13, 1, {-3.0, -8.5}, 0.96, 5.3077, -8, {-61.016, 39.168}, P::Well},
    {14, -1, {0.55, -0.6}, 9.312, 478.444, -2, {-85.563, 109.44}, P::WellWithSideBarriers, false, kInconsistentNote},
    {15, 1, {-1.560, -0.601}, 10.0, 651.183, -2, {1.6769, 127.572}, P::WellWithSideBarriers, false, kInconsistentNote},
    {16, -1, {1.9, -2.4}, 2.127, 55.4231, -3, {-0.6310, 52.118}, P::WellWithSideBarriers},
    {17, -1, {-0.6, 0.5}, 7.0, 24.01, 0, {0.01, 4.9}, P::WellWithSideBarriers},
    {18, 1, {-0.6, -3.4}, 4.5, 3.9130, -3, {-248.575, 13.771}, P::WellWithSideBarriers},
    {19, 1, {}, 1.0, 0.0, 0, {}, P::Barrier, true},
    {20, -1, {}, 1.0, 0.0, 0, {}, P::Barrier, true},
}};

}  // namespace

std::span<const TableRow> table_rows() { return kRows; }

std::vector<PotentialSpec> family_members(const TableRow& row,
                                          std::size_t count,
                                          unsigned long long seed) {
  if (!row.no_ss_family) {
    throw Error(ErrorCode::InvalidArgument, "row is not a parameter family");
  }
  std::mt19937_64 rng(seed + static_cast<unsigned long long>(row.id));
  std::uniform_real_distribution<double> ab(0.5, 8.0);
  std::uniform_real_distribution<double> lam(0.5, 10.0);
  std::vector<PotentialSpec> out;
  // Row 19: sign +, nu = a - ib. Row 20: sign -, nu = a + ib.
  const double im_sign = row.sign > 0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = ab(rng);
    const double b = ab(rng);
    const double l = lam(rng);
    out.emplace_back(Complex(a, im_sign * b), l, row.sign);
  }
  return out;
}

RowVerdict check_row(const TableRow& row, const TableCheckOptions& options) {
  RowVerdict v;
  v.id = row.id;
  SsSearchOptions search;
  search.free = options.free;
  search.threads = options.threads;

  if (row.no_ss_family) {
    v.no_ss_ok = true;
    for (const auto& spec :
         family_members(row, options.family_draws, options.seed)) {
      const auto result = find_spectral_singularities(spec, options.grid, search);
      v.draws.push_back({spec, result.certified.size(), result.candidates.size()});
      if (!result.certified.empty()) v.no_ss_ok = false;
    }
    v.passed = v.no_ss_ok;
    return v;
  }

  const PotentialSpec spec = row.spec();
  const auto result = find_spectral_singularities(spec, options.grid, search);
  v.certified = result.certified.size();
  v.second_excluded = result.second.excluded;
  if (v.certified > 0) {
    const SpectralSingularity& ss = result.certified.front();
    v.singularity = ss;
    v.e_rel_error = (ss.energy - row.e_star) / row.e_star;
    v.e_ok = v.certified == 1 &&
             std::abs(v.e_rel_error) <= kTableEnergyTolerance;
    v.n_ok = v.certified == 1 && ss.n == row.n;
  }

  v.v0_formula = potential_at_origin(spec);
  v.v0_ok =
      std::abs(v.v0_formula.real() - row.v0_printed.real()) <= kTableV0Tolerance &&
      std::abs(v.v0_formula.imag() - row.v0_printed.imag()) <= kTableV0Tolerance;
  v.v0_flagged = !v.v0_ok && row.v0_discrepancy[0] != '\0';

  try {
    const auto grid = profile_grid(spec.lambda(), 2001);
    v.profile_found = classify_profile(spec, grid);
    v.profile_ok = *v.profile_found == row.profile;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unclassifiable) throw;
  }

  v.passed = v.e_ok && v.n_ok && (v.v0_ok || v.v0_flagged) && v.profile_ok &&
             v.second_excluded;
  return v;
}

}  // namespace ginocchio
