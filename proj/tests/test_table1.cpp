#include <cmath>
#include <set>

#include "doctest.h"
#include "ginocchio/error.hpp"
#include "ginocchio/table1.hpp"

using namespace ginocchio;

namespace {

const TableRow& row(int id) { return table_rows()[id - 1]; }

}  // namespace

TEST_SUITE("table1") {

TEST_CASE("rows are complete and ordered") {
  REQUIRE(table_rows().size() == 20);
  int expected = 1;
  for (const auto& r : table_rows()) {
    CHECK(r.id == expected++);
    CHECK((r.sign == 1 || r.sign == -1));
    CHECK(r.lambda > 0.0);
    CHECK(r.no_ss_family == (r.id >= 19));
  }
  CHECK(row(11).e_star == 166.720);
  CHECK(row(17).e_star == 24.01);
  CHECK(row(11).n == -9);
}

TEST_CASE("printed V(0) against the formula") {
  const std::set<int> flagged = {1, 3, 6, 14, 15};
  for (const auto& r : table_rows()) {
    if (r.no_ss_family) continue;
    CAPTURE(r.id);
    const Complex v0 = potential_at_origin(r.spec());
    const bool agrees = std::abs(v0.real() - r.v0_printed.real()) <= kTableV0Tolerance &&
                        std::abs(v0.imag() - r.v0_printed.imag()) <= kTableV0Tolerance;
    CHECK(agrees == !flagged.count(r.id));
    CHECK((*r.v0_discrepancy != '\0') == static_cast<bool>(flagged.count(r.id)));
  }
  const Complex v1 = potential_at_origin(row(1).spec());
  CHECK(v1.real() - row(1).v0_printed.real() == doctest::Approx(5.0).epsilon(1e-3));
  CHECK(std::abs(v1.imag() - row(1).v0_printed.imag()) < kTableV0Tolerance);
}

TEST_CASE("every singular row passes") {
  for (const auto& r : table_rows()) {
    if (r.no_ss_family) continue;
    CAPTURE(r.id);
    const auto v = check_row(r);
    CHECK(v.certified == 1);
    REQUIRE(v.singularity.has_value());
    CHECK(v.singularity->n == r.n);
    CHECK(v.e_rel_error < kTableEnergyTolerance);
    CHECK(v.profile_ok);
    CHECK(v.second_excluded);
    CHECK(v.passed);
  }
}

TEST_CASE("families have no singularity") {
  for (int id : {19, 20}) {
    const auto v = check_row(row(id));
    CHECK(v.draws.size() == 3);
    for (const auto& d : v.draws) CHECK(d.certified == 0);
    CHECK(v.no_ss_ok);
    CHECK(v.passed);
  }
}

TEST_CASE("family draws are deterministic and in range") {
  const auto a = family_members(row(19), 10, 42);
  const auto b = family_members(row(19), 10, 42);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    const double re = a[i].nu().real();
    const double im = std::abs(a[i].nu().imag());
    CHECK(re >= 0.5);
    CHECK(re <= 8.0);
    CHECK(im >= 0.5);
    CHECK(im <= 8.0);
    CHECK(a[i].lambda() >= 0.5);
    CHECK(a[i].lambda() <= 10.0);
  }
  CHECK_FALSE(family_members(row(19), 1, 43)[0] == a[0]);
  CHECK_THROWS_AS(family_members(row(5), 1, 1), Error);
}

}  // TEST_SUITE
