#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "ginocchio/ginocchio.h"

namespace {

gin_spec* make(double re, double im, double lambda, int sign) {
  gin_spec* s = nullptr;
  REQUIRE(gin_spec_create({re, im}, lambda, sign, &s) == GIN_OK);
  return s;
}

}  // namespace

TEST_SUITE("c_api") {

TEST_CASE("spec lifecycle") {
  gin_spec* s = make(-0.6, 0.5, 7.0, -1);
  gin_spec* c = nullptr;
  REQUIRE(gin_spec_clone(s, &c) == GIN_OK);
  gin_complex nu;
  double lambda = 0.0;
  int sign = 0;
  REQUIRE(gin_spec_get(c, &nu, &lambda, &sign) == GIN_OK);
  CHECK(nu.re == -0.6);
  CHECK(nu.im == 0.5);
  CHECK(lambda == 7.0);
  CHECK(sign == -1);
  gin_spec_destroy(c);
  gin_spec_destroy(s);
  gin_spec_destroy(nullptr);
  CHECK(std::strlen(gin_version()) > 0);
}

TEST_CASE("invalid arguments report a status and a message") {
  gin_spec* s = nullptr;
  CHECK(gin_spec_create({1.0, 0.0}, -1.0, 1, &s) == GIN_E_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::strlen(gin_last_error()) > 0);
  CHECK(gin_spec_create({1.0, 0.0}, 1.0, 0, &s) == GIN_E_INVALID_ARGUMENT);
  CHECK(gin_spec_create({1.0, 0.0}, 1.0, 1, nullptr) == GIN_E_INVALID_ARGUMENT);
  gin_point p;
  CHECK(gin_evaluate(nullptr, 1.0, nullptr, &p) == GIN_E_INVALID_ARGUMENT);
  CHECK(std::strcmp(gin_status_name(GIN_E_PARSE), gin_status_name(GIN_OK)) != 0);
}

TEST_CASE("potential and map") {
  double x = 0.0;
  double y = 0.0;
  REQUIRE(gin_x_of_y(0.5, 2.0, &x) == GIN_OK);
  REQUIRE(gin_y_of_x(x, 2.0, &y) == GIN_OK);
  CHECK(y == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(gin_x_of_y(1.0, 2.0, &x) != GIN_OK);

  gin_spec* s = make(4.67, 7.8366, 1.74, 1);
  gin_complex v0;
  REQUIRE(gin_potential_origin(s, &v0) == GIN_OK);
  gin_complex v;
  REQUIRE(gin_potential(s, 0.0, &v) == GIN_OK);
  CHECK(v.re == doctest::Approx(v0.re));
  CHECK(v.im == doctest::Approx(v0.im));
  gin_profile prof;
  REQUIRE(gin_classify_profile(s, 0, &prof) == GIN_OK);
  CHECK(prof == GIN_PROFILE_WELL);
  gin_emissivity em;
  REQUIRE(gin_emissivity_of(s, 0, &em) == GIN_OK);
  CHECK(std::strlen(gin_emissivity_name(em)) > 0);
  CHECK(std::strlen(gin_profile_name(prof)) > 0);
  gin_spec_destroy(s);
}

TEST_CASE("evaluate_many matches evaluate and keeps order") {
  gin_spec* s = make(-0.6, 0.5, 7.0, -1);
  std::vector<double> es;
  for (int i = 1; i <= 50; ++i) es.push_back(3.0 * i);
  std::vector<gin_point> pts(es.size());
  REQUIRE(gin_evaluate_many(s, es.data(), es.size(), nullptr, 4, pts.data(),
                            nullptr) == GIN_OK);
  for (std::size_t i = 0; i < es.size(); ++i) {
    gin_point one;
    REQUIRE(gin_evaluate(s, es[i], nullptr, &one) == GIN_OK);
    CHECK(pts[i].energy == es[i]);
    CHECK(pts[i].R == one.R);
    CHECK(pts[i].T == one.T);
  }
  es[7] = -1.0;
  es[30] = 0.0;
  std::size_t bad = 0;
  CHECK(gin_evaluate_many(s, es.data(), es.size(), nullptr, 4, pts.data(),
                          &bad) == GIN_E_INVALID_ARGUMENT);
  CHECK(bad == 7);
  gin_spec_destroy(s);
}

TEST_CASE("grids") {
  gin_grid g;
  REQUIRE(gin_grid_default(&g) == GIN_OK);
  CHECK(gin_grid_validate(&g) == GIN_OK);
  gin_grid small{1.0, 3.0, 3, 1};
  double e[3];
  REQUIRE(gin_grid_energies(&small, e) == GIN_OK);
  CHECK(e[1] == 2.0);
  gin_grid bad{5.0, 1.0, 10, 0};
  CHECK(gin_grid_validate(&bad) == GIN_E_INVALID_ARGUMENT);
}

TEST_CASE("singularity search through handles") {
  gin_spec* s = make(-0.6, 0.5, 7.0, -1);
  gin_search_options opts;
  REQUIRE(gin_search_options_default(&opts) == GIN_OK);
  CHECK(opts.free == GIN_FREE_NU);
  gin_ss_report* rep = nullptr;
  REQUIRE(gin_find_ss(s, nullptr, &opts, &rep) == GIN_OK);
  REQUIRE(gin_ss_report_count(rep) == 1);
  CHECK(gin_ss_report_candidate_count(rep) >= 1);
  gin_singularity ss;
  REQUIRE(gin_ss_report_get(rep, 0, &ss) == GIN_OK);
  CHECK(ss.n == 0);
  CHECK(std::abs(ss.energy - 24.01) / 24.01 < 0.01);
  CHECK(ss.converged);
  CHECK(gin_ss_report_get(rep, 1, &ss) == GIN_E_INVALID_ARGUMENT);
  gin_second_verdict second;
  REQUIRE(gin_ss_report_second(rep, &second) == GIN_OK);
  CHECK(second.excluded);

  gin_divergence div;
  REQUIRE(gin_check_divergence(&ss, 0.0, &div) == GIN_OK);
  CHECK(div.sentinel_at_energy);
  CHECK(div.R_below > 1e4);

  gin_spec* refined = nullptr;
  REQUIRE(gin_singularity_spec(&ss, &refined) == GIN_OK);
  gin_jost j;
  REQUIRE(gin_jost_fit(refined, ss.energy, 0.0, 0.0, 0, &j) == GIN_OK);
  CHECK(std::hypot(j.A.re, j.A.im) / std::hypot(j.C.re, j.C.im) < 1e-4);
  gin_point at;
  REQUIRE(gin_evaluate(refined, ss.energy, nullptr, &at) == GIN_OK);
  CHECK(at.at_singularity);
  CHECK(std::isinf(at.R));
  gin_spec_destroy(refined);
  gin_ss_report_destroy(rep);
  gin_spec_destroy(s);
}

TEST_CASE("minima, crossings and oracle") {
  gin_spec* h = make(-0.5, 2.0, 6.0, -1);
  gin_grid g{135.5, 677.5, 2000, 0};
  gin_minima* m = nullptr;
  REQUIRE(gin_find_minima(h, &g, 2, nullptr, &m) == GIN_OK);
  CHECK(gin_minima_count(m) >= 3);
  gin_minimum first;
  REQUIRE(gin_minima_get(m, 0, &first) == GIN_OK);
  CHECK(first.reflectionless);
  gin_minima_destroy(m);

  gin_crossings* c = nullptr;
  REQUIRE(gin_unitarity_crossings(h, &g, 2, nullptr, &c) == GIN_OK);
  CHECK(gin_crossings_everywhere_unitary(c));
  CHECK(gin_crossings_count(c) == 0);
  gin_crossings_destroy(c);

  gin_oracle_result o;
  REQUIRE(gin_oracle(h, 200.0, nullptr, &o) == GIN_OK);
  CHECK(std::abs(o.U - 1.0) < 1e-8);
  double rl = 0.0;
  double rr = 0.0;
  REQUIRE(gin_oracle_left_right(h, 200.0, nullptr, &rl, &rr) == GIN_OK);
  CHECK(rl == doctest::Approx(rr).epsilon(1e-8));
  gin_oracle_config tight{0.05, 0.0, 0.0};
  CHECK(gin_oracle(h, 200.0, &tight, &o) == GIN_E_TAIL_NOT_DECAYED);
  gin_spec_destroy(h);
}

TEST_CASE("table access") {
  REQUIRE(gin_table_row_count() == 20);
  gin_table_row r;
  REQUIRE(gin_table_get(10, &r) == GIN_OK);
  CHECK(r.id == 11);
  CHECK(r.n == -9);
  CHECK(gin_table_get(20, &r) == GIN_E_INVALID_ARGUMENT);
  gin_row_verdict v;
  REQUIRE(gin_table_check(16, nullptr, 1, &v) == GIN_OK);
  CHECK(v.passed);
  CHECK(v.has_singularity);
  REQUIRE(gin_table_check(18, nullptr, 1, &v) == GIN_OK);
  CHECK(v.draw_count == 3);
  CHECK(v.no_ss_ok);
}

}  // TEST_SUITE
