#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cmint/hecke.hpp"

using namespace cmint;

namespace {

ArithDegree make_deg(std::initializer_list<std::pair<long long, long long>> cs) {
  ArithDegree d;
  for (auto [p, c] : cs) d.add(p, mpq_class(mpz_of(c)));
  return d;
}

}  // namespace

TEST_CASE("worked instance A: (-3,-4), dB=1, m=1") {
  CMPairConfig cfg = validate(-3, -4, 1, 1);
  ArithDegree total = intersection_number(cfg);
  CHECK(total == make_deg({{2, 2}, {3, 1}}));
  CHECK(total.log_value() == doctest::Approx(std::log(12.0)).epsilon(1e-12));

  IntersectionReport rep = report(cfg);
  CHECK(rep.rows.size() == 3);
  CHECK(rep.total == total);
  ArithDegree sum;
  for (const auto& row : rep.rows) sum += row.term;
  CHECK(sum == total);
}

TEST_CASE("worked instance B: (-7,-4), dB=1, m=1") {
  CMPairConfig cfg = validate(-7, -4, 1, 1);
  ArithDegree total = intersection_number(cfg);
  CHECK(total == make_deg({{3, 6}, {7, 1}}));
  CHECK(total.log_value() == doctest::Approx(std::log(5103.0)).epsilon(1e-12));

  // itemized: a=0 gives log 7; a=+-4 give log 3 each; a=+-2 give 2 log 3
  IntersectionReport rep = report(cfg);
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0].a == -4);
  CHECK(rep.rows[0].term == make_deg({{3, 1}}));
  CHECK(rep.rows[1].term == make_deg({{3, 2}}));
  CHECK(rep.rows[2].term == make_deg({{7, 1}}));
  CHECK(rep.rows[3].term == make_deg({{3, 2}}));
  CHECK(rep.rows[4].term == make_deg({{3, 1}}));
}

TEST_CASE("quaternionic report: (-3,-4), dB=253, m=1") {
  CMPairConfig cfg = validate(-3, -4, 253, 1);
  IntersectionReport rep = report(cfg);
  CHECK(rep.rows.size() == 48);  // 3 alphas x 16 thetas
  // every row is killed by the two kernel primes away from the norm
  for (const auto& row : rep.rows) {
    CHECK(row.diff.size() == 3);
    CHECK(row.term.is_zero());
  }
  CHECK(rep.total.is_zero());
}

TEST_CASE("rows are in canonical (a, theta) order and cover the grid") {
  CMPairConfig cfg = validate(-7, -4, 57, 2);
  auto alphas = enumerate_alphas(cfg);
  auto thetas = enumerate_thetas(cfg);
  IntersectionReport rep = report(cfg);
  REQUIRE(rep.rows.size() == alphas.size() * thetas.size());
  std::size_t i = 0;
  for (const auto& al : alphas)
    for (std::size_t t = 0; t < thetas.size(); ++t, ++i) {
      CHECK(rep.rows[i].a == al.a);
      CHECK(rep.rows[i].theta_index == t);
    }
}

TEST_CASE("thread count does not change the result") {
  CMPairConfig cfg = validate(-7, -4, 57, 5);
  IntersectionReport r1 = report(cfg, 1);
  IntersectionReport r4 = report(cfg, 4);
  CHECK(r1.total == r4.total);
  REQUIRE(r1.rows.size() == r4.rows.size());
  for (std::size_t i = 0; i < r1.rows.size(); ++i) {
    CHECK(r1.rows[i].term == r4.rows[i].term);
    CHECK(r1.rows[i].L == r4.rows[i].L);
    CHECK(r1.rows[i].R == r4.rows[i].R);
  }
  CHECK(intersection_number(cfg, 3) == r1.total);
  // the hand-computed kernel-branch terms from a = +-4 are in the total
  CHECK(!r1.total.is_zero());
  CHECK(r1.total.coeffs.count(3) == 1);
}

TEST_CASE("support primes divide a norm or dB") {
  for (auto [d1, d2, dB, m] : std::vector<std::array<long long, 4>>{
           {-7, -4, 57, 5}, {-7, -4, 57, 15}, {-3, -11, 34, 3}, {-3, -4, 1, 4}}) {
    CMPairConfig cfg = validate(d1, d2, dB, m);
    ArithDegree total = intersection_number(cfg, 2);
    for (const auto& [p, c] : total.coeffs) {
      bool divides_some = false;
      for (const auto& al : enumerate_alphas(cfg)) {
        mpz_class nrm = abs(felem_norm(cfg, al.e));
        if (mpz_divisible_p(nrm.get_mpz_t(), mpz_of(p).get_mpz_t())) divides_some = true;
      }
      if (dB % p == 0) divides_some = true;
      CHECK(divides_some);
    }
  }
}

TEST_CASE("dB=1 aggregate equals the classical sum") {
  for (auto [d1, d2, m] : std::vector<std::array<long long, 3>>{
           {-3, -4, 3}, {-7, -4, 2}, {-3, -163, 1}, {-15, -8, 2}}) {
    CMPairConfig cfg = validate(d1, d2, 1, m);
    ArithDegree total = intersection_number(cfg);
    ArithDegree classical;
    for (const auto& al : enumerate_alphas(cfg)) classical += degree_X_classical(cfg, al);
    CHECK(total == classical);
  }
}
