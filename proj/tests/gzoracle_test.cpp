#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cmint/gzoracle.hpp"

using namespace cmint;

namespace {

// |x - n| <= 2^bound_log2 on the real part, imaginary part likewise small
void check_close_to_int(const BigComplex& x, const mpz_class& n, double bound_log2) {
  mpfr_t d;
  mpfr_init2(d, x.precision());
  mpfr_sub_z(d, x.re(), n.get_mpz_t(), MPFR_RNDN);
  mpfr_abs(d, d, MPFR_RNDN);
  double gap = mpfr_get_d(d, MPFR_RNDN);
  mpfr_clear(d);
  CHECK(gap <= std::exp2(bound_log2));
  CHECK(std::abs(x.to_double_im()) <= std::exp2(bound_log2));
}

long long brute_class_number(long long d) {
  // direct triple scan of reduced forms, no divisibility shortcuts
  long long count = 0;
  for (long long a = 1; a <= -d; ++a)
    for (long long b = -a; b <= a; ++b)
      for (long long c = a; c <= -d; ++c) {
        if (b * b - 4 * a * c != d) continue;
        if (b < 0 && (-b == a || a == c)) continue;
        ++count;
      }
  return count;
}

}  // namespace

TEST_CASE("bigcomplex precision propagates as the max of operands") {
  BigComplex a(100), b(300);
  a.set(1.5, -0.25);
  b.set(2.0, 4.0);
  CHECK((a + b).precision() == 300);
  CHECK((a - b).precision() == 300);
  CHECK((a * b).precision() == 300);
  CHECK((a / b).precision() == 300);
  CHECK(a.conj().precision() == 100);
  BigComplex c = a;
  CHECK(c.precision() == 100);
  c = b;
  CHECK(c.precision() == 300);
  CHECK(c.to_double_re() == 2.0);
}

TEST_CASE("reduced forms") {
  CHECK(reduced_forms(-3) == std::vector<ReducedForm>{{1, 1, 1}});
  CHECK(reduced_forms(-4) == std::vector<ReducedForm>{{1, 0, 1}});
  CHECK(reduced_forms(-23) == std::vector<ReducedForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
  CHECK(reduced_forms(-163) == std::vector<ReducedForm>{{1, 1, 41}});
  CHECK_THROWS_AS(reduced_forms(-12), std::domain_error);
  CHECK_THROWS_AS(reduced_forms(5), std::domain_error);

  for (long long d = -3; d >= -400; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    auto forms = reduced_forms(d);
    CHECK((long long)forms.size() == brute_class_number(d));
    for (const auto& f : forms) {
      CHECK(f.b * f.b - 4 * f.a * f.c == d);
      CHECK(f.a > 0);
      CHECK(std::abs(f.b) <= f.a);
      CHECK(f.a <= f.c);
    }
  }
}

TEST_CASE("j at the classical points") {
  mpfr_prec_t P = 192;
  // tau = i: j = 1728
  BigComplex tau_i = cm_point({1, 0, 1}, -4, P + 64);
  check_close_to_int(j_invariant(tau_i, P), mpz_class(1728), -(double)P / 2);

  // tau = (1 + sqrt(-3))/2: j = 0
  BigComplex tau_rho = cm_point({1, 1, 1}, -3, P + 64);
  check_close_to_int(j_invariant(tau_rho, P), mpz_class(0), -(double)P / 2);

  // Heegner point: j((1+sqrt(-163))/2) = -640320^3
  BigComplex tau_h = cm_point({1, 1, 41}, -163, P + 64);
  mpz_class heegner("-262537412640768000");
  check_close_to_int(j_invariant(tau_h, P), heegner, -(double)P / 2);
}

TEST_CASE("j self-consistency at doubled precision") {
  for (long long d : {-7LL, -23LL, -40LL}) {
    for (const auto& f : reduced_forms(d)) {
      BigComplex lo = j_invariant(cm_point(f, d, 256 + 64), 256);
      BigComplex hi = j_invariant(cm_point(f, d, 512 + 64), 512);
      BigComplex diff = lo - hi;
      double mag = log2_magnitude(diff);
      double scale = std::max(log2_magnitude(hi), 0.0);
      CHECK(mag <= scale - 128 + 8);
    }
  }
}

TEST_CASE("modular invariance at CM points") {
  std::mt19937_64 rng(23);
  mpfr_prec_t P = 192;
  std::vector<std::pair<long long, ReducedForm>> points;
  for (long long d : {-3LL, -4LL, -7LL, -8LL, -11LL, -15LL, -20LL, -24LL})
    for (const auto& f : reduced_forms(d)) points.push_back({d, f});
  std::shuffle(points.begin(), points.end(), rng);
  int used = 0;
  for (const auto& [d, f] : points) {
    if (used >= 10) break;
    ++used;
    BigComplex tau = cm_point(f, d, P + 64);
    BigComplex j0 = j_invariant(tau, P);

    // tau + 1
    BigComplex one(P + 64);
    one.set(1.0, 0.0);
    BigComplex j1 = j_invariant(tau + one, P);
    CHECK(log2_magnitude(j0 - j1) <= std::max(log2_magnitude(j0), 0.0) - (double)P / 2 + 8);

    // -1/tau, when the image still has workable imaginary part
    BigComplex minus_one(P + 64);
    minus_one.set(-1.0, 0.0);
    BigComplex tau_inv = minus_one / tau;
    if (tau_inv.to_double_im() >= 0.55) {
      BigComplex j2 = j_invariant(tau_inv, P);
      CHECK(log2_magnitude(j0 - j2) <= std::max(log2_magnitude(j0), 0.0) - (double)P / 2 + 8);
    }
  }
}

TEST_CASE("gz_square worked values") {
  CHECK(gz_square(-3, -4) == 12);    // |0 - 1728|^{8/24}
  CHECK(gz_square(-7, -4) == 5103);  // |-3375 - 1728|
  mpz_class h = mpz_class(640320) * 640320;
  CHECK(gz_square(-3, -163) == h);
}

TEST_CASE("gz_square against exact Heegner j-values") {
  // both class numbers are 1 and both unit groups are {+-1}, so J^2 is
  // literally the squared difference of the two singular moduli
  mpz_class j43("-884736000"), j67("-147197952000"), j163("-262537412640768000");
  mpz_class j7("-3375");

  mpz_class d7_43 = j7 - j43;
  CHECK(gz_square(-7, -43) == d7_43 * d7_43);
  mpz_class d67_163 = j67 - j163;
  CHECK(gz_square(-67, -163) == d67_163 * d67_163);
  CHECK(gz_compare(-7, -43).pass);
  CHECK(gz_compare(-67, -163).pass);
}

TEST_CASE("gz_square precision behavior") {
  // idempotent once the gate passes
  mpz_class v1 = gz_square(-7, -4, 128);
  mpz_class v2 = gz_square(-7, -4, 256);
  mpz_class v3 = gz_square(-7, -4);
  CHECK(v1 == v2);
  CHECK(v1 == v3);
  CHECK(gz_initial_precision(-3, -4) >= 64);
  // validation is upstream of any numerics
  CHECK_THROWS_AS(gz_square(-3, -12), ValidationError);
}

TEST_CASE("gz_compare on the worked instances") {
  GZComparison a = gz_compare(-3, -4);
  CHECK(a.pass);
  CHECK(a.j_squared == 12);
  CHECK(a.oracle_exponents == std::map<long long, long long>{{2, 2}, {3, 1}});
  for (const auto& [p, r] : a.per_prime_ratio) CHECK(r == 1);

  GZComparison b = gz_compare(-7, -4);
  CHECK(b.pass);
  CHECK(b.j_squared == 5103);
  CHECK(b.oracle_exponents == std::map<long long, long long>{{3, 6}, {7, 1}});

  GZComparison c = gz_compare(-3, -163);
  CHECK(c.pass);
  CHECK(c.oracle_exponents ==
        std::map<long long, long long>{{2, 12}, {3, 2}, {5, 2}, {23, 2}, {29, 2}});
  for (const auto& [p, r] : c.per_prime_ratio) CHECK(r == 1);
}
