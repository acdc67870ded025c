#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmint/arith.hpp"

using namespace cmint;

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-3, 11) == -1);
  CHECK(kronecker(-7, 2) == 1);  // -7 = 1 mod 8
  for (long long a : {-5LL, -1LL, 0LL, 1LL, 7LL, 100LL}) CHECK(kronecker(a, 1) == 1);
  CHECK_THROWS_AS(kronecker(3, 0), std::domain_error);
  CHECK_THROWS_AS(kronecker(mpz_class(3), mpz_class(0)), std::domain_error);
}

TEST_CASE("kronecker against the Euler criterion") {
  // independent oracle for odd prime modulus
  for (long long p = 3; p <= 200; p += 2) {
    if (!is_prime(mpz_of(p))) continue;
    for (long long a = -200; a <= 200; ++a) {
      long long r = 1;
      long long base = ((a % p) + p) % p;
      for (long long e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
      }
      int expect = r == 0 ? 0 : (r == 1 ? 1 : -1);
      CHECK(kronecker(a, p) == expect);
    }
  }
}

TEST_CASE("kronecker multiplicativity, exhaustive") {
  // Both-argument multiplicativity for nonzero entries. The
  // zero-argument corner is pinned separately below: with the standard
  // convention (0|n) = [|n| = 1], the identity degenerates at n = -1.
  long long bad = 0;
  for (long long n = -200; n <= 200; ++n) {
    if (n == 0) continue;
    for (long long a = -200; a <= 200; ++a) {
      if (a == 0) continue;
      for (long long b = -200; b <= 200; ++b) {
        if (b == 0) continue;
        if (kronecker(a, n) * kronecker(b, n) != kronecker(a * b, n)) ++bad;
      }
    }
  }
  CHECK(bad == 0);

  long long bad_bottom = 0;
  for (long long a = -200; a <= 200; ++a)
    for (long long n = -200; n <= 200; ++n) {
      if (n == 0) continue;
      for (long long m : {-7LL, -2LL, 3LL, 8LL})
        if (kronecker(a, n) * kronecker(a, m) != kronecker(a, n * m)) ++bad_bottom;
    }
  CHECK(bad_bottom == 0);

  for (long long n = -200; n <= 200; ++n) {
    if (n == 0) continue;
    CHECK(kronecker(0, n) == (std::abs(n) == 1 ? 1 : 0));
  }
}

TEST_CASE("kronecker long long and mpz agree") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    long long a = (long long)(rng() % 2000001) - 1000000;
    long long n = (long long)(rng() % 2000001) - 1000000;
    if (n == 0) continue;
    CHECK(kronecker(a, n) == kronecker(mpz_of(a), mpz_of(n)));
  }
}

TEST_CASE("factorize examples") {
  auto f = factorize(mpz_class(5103));
  REQUIRE(f.size() == 2);
  CHECK(f[0].p == 3);
  CHECK(f[0].e == 6);
  CHECK(f[1].p == 7);
  CHECK(f[1].e == 1);

  CHECK(factorize(mpz_class(1)).empty());

  auto g = factorize(mpz_class(640320));
  REQUIRE(g.size() == 5);
  long ps[] = {2, 3, 5, 23, 29};
  unsigned es[] = {6, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i) {
    CHECK(g[i].p == ps[i]);
    CHECK(g[i].e == es[i]);
  }

  CHECK_THROWS_AS(factorize(mpz_class(0)), std::domain_error);
}

TEST_CASE("factorize round-trips") {
  for (long n = 1; n <= 10000; ++n) {
    mpz_class prod = 1;
    for (const auto& pp : factorize(mpz_of(n))) {
      CHECK(is_prime(pp.p));
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), pp.p.get_mpz_t(), pp.e);
      prod *= pe;
    }
    CHECK(prod == n);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    mpz_class n = mpz_of((long long)(rng() >> 24) | 1);  // ~40 bit
    mpz_class prod = 1;
    for (const auto& pp : factorize(n)) {
      CHECK(is_prime(pp.p));
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), pp.p.get_mpz_t(), pp.e);
      prod *= pe;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("hensel_root examples") {
  MonicQuadratic f489{mpz_class(0), mpz_class(-489)};
  CHECK(hensel_root(f489, mpz_class(5), 2) == 8);  // 8^2 = 64 = 489 mod 25
  CHECK(hensel_root(f489, mpz_class(5), 1) == 2);
  MonicQuadratic f12{mpz_class(0), mpz_class(-12)};
  CHECK(hensel_root(f12, mpz_class(11), 1) == 1);

  // 3 | 489: double root mod 3
  CHECK_THROWS_WITH_AS(hensel_root(f489, mpz_class(3), 2), "non-Henselian input",
                       std::domain_error);
  // x^2 - D is never Henselian at 2
  CHECK_THROWS_AS(hensel_root(f12, mpz_class(2), 1), std::domain_error);
  // no root mod p at all
  MonicQuadratic f2{mpz_class(0), mpz_class(-2)};
  CHECK_THROWS_AS(hensel_root(f2, mpz_class(5), 1), std::domain_error);
}

TEST_CASE("hensel_root random lifts and conjugate roots") {
  std::mt19937_64 rng(13);
  const long long primes[] = {2, 3, 5, 7, 11, 13, 101, 997};
  int done = 0;
  while (done < 1000) {
    long long p = primes[rng() % 8];
    MonicQuadratic f{mpz_of((long long)(rng() % 4001) - 2000),
                     mpz_of((long long)(rng() % 4001) - 2000)};
    unsigned k = 1 + rng() % 6;
    std::array<mpz_class, 2> base;
    try {
      base = quadratic_roots_mod_p(f, mpz_of(p));
    } catch (const std::domain_error&) {
      continue;
    }
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), mpz_of(p).get_mpz_t(), k);
    mpz_class c = hensel_root(f, mpz_of(p), k);
    mpz_class fc = (c * c + f.b * c + f.c) % pk;
    CHECK(fc == 0);
    // the conjugate root: c + c' = -b mod p^k, a root too, and c is the
    // smaller of the pair
    mpz_class cc = ((-f.b - c) % pk + pk) % pk;
    mpz_class fcc = (cc * cc + f.b * cc + f.c) % pk;
    CHECK(fcc == 0);
    CHECK(c <= cc);
    // class-stable lifting from each base root
    for (const auto& b0 : base) {
      mpz_class lift = hensel_lift_in_class(f, mpz_of(p), k, b0);
      CHECK(lift % mpz_of(p) == b0);
      mpz_class fl = (lift * lift + f.b * lift + f.c) % pk;
      CHECK(fl == 0);
    }
    ++done;
  }
}

TEST_CASE("fp2_sqrt examples") {
  CHECK(least_nonresidue(11) == 2);
  Fp2Element s = fp2_sqrt(-3, 11);
  CHECK(s.n == 2);
  CHECK(s.c0 == 0);
  CHECK(s.c1 == 2);  // (2t)^2 = 8 = -3 mod 11
  Fp2Element s2 = fp2_sqrt(-4, 11);
  CHECK(s2.c0 == 0);
  CHECK(s2.c1 == 3);  // (3t)^2 = 18 = -4 mod 11
  CHECK_THROWS_AS(fp2_sqrt(-3, 7), std::domain_error);   // -3 = 4 = 2^2 mod 7
  CHECK_THROWS_AS(fp2_sqrt(-3, 2), std::domain_error);   // squaring is Frobenius on F_4
  CHECK_THROWS_AS(fp2_sqrt(22, 11), std::domain_error);  // p | d

  // square law and canonical choice
  for (long long p : {3LL, 5LL, 11LL, 13LL, 101LL}) {
    for (long long d = -50; d < 50; ++d) {
      if (d % p == 0 || kronecker(d, p) != -1) continue;
      Fp2Element r = fp2_sqrt(d, p);
      Fp2Element sq = fp2_mul(r, r);
      CHECK(sq.in_base());
      CHECK(sq.c0 == ((d % p) + p) % p);
      CHECK(!r.in_base());
      CHECK(r.c1 <= p - r.c1);
      CHECK(fp2_frobenius(r) == fp2_neg(r));
    }
  }
}

TEST_CASE("fp2 field laws") {
  std::mt19937_64 rng(17);
  const long long primes[] = {2, 3, 5, 11, 97};
  for (int i = 0; i < 1000; ++i) {
    long long p = primes[rng() % 5];
    Fp2Element a = fp2_make(p, rng() % p, rng() % p);
    Fp2Element b = fp2_make(p, rng() % p, rng() % p);
    Fp2Element c = fp2_make(p, rng() % p, rng() % p);
    CHECK(fp2_add(fp2_add(a, b), c) == fp2_add(a, fp2_add(b, c)));
    CHECK(fp2_mul(fp2_mul(a, b), c) == fp2_mul(a, fp2_mul(b, c)));
    CHECK(fp2_mul(a, fp2_add(b, c)) == fp2_add(fp2_mul(a, b), fp2_mul(a, c)));
    CHECK(fp2_mul(a, b) == fp2_mul(b, a));
    if (!(a.c0 == 0 && a.c1 == 0)) {
      CHECK(fp2_mul(a, fp2_inverse(a)) == fp2_from_int(p, 1));
    }
    CHECK(fp2_frobenius(fp2_frobenius(a)) == a);
    // Frobenius fixes exactly F_p
    CHECK((fp2_frobenius(a) == a) == a.in_base());
  }
}

TEST_CASE("fp2 roots of irreducible quadratics") {
  // p = 2: the generator polynomial of a discriminant 5 mod 8 reduces to
  // x^2 + x + 1 whose roots are the two elements outside F_2
  auto r = fp2_roots_of_irreducible(3, 7, 2);  // odd, odd
  CHECK(r[0] == fp2_make(2, 0, 1));
  CHECK(r[1] == fp2_make(2, 1, 1));
  CHECK(fp2_frobenius(r[0]) == r[1]);
  CHECK_THROWS_AS(fp2_roots_of_irreducible(2, 1, 2), std::domain_error);

  for (long long p : {3LL, 11LL, 31LL}) {
    for (long long b = -6; b <= 6; ++b)
      for (long long c = -6; c <= 6; ++c) {
        long long disc = b * b - 4 * c;
        if (disc % p == 0 || kronecker(disc, p) != -1) continue;
        auto rr = fp2_roots_of_irreducible(b, c, p);
        for (const auto& root : rr) {
          Fp2Element v =
              fp2_add(fp2_add(fp2_mul(root, root), fp2_scale(b, root)), fp2_from_int(p, c));
          CHECK(v == fp2_from_int(p, 0));
        }
        CHECK(fp2_frobenius(rr[0]) == rr[1]);
      }
  }
}
