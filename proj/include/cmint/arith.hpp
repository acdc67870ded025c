#ifndef CMINT_ARITH_HPP
#define CMINT_ARITH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmint {

// gmpxx has no long long overloads; long is 64-bit on every platform
// this builds for.
inline mpz_class mpz_of(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return mpz_class((long)v);
}

// Kronecker symbol (a|n), n != 0. Completely multiplicative in both
// arguments, with (a|2) = +1 iff a = ±1 mod 8.
int kronecker(long long a, long long n);
int kronecker(const mpz_class& a, const mpz_class& n);

bool is_prime(const mpz_class& n);

struct PrimePower {
  mpz_class p;
  unsigned e;
};

// Prime factorization of n >= 1, primes strictly increasing. Trial
// division to 10^6, then Brent-Pollard rho with a fixed seed sequence.
std::vector<PrimePower> factorize(const mpz_class& n);

// ord_p(n) for n != 0.
unsigned ord_p(const mpz_class& n, const mpz_class& p);

// Monic quadratic x^2 + b*x + c over Z.
struct MonicQuadratic {
  mpz_class b, c;
};

// Both roots of f mod p, sorted ascending. Requires a simple root
// (derivative a unit at it); throws std::domain_error("non-Henselian
// input") otherwise, in particular when f has no root mod p or a
// double root.
std::array<mpz_class, 2> quadratic_roots_mod_p(const MonicQuadratic& f, const mpz_class& p);

// The canonical root of f mod p^k: the smaller of the two roots in
// [0, p^k). At k = 1 this is the smaller base root; note the smaller
// mod-p^k root need not lie in the smaller base root's class.
mpz_class hensel_root(const MonicQuadratic& f, const mpz_class& p, unsigned k);

// Newton lift of a chosen simple base root, staying in its mod-p class.
mpz_class hensel_lift_in_class(const MonicQuadratic& f, const mpz_class& p, unsigned k,
                               const mpz_class& base_root);

// Smallest positive quadratic nonresidue mod an odd prime p.
long long least_nonresidue(long long p);

// Tonelli-Shanks square root mod an odd prime; returns the smaller of
// the two roots. Requires kronecker(a, p) = 1 or a = 0 mod p.
long long sqrt_mod_p(long long a, long long p);

// Element of F_{p^2} = F_p(t), with t^2 = n for odd p (n the smallest
// positive nonresidue) and t^2 = t + 1 for p = 2 (so F_4 = F_2[x]/(x^2+x+1)).
struct Fp2Element {
  long long p = 0;
  long long n = 0;  // generator constant; 0 when p = 2
  long long c0 = 0, c1 = 0;

  bool in_base() const { return c1 == 0; }
  bool operator==(const Fp2Element&) const = default;
};

Fp2Element fp2_make(long long p, long long c0, long long c1);
Fp2Element fp2_from_int(long long p, long long v);
Fp2Element fp2_add(const Fp2Element& a, const Fp2Element& b);
Fp2Element fp2_sub(const Fp2Element& a, const Fp2Element& b);
Fp2Element fp2_neg(const Fp2Element& a);
Fp2Element fp2_mul(const Fp2Element& a, const Fp2Element& b);
Fp2Element fp2_scale(long long k, const Fp2Element& a);
Fp2Element fp2_inverse(const Fp2Element& a);
Fp2Element fp2_frobenius(const Fp2Element& a);

// Square root of d in F_{p^2} outside F_p, for odd p with
// kronecker(d, p) = -1. Canonical choice: the t-coordinate is the
// smaller of {c1, p - c1}; the other root is the Frobenius conjugate.
// d a square mod p is rejected (callers wanting a root in F_p use
// hensel_root), as is p = 2, where squaring is the Frobenius
// automorphism of F_4 and no element squares to something outside F_2.
Fp2Element fp2_sqrt(long long d, long long p);

// The two roots in F_{p^2} of a monic quadratic x^2 + b*x + c that is
// irreducible mod p. First entry is the canonical root: built from the
// canonical fp2_sqrt of the discriminant for odd p, and t itself for
// p = 2 (the only irreducible case mod 2 is x^2 + x + 1). The second is
// its Frobenius conjugate.
std::array<Fp2Element, 2> fp2_roots_of_irreducible(long long b, long long c, long long p);

std::string fp2_to_string(const Fp2Element& a);

}  // namespace cmint

#endif
