#ifndef CMINT_FIELDS_HPP
#define CMINT_FIELDS_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmint/arith.hpp"

namespace cmint {

enum class Violation {
  NotNegative,
  NotFundamental,
  NotCoprime,
  DBNotEvenSquarefree,
  DBPrimeNotInert,
  NonpositiveM,
};

const char* violation_name(Violation v);

struct ValidationError : std::runtime_error {
  Violation kind;
  long long detail;  // offending value (a discriminant or a prime), 0 if n/a
  ValidationError(Violation k, long long d);
};

// Validated problem instance: two negative coprime fundamental
// discriminants d1, d2, a quaternion discriminant dB (1 = split), and a
// Hecke index m. D = d1*d2 is the discriminant of the real quadratic
// field F, and w1, w2 are the unit group orders of O_{K1}, O_{K2}.
struct CMPairConfig {
  long long d1 = 0, d2 = 0;
  long long dB = 1;
  long long m = 1;
  long long D = 0;
  int w1 = 2, w2 = 2;
  std::vector<long long> dB_primes;
};

bool is_fundamental_discriminant(long long d);
CMPairConfig validate(long long d1, long long d2, long long dB, long long m);

// Element x + y*w of O_F, with w = (D + sqrt(D))/2 the standard
// generator. sqrt(D) itself is 2w - D.
struct FElement {
  mpz_class x, y;
};

FElement felem(const mpz_class& x, const mpz_class& y);
FElement felem_sqrtD(const CMPairConfig& cfg);  // 2w - D, coords (-D, 2)
mpz_class felem_trace(const CMPairConfig& cfg, const FElement& e);
mpz_class felem_norm(const CMPairConfig& cfg, const FElement& e);
FElement felem_mul(const CMPairConfig& cfg, const FElement& a, const FElement& b);
bool felem_is_zero(const FElement& e);

enum class FSplitting { Split, Inert, Ramified };
enum class KSplitting { SplitInK, InertInK };

// A prime of O_F over p. Split primes come in conjugate pairs labeled by
// the mod-p root classes of the minimal polynomial of w; the canonical
// class (smaller root) gets conjugate = false.
struct PrimeF {
  long long p = 0;
  FSplitting tag = FSplitting::Inert;
  bool conjugate = false;
  long long root0 = 0;  // mod-p root of the w minimal polynomial (split only)
  KSplitting k_splitting = KSplitting::InertInK;

  friend bool operator==(const PrimeF& a, const PrimeF& b) {
    return a.p == b.p && a.tag == b.tag && a.conjugate == b.conjugate;
  }
  friend std::strong_ordering operator<=>(const PrimeF& a, const PrimeF& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.conjugate <=> b.conjugate;
  }
};

// Compact label: "3s0"/"3s1" for the canonical/conjugate split prime,
// "2r" ramified, "5i" inert.
std::string prime_label(const PrimeF& pr);

// Minimal polynomial of w: x^2 - D x + (D^2 - D)/4.
MonicQuadratic w_min_poly(const CMPairConfig& cfg);

// The primes of O_F over p: a conjugate pair when kronecker(D, p) = 1,
// one inert prime when -1, one ramified prime when 0.
std::vector<PrimeF> splitting_in_F(long long p, const CMPairConfig& cfg);

// Splitting of the prime pr of F in the biquadratic field K = K1*K2
// (K/F is everywhere unramified for coprime discriminants, so the only
// cases are split and inert).
KSplitting splitting_in_K(const PrimeF& pr, const CMPairConfig& cfg);

// For odd split p, the sqrt(D)-label 2*root0 - D mod p of the prime;
// convenience view matching the x^2 = D root convention.
long long sqrtD_label(const PrimeF& pr, const CMPairConfig& cfg);

// ord_pr of the principal ideal (e), e != 0.
long long val(const CMPairConfig& cfg, const FElement& e, const PrimeF& pr);

// Fractional ideal of O_F in factored form. Empty map = O_F.
struct FIdeal {
  std::map<PrimeF, long long> factors;

  bool is_integral() const;
  bool is_trivial() const { return factors.empty(); }
  FIdeal mul(const FIdeal& other) const;
  FIdeal inverse() const;
  FIdeal mul_prime(const PrimeF& pr, long long k) const;
  long long exponent(const PrimeF& pr) const;
  mpz_class norm() const;  // for integral ideals
  std::string to_string() const;
  bool operator==(const FIdeal&) const = default;
};

FIdeal ideal_of(const CMPairConfig& cfg, const FElement& e);
FIdeal different(const CMPairConfig& cfg);

// Number of ideals of O_{K,l} above pr with relative norm pr^k:
// k+1 if pr splits in K, the parity indicator if inert, 0 for k < 0.
long long rho_local(const PrimeF& pr, long long k);

// Number of integral O_K-ideals with relative norm b; 0 if b is not
// integral. Multiplicative over the factored form.
mpz_class rho(const FIdeal& b);

}  // namespace cmint

#endif
