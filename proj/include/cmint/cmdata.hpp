#ifndef CMINT_CMDATA_HPP
#define CMINT_CMDATA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cmint/fields.hpp"

namespace cmint {

// Totally positive alpha in D^{-1} with trace m, stored through its
// integral companion e = (a + m*sqrt(D))/2, so that (alpha)*D = (e).
struct AlphaElement {
  long long a = 0;
  long long m = 1;
  FElement e;
};

// All AlphaElements for the config: a = m*D mod 2, a^2 < m^2*D,
// ascending in a.
std::vector<AlphaElement> enumerate_alphas(const CMPairConfig& cfg);

// Per-prime data of a homomorphism theta : O_K -> O_B/m_B = prod F_{p^2}.
// r1, r2 are the chosen roots in F_{p^2} of the minimal polynomials of
// the O_{K1}, O_{K2} generators (d_i + sqrt(d_i))/2; for odd p these
// carry the same data as the square-root pair (s1, s2) = (2*r1 - d1,
// 2*r2 - d2). kernel_prime is the split prime of F over p cut out by
// ker(theta).
struct ThetaLocal {
  long long p = 0;
  Fp2Element r1, r2;
  int idx1 = 0, idx2 = 0;  // 0 = canonical root, 1 = Frobenius conjugate
  PrimeF kernel_prime;
};

struct ThetaHom {
  std::vector<ThetaLocal> locals;  // ascending p; empty for dB = 1
  std::string to_string() const;
};

// Builds the local datum at p | dB from the two root choices and
// derives the kernel prime. Exposed for tests.
ThetaLocal make_theta_local(const CMPairConfig& cfg, long long p, int idx1, int idx2);

// theta(w) in F_p, computed from the tensor expansion of w over the
// generators: w = d1*d2 - d2*g1 - d1*g2 + 2*g1*g2.
Fp2Element theta_of_w(const CMPairConfig& cfg, const Fp2Element& r1, const Fp2Element& r2);

// All 4^r homomorphisms, lexicographic in (p, first-root choice,
// second-root choice) with the smallest p most significant.
std::vector<ThetaHom> enumerate_thetas(const CMPairConfig& cfg);

// ker(theta) cap O_F: the product of the per-prime kernel primes.
FIdeal a_theta(const ThetaHom& theta, const CMPairConfig& cfg);

// Whether the unique prime of K over pr divides ker(theta); pr must lie
// over a prime dividing dB.
bool theta_kernel_contains(const ThetaHom& theta, const PrimeF& pr, const CMPairConfig& cfg);

}  // namespace cmint

#endif
