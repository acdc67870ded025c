#ifndef CMINT_DEGREES_HPP
#define CMINT_DEGREES_HPP

#include <map>
#include <string>
#include <vector>

#include "cmint/cmdata.hpp"

namespace cmint {

// Formal nonnegative rational combination sum c_p * log p, the output
// currency of the degree computations. Addition merges coefficient maps.
struct ArithDegree {
  std::map<long long, mpq_class> coeffs;

  void add(long long p, const mpq_class& c);
  ArithDegree& operator+=(const ArithDegree& other);
  bool is_zero() const { return coeffs.empty(); }
  double log_value() const;  // floating approximation sum c_p * ln p
  std::string to_string() const;
  bool operator==(const ArithDegree&) const = default;
};

// Diff_theta(alpha): the inert-in-K primes at which (e)*a_theta has odd
// order. Split-in-K primes never qualify (the local character is +1 on
// them), and K/F has no ramified primes.
std::vector<PrimeF> diff_set(const CMPairConfig& cfg, const AlphaElement& alpha,
                             const ThetaHom& theta);

enum class LengthBranch { Nu, NuPrime };

// Local length of the deformation ring: Nu = (1/2) ord_pr(alpha*pr*D),
// NuPrime = (1/2) ord_pr(alpha).
mpq_class local_length(const CMPairConfig& cfg, const AlphaElement& alpha, const PrimeF& pr,
                       LengthBranch branch);

// Orbital integral at ell, valid when Diff_theta(alpha) = {p_diff}.
long long orbital_integral(const CMPairConfig& cfg, long long ell, const AlphaElement& alpha,
                           const ThetaHom& theta, const PrimeF& p_diff);

// Per-term evaluation data, shared by degree_X and the report.
struct DegreeTerm {
  std::vector<PrimeF> diff;
  bool singleton = false;
  mpq_class L = 0;
  mpz_class R = 0;
  long long p = 0;
  ArithDegree value;
};

DegreeTerm evaluate_term(const CMPairConfig& cfg, const AlphaElement& alpha,
                         const ThetaHom& theta);

// deg of the CM cycle attached to (theta, alpha). Zero unless the Diff
// set is a singleton {pr}; then the coefficient at p is L*R with
// R = rho((e) a_theta^{-1} pr^{-1}) and L the local length for the
// branch selected by p | dB and whether ker(theta) contains the prime
// over pr. Every emitted coefficient is a nonnegative integer.
ArithDegree degree_X(const CMPairConfig& cfg, const AlphaElement& alpha, const ThetaHom& theta);

// The split-quaternion (dB = 1) formula on its own code path:
// (1/2) log p * ord_pr(alpha*pr*D) * rho(alpha*pr^{-1}*D) on singleton
// Diff, zero otherwise.
ArithDegree degree_X_classical(const CMPairConfig& cfg, const AlphaElement& alpha);

// Fourier coefficient view: 4 * degree_X_classical.
ArithDegree eisenstein_coeff(const CMPairConfig& cfg, const AlphaElement& alpha);

}  // namespace cmint

#endif
