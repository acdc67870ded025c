#include "cmint/degrees.hpp"

#include <algorithm>
#include <cmath>

namespace cmint {

void ArithDegree::add(long long p, const mpq_class& c) {
  if (c == 0) return;
  mpq_class& slot = coeffs[p];
  slot += c;
  if (slot == 0) coeffs.erase(p);
}

ArithDegree& ArithDegree::operator+=(const ArithDegree& other) {
  for (const auto& [p, c] : other.coeffs) add(p, c);
  return *this;
}

double ArithDegree::log_value() const {
  double s = 0;
  for (const auto& [p, c] : coeffs) s += c.get_d() * std::log((double)p);
  return s;
}

std::string ArithDegree::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*log(" + std::to_string(p) + ")";
  }
  return s;
}

std::vector<PrimeF> diff_set(const CMPairConfig& cfg, const AlphaElement& alpha,
                             const ThetaHom& theta) {
  FIdeal ea = ideal_of(cfg, alpha.e).mul(a_theta(theta, cfg));
  std::vector<PrimeF> out;
  for (const auto& [pr, k] : ea.factors)
    if (pr.k_splitting == KSplitting::InertInK && k % 2 != 0) out.push_back(pr);
  return out;
}

mpq_class local_length(const CMPairConfig& cfg, const AlphaElement& alpha, const PrimeF& pr,
                       LengthBranch branch) {
  long long v = val(cfg, alpha.e, pr);
  mpq_class out;
  if (branch == LengthBranch::Nu) {
    out = mpq_class(mpz_of(v + 1), 2);
  } else {
    long long dd = different(cfg).exponent(pr);  // ord_pr(alpha) = ord_pr(e) - ord_pr(D)
    out = mpq_class(mpz_of(v - dd), 2);
  }
  out.canonicalize();
  return out;
}

namespace {

// rho_ell: the product of local factors at the primes of F over ell.
long long rho_at_ell(const FIdeal& b, long long ell, const CMPairConfig& cfg) {
  long long prod = 1;
  for (const auto& pr : splitting_in_F(ell, cfg)) prod *= rho_local(pr, b.exponent(pr));
  return prod;
}

const PrimeF* kernel_prime_over(const ThetaHom& theta, long long p) {
  for (const auto& loc : theta.locals)
    if (loc.p == p) return &loc.kernel_prime;
  return nullptr;
}

}  // namespace

long long orbital_integral(const CMPairConfig& cfg, long long ell, const AlphaElement& alpha,
                           const ThetaHom& theta, const PrimeF& p_diff) {
  auto diff = diff_set(cfg, alpha, theta);
  if (diff.size() != 1 || !(diff[0] == p_diff))
    throw std::domain_error("orbital_integral: Diff is not the given singleton");
  long long p = p_diff.p;
  FIdeal arg = ideal_of(cfg, alpha.e);  // realizes alpha*D
  const PrimeF* lp = kernel_prime_over(theta, ell);
  if (ell != p) {
    if (lp != nullptr) arg = arg.mul_prime(*lp, -1);
  } else {
    arg = arg.mul_prime(p_diff, -1);
    if (lp != nullptr) arg = arg.mul_prime(*lp, -1);
  }
  return rho_at_ell(arg, ell, cfg);
}

DegreeTerm evaluate_term(const CMPairConfig& cfg, const AlphaElement& alpha,
                         const ThetaHom& theta) {
  DegreeTerm term;
  term.diff = diff_set(cfg, alpha, theta);
  if (term.diff.size() != 1) return term;
  term.singleton = true;
  const PrimeF& pr = term.diff[0];
  term.p = pr.p;

  FIdeal r_arg = ideal_of(cfg, alpha.e).mul(a_theta(theta, cfg).inverse()).mul_prime(pr, -1);
  term.R = rho(r_arg);

  bool p_in_dB =
      std::find(cfg.dB_primes.begin(), cfg.dB_primes.end(), pr.p) != cfg.dB_primes.end();
  if (!p_in_dB) {
    term.L = local_length(cfg, alpha, pr, LengthBranch::Nu);
  } else if (theta_kernel_contains(theta, pr, cfg)) {
    term.L = local_length(cfg, alpha, pr, LengthBranch::NuPrime);
  } else {
    // ord_pr(alpha * pr) = val(e, pr) + 1 since ord_pr(D) = 0 at p | dB
    term.L = mpq_class(mpz_of(val(cfg, alpha.e, pr) + 1), 2);
    term.L.canonicalize();
  }

  mpq_class c = term.L * term.R;
  if (c != 0) {
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("degree_X: coefficient not a nonnegative integer");
    term.value.add(pr.p, c);
  }
  return term;
}

ArithDegree degree_X(const CMPairConfig& cfg, const AlphaElement& alpha, const ThetaHom& theta) {
  return evaluate_term(cfg, alpha, theta).value;
}

ArithDegree degree_X_classical(const CMPairConfig& cfg, const AlphaElement& alpha) {
  if (cfg.dB != 1) throw std::domain_error("degree_X_classical: requires dB = 1");
  ArithDegree out;
  FIdeal e_ideal = ideal_of(cfg, alpha.e);
  std::vector<PrimeF> diff;
  for (const auto& [pr, k] : e_ideal.factors)
    if (pr.k_splitting == KSplitting::InertInK && k % 2 != 0) diff.push_back(pr);
  if (diff.size() != 1) return out;
  const PrimeF& pr = diff[0];
  // (1/2) ord_pr(alpha*pr*D) * rho(alpha*pr^{-1}*D)
  mpq_class half_ord(mpz_of(e_ideal.exponent(pr) + 1), 2);
  half_ord.canonicalize();
  mpz_class r = rho(e_ideal.mul_prime(pr, -1));
  mpq_class c = half_ord * mpq_class(r);
  if (c != 0) {
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("degree_X_classical: coefficient not a nonnegative integer");
    out.add(pr.p, c);
  }
  return out;
}

ArithDegree eisenstein_coeff(const CMPairConfig& cfg, const AlphaElement& alpha) {
  ArithDegree out = degree_X_classical(cfg, alpha);
  for (auto& [p, c] : out.coeffs) c *= 4;
  return out;
}

}  // namespace cmint
