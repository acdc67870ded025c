#include "cmint/fields.hpp"

#include <algorithm>
#include <numeric>

namespace cmint {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NotNegative: return "NotNegative";
    case Violation::NotFundamental: return "NotFundamental";
    case Violation::NotCoprime: return "NotCoprime";
    case Violation::DBNotEvenSquarefree: return "DBNotEvenSquarefree";
    case Violation::DBPrimeNotInert: return "DBPrimeNotInert";
    case Violation::NonpositiveM: return "NonpositiveM";
  }
  return "Unknown";
}

ValidationError::ValidationError(Violation k, long long d)
    : std::runtime_error(std::string(violation_name(k)) +
                         (d != 0 ? "(" + std::to_string(d) + ")" : "")),
      kind(k),
      detail(d) {}

bool is_fundamental_discriminant(long long d) {
  if (d == 0 || d == 1) return false;
  auto squarefree = [](long long n) {
    for (const auto& pp : factorize(mpz_of(std::abs(n))))
      if (pp.e > 1) return false;
    return true;
  };
  long long r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r == 0) {
    long long k = d / 4;
    long long kr = ((k % 4) + 4) % 4;
    return (kr == 2 || kr == 3) && squarefree(k);
  }
  return false;
}

CMPairConfig validate(long long d1, long long d2, long long dB, long long m) {
  if (d1 >= 0) throw ValidationError(Violation::NotNegative, d1);
  if (d2 >= 0) throw ValidationError(Violation::NotNegative, d2);
  if (std::gcd(d1, d2) != 1) throw ValidationError(Violation::NotCoprime, std::gcd(d1, d2));
  if (!is_fundamental_discriminant(d1)) throw ValidationError(Violation::NotFundamental, d1);
  if (!is_fundamental_discriminant(d2)) throw ValidationError(Violation::NotFundamental, d2);
  if (m <= 0) throw ValidationError(Violation::NonpositiveM, m);
  if (dB < 1) throw ValidationError(Violation::DBNotEvenSquarefree, dB);

  CMPairConfig cfg;
  cfg.d1 = d1;
  cfg.d2 = d2;
  cfg.dB = dB;
  cfg.m = m;
  __int128 D = (__int128)d1 * d2;
  if (D > (__int128)1 << 62) throw std::overflow_error("validate: d1*d2 too large");
  if ((__int128)m * m * D > (__int128)1 << 62) throw std::overflow_error("validate: m^2*D too large");
  cfg.D = (long long)D;
  auto units = [](long long d) { return d == -3 ? 6 : d == -4 ? 4 : 2; };
  cfg.w1 = units(d1);
  cfg.w2 = units(d2);

  if (dB > 1) {
    auto fac = factorize(mpz_of(dB));
    if (fac.size() % 2 != 0) throw ValidationError(Violation::DBNotEvenSquarefree, dB);
    for (const auto& pp : fac) {
      if (pp.e > 1) throw ValidationError(Violation::DBNotEvenSquarefree, dB);
      long long p = pp.p.get_si();
      if (kronecker(d1, p) != -1 || kronecker(d2, p) != -1)
        throw ValidationError(Violation::DBPrimeNotInert, p);
      cfg.dB_primes.push_back(p);
    }
  }
  return cfg;
}

FElement felem(const mpz_class& x, const mpz_class& y) { return FElement{x, y}; }

FElement felem_sqrtD(const CMPairConfig& cfg) { return FElement{mpz_of(-cfg.D), mpz_class(2)}; }

mpz_class felem_trace(const CMPairConfig& cfg, const FElement& e) { return 2 * e.x + e.y * mpz_of(cfg.D); }

mpz_class felem_norm(const CMPairConfig& cfg, const FElement& e) {
  mpz_class D = mpz_of(cfg.D);
  return e.x * e.x + e.x * e.y * D + e.y * e.y * (D * D - D) / 4;
}

FElement felem_mul(const CMPairConfig& cfg, const FElement& a, const FElement& b) {
  // w^2 = D*w - (D^2 - D)/4
  mpz_class D = mpz_of(cfg.D);
  mpz_class c = (D * D - D) / 4;
  mpz_class yy = a.y * b.y;
  return FElement{a.x * b.x - yy * c, a.x * b.y + a.y * b.x + yy * D};
}

bool felem_is_zero(const FElement& e) { return e.x == 0 && e.y == 0; }

std::string prime_label(const PrimeF& pr) {
  std::string s = std::to_string(pr.p);
  switch (pr.tag) {
    case FSplitting::Split: s += pr.conjugate ? "s1" : "s0"; break;
    case FSplitting::Inert: s += "i"; break;
    case FSplitting::Ramified: s += "r"; break;
  }
  return s;
}

MonicQuadratic w_min_poly(const CMPairConfig& cfg) {
  mpz_class D = mpz_of(cfg.D);
  return MonicQuadratic{-D, (D * D - D) / 4};
}

KSplitting splitting_in_K(const PrimeF& pr, const CMPairConfig& cfg) {
  if (pr.tag == FSplitting::Inert) return KSplitting::SplitInK;
  // residue field F_p: the symbol of the prime-to-p discriminant decides
  long long dj = (cfg.d1 % pr.p != 0) ? cfg.d1 : cfg.d2;
  if (dj % pr.p == 0) throw std::logic_error("splitting_in_K: p divides both discriminants");
  return kronecker(dj, pr.p) == 1 ? KSplitting::SplitInK : KSplitting::InertInK;
}

std::vector<PrimeF> splitting_in_F(long long p, const CMPairConfig& cfg) {
  int chi = kronecker(cfg.D, p);
  std::vector<PrimeF> out;
  if (chi == 1) {
    auto roots = quadratic_roots_mod_p(w_min_poly(cfg), mpz_of(p));
    for (int i = 0; i < 2; ++i) {
      PrimeF pr;
      pr.p = p;
      pr.tag = FSplitting::Split;
      pr.conjugate = (i == 1);
      pr.root0 = roots[i].get_si();
      pr.k_splitting = splitting_in_K(pr, cfg);
      out.push_back(pr);
    }
  } else {
    PrimeF pr;
    pr.p = p;
    pr.tag = chi == -1 ? FSplitting::Inert : FSplitting::Ramified;
    pr.k_splitting = splitting_in_K(pr, cfg);
    out.push_back(pr);
  }
  return out;
}

long long sqrtD_label(const PrimeF& pr, const CMPairConfig& cfg) {
  if (pr.tag != FSplitting::Split) throw std::domain_error("sqrtD_label: prime not split");
  long long r = (2 * pr.root0 - cfg.D) % pr.p;
  return r < 0 ? r + pr.p : r;
}

long long val(const CMPairConfig& cfg, const FElement& e, const PrimeF& pr) {
  if (felem_is_zero(e)) throw std::domain_error("val: zero element");
  mpz_class p = mpz_of(pr.p);
  mpz_class nrm = felem_norm(cfg, e);
  unsigned t = ord_p(nrm, p);
  switch (pr.tag) {
    case FSplitting::Ramified:
      return t;
    case FSplitting::Inert:
      if (t % 2 != 0) throw std::logic_error("val: odd norm order at inert prime");
      return t / 2;
    case FSplitting::Split: {
      // ord_p(x + y*c) with c the Hensel lift of this prime's root class,
      // at enough precision to resolve any valuation <= ord_p(norm)
      unsigned k = t + 1;
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
      mpz_class c = hensel_lift_in_class(w_min_poly(cfg), p, k, mpz_of(pr.root0));
      mpz_class r = (e.x + e.y * c) % pk;
      if (r < 0) r += pk;
      if (r == 0) throw std::logic_error("val: split valuation exceeds norm order");
      return ord_p(r, p);
    }
  }
  throw std::logic_error("val: bad tag");
}

bool FIdeal::is_integral() const {
  for (const auto& [pr, k] : factors)
    if (k < 0) return false;
  return true;
}

FIdeal FIdeal::mul(const FIdeal& other) const {
  FIdeal out = *this;
  for (const auto& [pr, k] : other.factors) {
    long long& e = out.factors[pr];
    e += k;
    if (e == 0) out.factors.erase(pr);
  }
  return out;
}

FIdeal FIdeal::inverse() const {
  FIdeal out;
  for (const auto& [pr, k] : factors) out.factors[pr] = -k;
  return out;
}

FIdeal FIdeal::mul_prime(const PrimeF& pr, long long k) const {
  FIdeal out = *this;
  long long& e = out.factors[pr];
  e += k;
  if (e == 0) out.factors.erase(pr);
  return out;
}

long long FIdeal::exponent(const PrimeF& pr) const {
  auto it = factors.find(pr);
  return it == factors.end() ? 0 : it->second;
}

mpz_class FIdeal::norm() const {
  if (!is_integral()) throw std::domain_error("FIdeal::norm: fractional ideal");
  mpz_class n = 1;
  for (const auto& [pr, k] : factors) {
    int f = pr.tag == FSplitting::Inert ? 2 : 1;
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), mpz_of(pr.p).get_mpz_t(), (unsigned long)(f * k));
    n *= pe;
  }
  return n;
}

std::string FIdeal::to_string() const {
  if (factors.empty()) return "(1)";
  std::string s;
  for (const auto& [pr, k] : factors) {
    if (!s.empty()) s += "*";
    s += prime_label(pr);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

FIdeal ideal_of(const CMPairConfig& cfg, const FElement& e) {
  if (felem_is_zero(e)) throw std::domain_error("ideal_of: zero element");
  FIdeal out;
  mpz_class nrm = abs(felem_norm(cfg, e));
  for (const auto& pp : factorize(nrm)) {
    if (!pp.p.fits_slong_p()) throw std::overflow_error("ideal_of: prime too large");
    long long p = pp.p.get_si();
    auto primes = splitting_in_F(p, cfg);
    if (primes.size() == 1) {
      long long k = primes[0].tag == FSplitting::Inert ? pp.e / 2 : pp.e;
      out.factors[primes[0]] = k;
    } else {
      long long v0 = val(cfg, e, primes[0]);
      if (v0 > (long long)pp.e) throw std::logic_error("ideal_of: split valuation exceeds norm order");
      if (v0 > 0) out.factors[primes[0]] = v0;
      if ((long long)pp.e - v0 > 0) out.factors[primes[1]] = pp.e - v0;
    }
  }
  return out;
}

FIdeal different(const CMPairConfig& cfg) { return ideal_of(cfg, felem_sqrtD(cfg)); }

long long rho_local(const PrimeF& pr, long long k) {
  if (k < 0) return 0;
  if (pr.k_splitting == KSplitting::SplitInK) return k + 1;
  return k % 2 == 0 ? 1 : 0;
}

mpz_class rho(const FIdeal& b) {
  if (!b.is_integral()) return 0;
  mpz_class r = 1;
  for (const auto& [pr, k] : b.factors) r *= mpz_of(rho_local(pr, k));
  return r;
}

}  // namespace cmint
