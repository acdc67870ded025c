#include "cmint/cmdata.hpp"

#include <algorithm>

namespace cmint {

std::vector<AlphaElement> enumerate_alphas(const CMPairConfig& cfg) {
  std::vector<AlphaElement> out;
  mpz_class bound = mpz_of(cfg.m);
  bound = bound * bound * mpz_of(cfg.D);  // a^2 < m^2 D
  long long parity = ((cfg.m * cfg.D) % 2 + 2) % 2;
  mpz_class amax;
  mpz_sqrt(amax.get_mpz_t(), bound.get_mpz_t());
  long long hi = amax.get_si();
  if (mpz_of(hi) * mpz_of(hi) >= bound) --hi;  // strict inequality
  long long lo = -hi;
  if ((lo % 2 + 2) % 2 != parity) ++lo;
  for (long long a = lo; a <= hi; a += 2) {
    AlphaElement al;
    al.a = a;
    al.m = cfg.m;
    al.e = felem(mpz_of(a - cfg.m * cfg.D) / 2, mpz_of(cfg.m));
    out.push_back(al);
  }
  return out;
}

Fp2Element theta_of_w(const CMPairConfig& cfg, const Fp2Element& r1, const Fp2Element& r2) {
  long long p = r1.p;
  Fp2Element acc = fp2_from_int(p, (cfg.d1 % p) * (cfg.d2 % p));
  acc = fp2_sub(acc, fp2_scale(cfg.d2, r1));
  acc = fp2_sub(acc, fp2_scale(cfg.d1, r2));
  acc = fp2_add(acc, fp2_scale(2, fp2_mul(r1, r2)));
  return acc;
}

ThetaLocal make_theta_local(const CMPairConfig& cfg, long long p, int idx1, int idx2) {
  if (std::find(cfg.dB_primes.begin(), cfg.dB_primes.end(), p) == cfg.dB_primes.end())
    throw std::domain_error("make_theta_local: p does not divide dB");
  auto gen_poly = [](long long d) {
    // minimal polynomial of (d + sqrt(d))/2 is x^2 - d x + (d^2 - d)/4
    return std::pair<long long, long long>{-d, (d * d - d) / 4};
  };
  auto [b1, c1] = gen_poly(cfg.d1);
  auto [b2, c2] = gen_poly(cfg.d2);
  ThetaLocal loc;
  loc.p = p;
  loc.idx1 = idx1;
  loc.idx2 = idx2;
  loc.r1 = fp2_roots_of_irreducible(b1, c1, p)[idx1];
  loc.r2 = fp2_roots_of_irreducible(b2, c2, p)[idx2];

  Fp2Element tw = theta_of_w(cfg, loc.r1, loc.r2);
  if (!tw.in_base()) throw std::logic_error("theta: theta(w) not in F_p");
  auto primes = splitting_in_F(p, cfg);
  if (primes.size() != 2) throw std::logic_error("theta: p | dB not split in F");
  if (tw.c0 == primes[0].root0 % p)
    loc.kernel_prime = primes[0];
  else if (tw.c0 == primes[1].root0 % p)
    loc.kernel_prime = primes[1];
  else
    throw std::logic_error("theta: theta(w) matches neither root class");
  return loc;
}

std::vector<ThetaHom> enumerate_thetas(const CMPairConfig& cfg) {
  std::size_t r = cfg.dB_primes.size();
  std::size_t total = std::size_t(1) << (2 * r);  // 4^r
  std::vector<ThetaHom> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    ThetaHom th;
    for (std::size_t j = 0; j < r; ++j) {
      // first prime most significant; digit = 2*idx1 + idx2
      std::size_t digit = (i >> (2 * (r - 1 - j))) & 3;
      th.locals.push_back(make_theta_local(cfg, cfg.dB_primes[j], int(digit >> 1), int(digit & 1)));
    }
    out.push_back(std::move(th));
  }
  return out;
}

FIdeal a_theta(const ThetaHom& theta, const CMPairConfig& cfg) {
  (void)cfg;
  FIdeal out;
  for (const auto& loc : theta.locals) out.factors[loc.kernel_prime] = 1;
  return out;
}

bool theta_kernel_contains(const ThetaHom& theta, const PrimeF& pr, const CMPairConfig& cfg) {
  if (std::find(cfg.dB_primes.begin(), cfg.dB_primes.end(), pr.p) == cfg.dB_primes.end())
    throw std::domain_error("theta_kernel_contains: prime not over dB");
  for (const auto& loc : theta.locals)
    if (loc.p == pr.p) return loc.kernel_prime == pr;
  throw std::logic_error("theta_kernel_contains: missing local datum");
}

std::string ThetaHom::to_string() const {
  if (locals.empty()) return "theta0";
  std::string s;
  for (const auto& loc : locals) {
    if (!s.empty()) s += ",";
    s += std::to_string(loc.p) + ":" + std::to_string(loc.idx1) + std::to_string(loc.idx2);
  }
  return s;
}

}  // namespace cmint
