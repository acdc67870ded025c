#include "cmint/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace cmint {

namespace {

long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long mulmod(long long a, long long b, long long m) {
  return (long long)((__int128)a * b % m);
}

long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long m) {
  // extended Euclid; a must be a unit mod m
  long long t = 0, nt = 1, r = m, nr = mod_ll(a, m);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("inv_mod: not a unit");
  return mod_ll(t, m);
}

}  // namespace

int kronecker(long long a, long long n) {
  if (n == 0) throw std::domain_error("kronecker: n = 0");
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;  // (a|-1) = -1 for a < 0
  }
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  // strip 2s from n using (a|2)
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v & 1) {
    long long am = mod_ll(a, 8);
    if (am == 3 || am == 5) sign = -sign;
  }
  a = mod_ll(a, n);
  // Jacobi loop on odd n >= 1
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      long long nm = n & 7;
      if (nm == 3 || nm == 5) sign = -sign;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

int kronecker(const mpz_class& a, const mpz_class& n) {
  if (n == 0) throw std::domain_error("kronecker: n = 0");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(const mpz_class& n) {
  // BPSW + extra Miller-Rabin rounds; BPSW alone has been verified
  // exhaustively below 2^64, which covers the deterministic range.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Brent's cycle variant of Pollard rho, x^2 + c with c = 1, 2, 3, ...
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
    while (g == 1) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k = 0;
      while (k < r && g == 1) {
        ys = y;
        mpz_class lim = r - k;
        if (lim > 128) lim = 128;
        for (mpz_class i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        g = d;
        k += 128;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    // degenerate cycle for this c, try the next one
  }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(const mpz_class& n_in) {
  if (n_in < 1) throw std::domain_error("factorize: n must be >= 1");
  mpz_class n = n_in;
  std::vector<mpz_class> primes;
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; d == 2 ? d = 3 : d += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  if (n > 1) {
    if (mpz_class(1000000) * 1000000 > n) {
      primes.push_back(n);  // below the trial bound squared, must be prime
    } else {
      factor_rec(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().p == p)
      ++out.back().e;
    else
      out.push_back({p, 1});
  }
  return out;
}

unsigned ord_p(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::domain_error("ord_p: n = 0");
  mpz_class m = abs(n);
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++k;
  }
  return k;
}

std::array<mpz_class, 2> quadratic_roots_mod_p(const MonicQuadratic& f, const mpz_class& p) {
  auto reject = [] { throw std::domain_error("non-Henselian input"); };
  if (p == 2) {
    // f' = 2x + b = b mod 2: need b odd; then f(0) = c and f(1) = 1+b+c
    // are both roots iff c even, and there is no root iff c odd.
    bool b_odd = mpz_odd_p(f.b.get_mpz_t());
    bool c_odd = mpz_odd_p(f.c.get_mpz_t());
    if (!b_odd || c_odd) reject();
    return {mpz_class(0), mpz_class(1)};
  }
  mpz_class disc = f.b * f.b - 4 * f.c;
  mpz_class dm = disc % p;
  if (dm < 0) dm += p;
  if (dm == 0) reject();  // double root: derivative vanishes there
  if (mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t()) != 1) reject();
  if (!mpz_fits_slong_p(p.get_mpz_t())) throw std::domain_error("quadratic_roots_mod_p: p too large");
  mpz_class s((long)sqrt_mod_p(dm.get_si(), p.get_si()));
  mpz_class inv2;
  mpz_class two = 2;
  mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
  mpz_class r1 = ((-f.b + s) * inv2) % p;
  mpz_class r2 = ((-f.b - s) * inv2) % p;
  if (r1 < 0) r1 += p;
  if (r2 < 0) r2 += p;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

mpz_class hensel_lift_in_class(const MonicQuadratic& f, const mpz_class& p, unsigned k,
                               const mpz_class& base_root) {
  if (k == 0) throw std::domain_error("hensel_lift_in_class: k must be >= 1");
  mpz_class root = base_root % p;
  if (root < 0) root += p;
  mpz_class mod = p;
  unsigned have = 1;
  auto feval = [&](const mpz_class& x) -> mpz_class { return x * x + f.b * x + f.c; };
  if (feval(root) % p != 0) throw std::domain_error("hensel_lift_in_class: not a root mod p");
  while (have < k) {
    unsigned next = std::min(2 * have, k);
    mpz_class m2;
    mpz_pow_ui(m2.get_mpz_t(), p.get_mpz_t(), next);
    // Newton step: x <- x - f(x)/f'(x) mod p^next
    mpz_class fp = 2 * root + f.b;
    mpz_class fpinv;
    if (mpz_invert(fpinv.get_mpz_t(), fp.get_mpz_t(), m2.get_mpz_t()) == 0)
      throw std::domain_error("non-Henselian input");
    root = (root - feval(root) * fpinv) % m2;
    if (root < 0) root += m2;
    mod = m2;
    have = next;
  }
  mpz_class check = feval(root) % mod;
  if (check != 0) throw std::logic_error("hensel_lift_in_class: lift failed");
  return root;
}

mpz_class hensel_root(const MonicQuadratic& f, const mpz_class& p, unsigned k) {
  mpz_class c = hensel_lift_in_class(f, p, k, quadratic_roots_mod_p(f, p)[0]);
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  mpz_class other = ((-f.b - c) % pk + pk) % pk;
  return std::min(c, other);
}

long long least_nonresidue(long long p) {
  if (p < 3 || (p & 1) == 0) throw std::domain_error("least_nonresidue: p must be an odd prime");
  for (long long n = 2;; ++n)
    if (kronecker(n, p) == -1) return n;
}

long long sqrt_mod_p(long long a, long long p) {
  a = mod_ll(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (kronecker(a, p) != 1) throw std::domain_error("sqrt_mod_p: not a residue");
  long long r;
  if ((p & 3) == 3) {
    r = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks, generator from the least nonresidue for determinism
    long long q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    long long z = powmod(least_nonresidue(p), q, p);
    long long m = s;
    long long c = z;
    long long t = powmod(a, q, p);
    r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      long long i = 0, tt = t;
      while (tt != 1) {
        tt = mulmod(tt, tt, p);
        ++i;
      }
      long long b = c;
      for (long long j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      r = mulmod(r, b, p);
    }
  }
  return std::min(r, p - r);
}

Fp2Element fp2_make(long long p, long long c0, long long c1) {
  if (p < 2) throw std::domain_error("fp2_make: bad prime");
  Fp2Element x;
  x.p = p;
  x.n = p == 2 ? 0 : least_nonresidue(p);
  x.c0 = mod_ll(c0, p);
  x.c1 = mod_ll(c1, p);
  return x;
}

Fp2Element fp2_from_int(long long p, long long v) { return fp2_make(p, v, 0); }

namespace {
void check_same_field(const Fp2Element& a, const Fp2Element& b) {
  if (a.p != b.p) throw std::domain_error("fp2: mixed fields");
}
}  // namespace

Fp2Element fp2_add(const Fp2Element& a, const Fp2Element& b) {
  check_same_field(a, b);
  return fp2_make(a.p, a.c0 + b.c0, a.c1 + b.c1);
}

Fp2Element fp2_sub(const Fp2Element& a, const Fp2Element& b) {
  check_same_field(a, b);
  return fp2_make(a.p, a.c0 - b.c0, a.c1 - b.c1);
}

Fp2Element fp2_neg(const Fp2Element& a) { return fp2_make(a.p, -a.c0, -a.c1); }

Fp2Element fp2_mul(const Fp2Element& a, const Fp2Element& b) {
  check_same_field(a, b);
  long long p = a.p;
  if (p == 2) {
    // t^2 = t + 1
    long long tt = a.c1 & b.c1;
    long long c0 = (a.c0 & b.c0) ^ tt;
    long long c1 = (a.c0 & b.c1) ^ (a.c1 & b.c0) ^ tt;
    return fp2_make(2, c0, c1);
  }
  // (a0 + a1 t)(b0 + b1 t), t^2 = n
  long long c0 = mod_ll(mulmod(a.c0, b.c0, p) + mulmod(mulmod(a.c1, b.c1, p), a.n, p), p);
  long long c1 = mod_ll(mulmod(a.c0, b.c1, p) + mulmod(a.c1, b.c0, p), p);
  return fp2_make(p, c0, c1);
}

Fp2Element fp2_scale(long long k, const Fp2Element& a) {
  long long km = mod_ll(k, a.p);
  return fp2_make(a.p, mulmod(km, a.c0, a.p), mulmod(km, a.c1, a.p));
}

Fp2Element fp2_frobenius(const Fp2Element& a) {
  if (a.p == 2) return fp2_make(2, a.c0 ^ a.c1, a.c1);  // (c0 + c1 t)^2 = (c0+c1) + c1 t
  return fp2_make(a.p, a.c0, -a.c1);
}

Fp2Element fp2_inverse(const Fp2Element& a) {
  if (a.c0 == 0 && a.c1 == 0) throw std::domain_error("fp2_inverse: zero");
  // x^{-1} = Frob(x) / N(x) with N(x) = x * Frob(x) in F_p
  Fp2Element conj = fp2_frobenius(a);
  Fp2Element nrm = fp2_mul(a, conj);
  if (nrm.c1 != 0) throw std::logic_error("fp2_inverse: norm not in F_p");
  long long ninv = inv_mod(nrm.c0, a.p);
  return fp2_scale(ninv, conj);
}

Fp2Element fp2_sqrt(long long d, long long p) {
  if (p == 2)
    throw std::domain_error("fp2_sqrt: no root outside F_2 exists in F_4 (squaring is Frobenius)");
  if (mod_ll(d, p) == 0) throw std::domain_error("fp2_sqrt: p divides d");
  if (kronecker(d, p) != -1) throw std::domain_error("fp2_sqrt: d is a square mod p");
  long long n = least_nonresidue(p);
  // s = c1 * t with (c1 t)^2 = c1^2 n = d, so c1 = sqrt(d/n) in F_p
  long long c1 = sqrt_mod_p(mulmod(mod_ll(d, p), inv_mod(n, p), p), p);
  c1 = std::min(c1, p - c1);
  return fp2_make(p, 0, c1);
}

std::array<Fp2Element, 2> fp2_roots_of_irreducible(long long b, long long c, long long p) {
  if (p == 2) {
    if (mod_ll(b, 2) != 1 || mod_ll(c, 2) != 1)
      throw std::domain_error("fp2_roots_of_irreducible: reducible mod 2");
    return {fp2_make(2, 0, 1), fp2_make(2, 1, 1)};  // roots of x^2 + x + 1
  }
  long long disc = 0;
  {
    __int128 d = (__int128)b * b - (__int128)4 * c;
    d %= p;
    disc = (long long)d;
  }
  Fp2Element s = fp2_sqrt(mod_ll(disc, p), p);  // rejects reducible input
  long long half = inv_mod(2, p);
  Fp2Element mb = fp2_from_int(p, mod_ll(-b, p));
  Fp2Element r0 = fp2_scale(half, fp2_add(mb, s));
  Fp2Element r1 = fp2_scale(half, fp2_sub(mb, s));
  return {r0, r1};
}

std::string fp2_to_string(const Fp2Element& a) {
  std::string s = std::to_string(a.c0);
  if (a.c1 != 0) s += "+" + std::to_string(a.c1) + "t";
  return s;
}

}  // namespace cmint
