#include "cmint/gzoracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cmint/hecke.hpp"

namespace cmint {

std::vector<ReducedForm> reduced_forms(long long d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw std::domain_error("reduced_forms: d must be a negative fundamental discriminant");
  std::vector<ReducedForm> out;
  for (long long a = 1; 3 * a * a <= -d; ++a) {
    for (long long b = -a; b <= a; ++b) {
      if (((b - d) % 2 + 2) % 2 != 0) continue;  // b = d mod 2
      long long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // reduced: b >= 0 on the boundary
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const ReducedForm& f, const ReducedForm& g) {
    return f.a != g.a ? f.a < g.a : f.b < g.b;
  });
  return out;
}

BigComplex cm_point(const ReducedForm& f, long long d, mpfr_prec_t prec) {
  BigComplex tau(prec);
  mpfr_set_si(tau.im(), -d, MPFR_RNDN);
  mpfr_sqrt(tau.im(), tau.im(), MPFR_RNDN);
  mpfr_div_si(tau.im(), tau.im(), 2 * f.a, MPFR_RNDN);
  mpfr_set_si(tau.re(), -f.b, MPFR_RNDN);
  mpfr_div_si(tau.re(), tau.re(), 2 * f.a, MPFR_RNDN);
  return tau;
}

namespace {

// sigma_3(n) for 1 <= n <= N
std::vector<unsigned long long> sigma3_table(std::size_t N) {
  std::vector<unsigned long long> s(N + 1, 0);
  for (std::size_t d = 1; d <= N; ++d) {
    unsigned long long d3 = (unsigned long long)d * d * d;
    for (std::size_t n = d; n <= N; n += d) s[n] += d3;
  }
  return s;
}

}  // namespace

BigComplex j_invariant(const BigComplex& tau, mpfr_prec_t P) {
  double v = mpfr_get_d(tau.im(), MPFR_RNDN);
  if (!(v >= 0.5)) throw std::domain_error("j_invariant: Im tau too small");

  // |q| = e^{-2 pi v}; g = -log2|q|, also the bit size of |j| ~ 1/|q|.
  // Working precision carries the magnitude so the absolute error bound
  // holds regardless of how large j is.
  double g = 2.0 * M_PI * v / std::log(2.0);
  mpfr_prec_t Pw = P + 64 + (mpfr_prec_t)g;
  // Tail targets: eta tail 2|q|^{N+1}/(1-|q|), E4 tail <= 243 (N+1)^4 |q|^{N+1}.
  // Start from the geometric estimate and bump until the polynomial
  // factor is covered.
  double target = (double)Pw + 32;
  std::size_t N = (std::size_t)(target / g) + 16;
  while (8.0 + 4.0 * std::log2((double)N + 1) + target - g * (double)(N + 1) > -16.0) ++N;
  if (N > 100000000) throw std::domain_error("j_invariant: precision request infeasible");

  BigComplex tw(Pw);
  mpfr_set(tw.re(), tau.re(), MPFR_RNDN);
  mpfr_set(tw.im(), tau.im(), MPFR_RNDN);
  BigComplex q = cexp_2pi_i(tw);

  auto sigma3 = sigma3_table(N);

  BigComplex one(Pw);
  one.set(1.0, 0.0);
  BigComplex qn = q;          // q^n
  BigComplex eta_prod = one;  // prod (1 - q^n)
  BigComplex e4 = one;        // 1 + 240 sum sigma3(n) q^n
  for (std::size_t n = 1; n <= N; ++n) {
    eta_prod = eta_prod * (one - qn);
    BigComplex term(Pw);
    mpfr_mul_ui(term.re(), qn.re(), 240, MPFR_RNDN);
    mpfr_mul_ui(term.im(), qn.im(), 240, MPFR_RNDN);
    mpfr_mul_ui(term.re(), term.re(), (unsigned long)sigma3[n], MPFR_RNDN);
    mpfr_mul_ui(term.im(), term.im(), (unsigned long)sigma3[n], MPFR_RNDN);
    e4 = e4 + term;
    if (n < N) qn = qn * q;
  }
  // Delta = q * eta_prod^24
  BigComplex p2 = eta_prod * eta_prod;
  BigComplex p4 = p2 * p2;
  BigComplex p8 = p4 * p4;
  BigComplex p24 = p8 * p8 * p8;
  BigComplex delta = q * p24;
  BigComplex j = (e4 * e4 * e4) / delta;
  return j;
}

mpfr_prec_t gz_initial_precision(long long d1, long long d2) {
  std::size_t h1 = reduced_forms(d1).size();
  std::size_t h2 = reduced_forms(d2).size();
  double im_max = std::sqrt((double)(d1 * d2)) / 2.0;
  double bits = 2.0 * M_PI * im_max / std::log(2.0);
  return (mpfr_prec_t)(64 + std::ceil(3.02 * (double)(h1 * h2) * bits));
}

namespace {

struct GZResult {
  mpz_class value;
  mpfr_prec_t precision_used;
};

constexpr mpfr_prec_t kPrecCap = 1 << 16;

// One evaluation attempt at declared precision P. Returns false when the
// rounding gate (0.25 after error accounting) fails.
bool gz_attempt(long long d1, long long d2, mpfr_prec_t P, int w1w2, mpz_class& out) {
  mpfr_prec_t Pw = P + 64;
  auto forms1 = reduced_forms(d1);
  auto forms2 = reduced_forms(d2);
  std::vector<BigComplex> j1, j2;
  j1.reserve(forms1.size());
  j2.reserve(forms2.size());
  for (const auto& f : forms1) j1.push_back(j_invariant(cm_point(f, d1, Pw), P));
  for (const auto& f : forms2) j2.push_back(j_invariant(cm_point(f, d2, Pw), P));

  BigComplex prod(Pw);
  prod.set(1.0, 0.0);
  // factor relative errors tracked in log2 (they underflow doubles)
  double max_rel_log2 = -1e18;
  std::size_t nfac = 0;
  for (const auto& a : j1) {
    for (const auto& b : j2) {
      BigComplex f = a - b;
      double mag = log2_magnitude(f);
      // absolute error of each j: the declared 2^{-P/2} bound plus the
      // rounding tail scaled by the j magnitude
      double mag_j = std::max(log2_magnitude(a), log2_magnitude(b));
      double j_err_log2 = std::max(-(double)P / 2 + 1, mag_j - (double)Pw + 24);
      if (mag < j_err_log2 + 4) return false;  // factor drowned in j error
      max_rel_log2 = std::max(max_rel_log2, j_err_log2 + 1 - mag);
      ++nfac;
      prod = prod * f;
    }
  }
  // The product of conjugate-paired factors is real up to noise.
  double pm = log2_magnitude(prod);
  if (!mpfr_zero_p(prod.im())) {
    double ie = (double)mpfr_get_exp(prod.im());
    if (ie > pm - (double)P / 4) return false;
  }
  // y = |prod|^{8/(w1 w2)}
  unsigned long num = 8, den = (unsigned long)w1w2;
  unsigned long gcd = std::gcd(num, den);
  num /= gcd;
  den /= gcd;
  mpfr_t y;
  mpfr_init2(y, Pw);
  mpfr_hypot(y, prod.re(), prod.im(), MPFR_RNDN);
  mpfr_rootn_ui(y, y, den, MPFR_RNDN);
  mpfr_pow_ui(y, y, num, MPFR_RNDN);

  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), y, MPFR_RNDN);
  mpfr_t delta;
  mpfr_init2(delta, Pw);
  mpfr_sub_z(delta, y, n.get_mpz_t(), MPFR_RNDN);
  mpfr_abs(delta, delta, MPFR_RNDN);
  double gap = mpfr_get_d(delta, MPFR_RNDN);

  // absolute error of y in log2: |y| * (factor rel errors + rounding
  // slack), with 3 guard bits for the summation and the 8/(w1 w2) power
  double ops_log2 = std::log2((double)(nfac + 64));
  double rel_y_log2 =
      std::max(max_rel_log2 + std::log2((double)std::max<std::size_t>(nfac, 1)),
               ops_log2 - (double)Pw + 2) +
      3;
  double log2_abs_err = (mpfr_zero_p(y) ? 0.0 : (double)mpfr_get_exp(y)) + rel_y_log2;
  mpfr_clear(y);
  mpfr_clear(delta);

  if (gap > 0.245) return false;
  if (log2_abs_err > std::log2(0.25 - gap)) return false;
  if (n < 1) return false;
  out = n;
  return true;
}

GZResult gz_square_impl(long long d1, long long d2, mpfr_prec_t prec_request) {
  CMPairConfig cfg = validate(d1, d2, 1, 1);
  mpfr_prec_t P = prec_request > 0 ? prec_request : gz_initial_precision(d1, d2);
  P = std::max<mpfr_prec_t>(P, 64);
  for (; P <= kPrecCap; P *= 2) {
    mpz_class n;
    if (gz_attempt(d1, d2, P, cfg.w1 * cfg.w2, n)) return {n, P};
  }
  throw PrecisionExhausted();
}

}  // namespace

mpz_class gz_square(long long d1, long long d2, mpfr_prec_t prec_request) {
  return gz_square_impl(d1, d2, prec_request).value;
}

GZComparison gz_compare(long long d1, long long d2, mpfr_prec_t prec_request) {
  GZComparison cmp;
  GZResult res = gz_square_impl(d1, d2, prec_request);
  cmp.j_squared = res.value;
  cmp.precision_used = res.precision_used;
  for (const auto& pp : factorize(cmp.j_squared))
    cmp.oracle_exponents[pp.p.get_si()] = pp.e;

  CMPairConfig cfg = validate(d1, d2, 1, 1);
  ArithDegree formula = intersection_number(cfg);
  cmp.formula_coeffs = formula.coeffs;

  cmp.pass = true;
  for (const auto& [p, e] : cmp.oracle_exponents)
    if (formula.coeffs.find(p) == formula.coeffs.end() || formula.coeffs.at(p) != mpq_class(mpz_of(e)))
      cmp.pass = false;
  for (const auto& [p, c] : formula.coeffs)
    if (cmp.oracle_exponents.find(p) == cmp.oracle_exponents.end()) cmp.pass = false;
  for (const auto& [p, c] : formula.coeffs) {
    auto it = cmp.oracle_exponents.find(p);
    if (it != cmp.oracle_exponents.end() && c != 0)
      cmp.per_prime_ratio[p] = mpq_class(mpz_of(it->second)) / c;
  }
  return cmp;
}

}  // namespace cmint
