#ifndef CMINT_GZORACLE_HPP
#define CMINT_GZORACLE_HPP

#include <map>

#include "cmint/bigcomplex.hpp"
#include "cmint/degrees.hpp"

namespace cmint {

struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("precision exhausted") {}
};

// Reduced positive definite binary quadratic form a x^2 + b x y + c y^2
// of discriminant b^2 - 4ac = d < 0.
struct ReducedForm {
  long long a = 1, b = 0, c = 1;
  bool operator==(const ReducedForm&) const = default;
};

// One reduced form per class, ascending lexicographic in (a, b);
// length = h(d). Rejects non-fundamental d.
std::vector<ReducedForm> reduced_forms(long long d);

// CM point (-b + sqrt(d))/(2a) of the form, at the given precision.
BigComplex cm_point(const ReducedForm& f, long long d, mpfr_prec_t prec);

// j(tau) with absolute error <= 2^{-P/2}, via E4(q)^3 / Delta(q) with
// Delta from the eta product q prod (1-q^n)^24; series truncated with a
// proven tail bound below the target. Requires Im tau >= 1/2.
BigComplex j_invariant(const BigComplex& tau, mpfr_prec_t P);

// Initial precision for the product of all class-pair j differences:
// 64 + ceil(3.02 * h1*h2 * 2*pi*(sqrt(|d1 d2|)/2) / ln 2).
mpfr_prec_t gz_initial_precision(long long d1, long long d2);

// |prod (j(tau1) - j(tau2))|^{8/(w1 w2)} rounded to an integer, with the
// nearest-integer gate at 0.25 after error accounting; doubles the
// precision on gate failure up to 2^16 bits, then throws
// PrecisionExhausted. prec_request = 0 selects the automatic policy.
mpz_class gz_square(long long d1, long long d2, mpfr_prec_t prec_request = 0);

struct GZComparison {
  mpz_class j_squared;
  std::map<long long, long long> oracle_exponents;       // p -> e_p from factoring J^2
  std::map<long long, mpq_class> formula_coeffs;         // p -> c_p from the formula side
  std::map<long long, mpq_class> per_prime_ratio;        // e_p / c_p where both nonzero
  bool pass = false;
  mpfr_prec_t precision_used = 0;
};

// Factor gz_square(d1, d2) and compare the exponent vector with the
// coefficient map of the dB = 1, m = 1 intersection number.
GZComparison gz_compare(long long d1, long long d2, mpfr_prec_t prec_request = 0);

}  // namespace cmint

#endif
