#ifndef CMINT_BIGCOMPLEX_HPP
#define CMINT_BIGCOMPLEX_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace cmint {

// Arbitrary-precision complex value on MPFR reals. Arithmetic allocates
// the result at the larger of the operand precisions, so precision
// propagates as the max through expressions.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 64);
  BigComplex(const BigComplex& other);
  BigComplex(BigComplex&& other) noexcept;
  BigComplex& operator=(const BigComplex& other);
  BigComplex& operator=(BigComplex&& other) noexcept;
  ~BigComplex();

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }
  mpfr_ptr re() { return re_; }
  mpfr_ptr im() { return im_; }

  void set(double re, double im);
  void set_re(const mpz_class& v);

  BigComplex operator+(const BigComplex& o) const;
  BigComplex operator-(const BigComplex& o) const;
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator/(const BigComplex& o) const;

  BigComplex conj() const;
  // |z|, at this precision
  BigComplex abs() const;

  double to_double_re() const { return mpfr_get_d(re_, MPFR_RNDN); }
  double to_double_im() const { return mpfr_get_d(im_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t re_, im_;
};

// exp(2*pi*i*tau)
BigComplex cexp_2pi_i(const BigComplex& tau);

// log2 of the magnitude of x (crude: exponent of the larger component);
// -infinity indicator (very negative) for zero.
double log2_magnitude(const BigComplex& x);

}  // namespace cmint

#endif
