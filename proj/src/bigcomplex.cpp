#include "cmint/bigcomplex.hpp"

#include <algorithm>
#include <cmath>

namespace cmint {

BigComplex::BigComplex(mpfr_prec_t prec) : prec_(std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)) {
  mpfr_init2(re_, prec_);
  mpfr_init2(im_, prec_);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

BigComplex::BigComplex(const BigComplex& other) : prec_(other.prec_) {
  mpfr_init2(re_, prec_);
  mpfr_init2(im_, prec_);
  mpfr_set(re_, other.re_, MPFR_RNDN);
  mpfr_set(im_, other.im_, MPFR_RNDN);
}

BigComplex::BigComplex(BigComplex&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(re_, MPFR_PREC_MIN);
  mpfr_init2(im_, MPFR_PREC_MIN);
  mpfr_swap(re_, other.re_);
  mpfr_swap(im_, other.im_);
}

BigComplex& BigComplex::operator=(const BigComplex& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(re_, prec_);
    mpfr_set_prec(im_, prec_);
    mpfr_set(re_, other.re_, MPFR_RNDN);
    mpfr_set(im_, other.im_, MPFR_RNDN);
  }
  return *this;
}

BigComplex& BigComplex::operator=(BigComplex&& other) noexcept {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_swap(re_, other.re_);
    mpfr_swap(im_, other.im_);
  }
  return *this;
}

BigComplex::~BigComplex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

void BigComplex::set(double re, double im) {
  mpfr_set_d(re_, re, MPFR_RNDN);
  mpfr_set_d(im_, im, MPFR_RNDN);
}

void BigComplex::set_re(const mpz_class& v) {
  mpfr_set_z(re_, v.get_mpz_t(), MPFR_RNDN);
  mpfr_set_zero(im_, 1);
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
  mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::operator-(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
  mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_t t1, t2;
  mpfr_init2(t1, r.precision());
  mpfr_init2(t2, r.precision());
  // re = a c - b d
  mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
  mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
  mpfr_sub(r.re_, t1, t2, MPFR_RNDN);
  // im = a d + b c
  mpfr_mul(t1, re_, o.im_, MPFR_RNDN);
  mpfr_mul(t2, im_, o.re_, MPFR_RNDN);
  mpfr_add(r.im_, t1, t2, MPFR_RNDN);
  mpfr_clear(t1);
  mpfr_clear(t2);
  return r;
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_t den, t1, t2;
  mpfr_init2(den, r.precision());
  mpfr_init2(t1, r.precision());
  mpfr_init2(t2, r.precision());
  // den = c^2 + d^2
  mpfr_sqr(t1, o.re_, MPFR_RNDN);
  mpfr_sqr(t2, o.im_, MPFR_RNDN);
  mpfr_add(den, t1, t2, MPFR_RNDN);
  // re = (a c + b d)/den
  mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
  mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
  mpfr_add(t1, t1, t2, MPFR_RNDN);
  mpfr_div(r.re_, t1, den, MPFR_RNDN);
  // im = (b c - a d)/den
  mpfr_mul(t1, im_, o.re_, MPFR_RNDN);
  mpfr_mul(t2, re_, o.im_, MPFR_RNDN);
  mpfr_sub(t1, t1, t2, MPFR_RNDN);
  mpfr_div(r.im_, t1, den, MPFR_RNDN);
  mpfr_clear(den);
  mpfr_clear(t1);
  mpfr_clear(t2);
  return r;
}

BigComplex BigComplex::conj() const {
  BigComplex r(*this);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::abs() const {
  BigComplex r(prec_);
  mpfr_hypot(r.re_, re_, im_, MPFR_RNDN);
  return r;
}

std::string BigComplex::str(int digits) const {
  char* rs = nullptr;
  char* is = nullptr;
  mpfr_asprintf(&rs, "%.*Rg", digits, re_);
  mpfr_asprintf(&is, "%.*Rg", digits, im_);
  std::string out = std::string(rs) + " + " + is + "i";
  mpfr_free_str(rs);
  mpfr_free_str(is);
  return out;
}

BigComplex cexp_2pi_i(const BigComplex& tau) {
  // exp(2 pi i (u + iv)) = e^{-2 pi v} (cos 2 pi u + i sin 2 pi u)
  mpfr_prec_t prec = tau.precision();
  BigComplex r(prec);
  mpfr_t two_pi, arg, mag, s, c;
  mpfr_init2(two_pi, prec);
  mpfr_init2(arg, prec);
  mpfr_init2(mag, prec);
  mpfr_init2(s, prec);
  mpfr_init2(c, prec);
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  mpfr_mul(mag, two_pi, tau.im(), MPFR_RNDN);
  mpfr_neg(mag, mag, MPFR_RNDN);
  mpfr_exp(mag, mag, MPFR_RNDN);
  mpfr_mul(arg, two_pi, tau.re(), MPFR_RNDN);
  mpfr_sin_cos(s, c, arg, MPFR_RNDN);
  mpfr_mul(r.re(), mag, c, MPFR_RNDN);
  mpfr_mul(r.im(), mag, s, MPFR_RNDN);
  mpfr_clear(two_pi);
  mpfr_clear(arg);
  mpfr_clear(mag);
  mpfr_clear(s);
  mpfr_clear(c);
  return r;
}

double log2_magnitude(const BigComplex& x) {
  bool rz = mpfr_zero_p(x.re());
  bool iz = mpfr_zero_p(x.im());
  if (rz && iz) return -1e18;
  long er = rz ? -2000000000L : mpfr_get_exp(x.re());
  long ei = iz ? -2000000000L : mpfr_get_exp(x.im());
  return (double)std::max(er, ei);
}

}  // namespace cmint
