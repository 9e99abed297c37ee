#ifndef DIRICHLET_COMPLEX_HPP
#define DIRICHLET_COMPLEX_HPP

#include <algorithm>

#include "dirichlet/real.hpp"

namespace dirichlet {

// Minimal complex arithmetic over Real; only what the series evaluators need.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : im(r.precision()) { re = std::move(r); }

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real() const { return im.is_zero(); }

  Complex operator-() const { return Complex(-re, -im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }

  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
};

inline Real abs(const Complex& z) {
  if (z.im.is_zero()) return abs(z.re);
  Real r(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return Complex(std::move(m), Real(z.re.precision()));
  Real s(z.im.precision()), c(z.im.precision());
  sin_cos(s, c, z.im);
  return Complex(m * c, m * s);
}

inline Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0)
    return Complex(log(z.re), Real(z.re.precision()));
  Real m = abs(z);
  return Complex(log(m), atan2(z.im, z.re));
}

// z^w via principal branch
inline Complex pow(const Complex& z, const Complex& w) {
  Complex lw = log(z) * w;
  return exp(lw);
}

}  // namespace dirichlet

#endif  // DIRICHLET_COMPLEX_HPP
