#ifndef DIRICHLET_REAL_HPP
#define DIRICHLET_REAL_HPP

#include <mpfr.h>
#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dirichlet {

// Arbitrary-precision real backed by one mpfr_t. Every value carries its own
// precision; binary operations round to the wider operand's precision.
class Real {
public:
  static constexpr mpfr_prec_t min_prec = 16;

  Real() {
    mpfr_init2(v_, min_prec);
    mpfr_set_zero(v_, 1);
  }
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real: unparsable decimal literal: " + s);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, min_prec);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // exponent e with |x| in [2^{e-1}, 2^e); 0 for zero/nan
  long exponent2() const {
    if (!is_finite() || is_zero()) return 0;
    return static_cast<long>(mpfr_get_exp(v_));
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  static Real zero(mpfr_prec_t prec) { return Real(prec); }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e at the given precision
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  static Real nan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_nan(r.v_);
    return r;
  }

  Real& operator+=(const Real& o) { return apply2(mpfr_add, o); }
  Real& operator-=(const Real& o) { return apply2(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return apply2(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return apply2(mpfr_div, o); }
  Real& operator+=(long x) {
    mpfr_add_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long x) {
    mpfr_sub_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long x) {
    mpfr_mul_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long x) {
    mpfr_div_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

  // decimal string, scientific form mantissa/exponent as mpfr prints it
  std::string str(std::size_t digits10) const;

private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, min_prec); }
  template <typename F>
  Real& apply2(F op, const Real& o) {
    if (mpfr_get_prec(v_) < mpfr_get_prec(o.v_)) {
      mpfr_t tmp;
      mpfr_init2(tmp, mpfr_get_prec(o.v_));
      op(tmp, v_, o.v_, MPFR_RNDN);
      mpfr_swap(v_, tmp);
      mpfr_clear(tmp);
    } else {
      op(v_, v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  mpfr_t v_;
};

inline Real abs(const Real& a) {
  Real r(a);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& a) {
  Real r(a);
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log1p(const Real& a) {
  Real r(a.precision());
  mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log2(const Real& a) {
  Real r(a.precision());
  mpfr_log2(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sin(const Real& a) {
  Real r(a.precision());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real cos(const Real& a) {
  Real r(a.precision());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, long e) {
  Real r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& e) {
  Real r(std::max(a.precision(), e.precision()));
  mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& a, long e) {
  Real r(a);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}
inline Real floor(const Real& a) {
  Real r(a);
  mpfr_floor(r.raw(), a.raw());
  return r;
}
inline Real round(const Real& a) {
  Real r(a);
  mpfr_round(r.raw(), a.raw());
  return r;
}
inline Real fma(const Real& a, const Real& b, const Real& c) {
  Real r(std::max({a.precision(), b.precision(), c.precision()}));
  mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
  return r;
}
inline Real gamma(const Real& a) {
  Real r(a.precision());
  mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
// n! exactly rounded at the given precision
inline Real factorial(unsigned long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
// value correctly rounded to exactly the given precision
inline Real round_to(const Real& a, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline std::string Real::str(std::size_t digits10) const {
  if (is_nan()) return "nan";
  if (!is_finite()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits10, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sgn;
  if (!mant.empty() && mant[0] == '-') {
    sgn = "-";
    mant.erase(0, 1);
  }
  // mant are digits with implied point before the first: value = 0.mant * 10^e
  return sgn + "0." + mant + "e" + std::to_string(static_cast<long long>(e));
}

}  // namespace dirichlet

#endif  // DIRICHLET_REAL_HPP
