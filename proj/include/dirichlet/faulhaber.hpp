#ifndef DIRICHLET_FAULHABER_HPP
#define DIRICHLET_FAULHABER_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dirichlet/bernoulli.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/real.hpp"

namespace dirichlet {
namespace detail {

// lg |B_r| for even r, double planning math
inline double lg_bernoulli_abs(long r) {
  if (r == 0) return 0;
  return 1.0 + std::lgamma(static_cast<double>(r) + 1.0) / std::log(2.0) -
         static_cast<double>(r) * 2.651496129472319;
}

// Extra bits lost to cancellation when the Bernoulli-tail terms of the
// degree-(m+1) polynomial dwarf the value; estimated from term magnitudes.
inline long faulhaber_pad(double x, long m) {
  double ax = std::fabs(x);
  if (ax == 0) return 0;
  double lgx = std::log2(ax);
  double lg_max = (m + 1.0) * lgx;  // r = 0 term
  for (long r = 2; r <= m; r += 2) {
    double t = std::lgamma(m + 2.0) - std::lgamma(r + 1.0) - std::lgamma(m + 2.0 - r);
    t = t / std::log(2.0) + lg_bernoulli_abs(r) + (m + 1.0 - r) * lgx;
    if (t > lg_max) lg_max = t;
  }
  double lg_result =
      ax >= 1.0 ? static_cast<double>(m) * (lgx - 1.0) : lg_bernoulli_abs(m) + lgx - 8.0;
  long pad = static_cast<long>(std::ceil(lg_max - lg_result));
  return pad > 0 ? pad + 64 : 64;
}

// Bernoulli-polynomial form of sum_{n<=x} n^{2h} (B_1 = +1/2 convention),
// valid for real x.
inline Real faulhaber_polynomial(const Real& x, long h, mpfr_prec_t prec) {
  const long m = 2 * h;
  if (m == 0) return round_to(x, prec);
  const mpfr_prec_t pw =
      prec + static_cast<mpfr_prec_t>(faulhaber_pad(x.to_double(), m));
  std::vector<Real> xp;  // x^0 .. x^{m+1}
  xp.reserve(static_cast<std::size_t>(m) + 2);
  xp.emplace_back(1L, pw);
  Real xw = round_to(x, pw);
  for (long e = 1; e <= m + 1; ++e) xp.push_back(xp.back() * xw);
  Real acc = xp[static_cast<std::size_t>(m + 1)];  // r = 0
  // r = 1: C(m+1,1) B_1^+ = (m+1)/2
  acc += xp[static_cast<std::size_t>(m)] * to_real(Rational(m + 1, 2), pw);
  for (long r = 2; r <= m; r += 2) {
    Rational c = Rational(binomial(static_cast<unsigned long>(m + 1),
                                   static_cast<unsigned long>(r))) *
                 bernoulli(r);
    acc += xp[static_cast<std::size_t>(m + 1 - r)] * to_real(c, pw);
  }
  return round_to(acc / (m + 1), prec);
}

}  // namespace detail

// Incremental evaluator of the power sums H_{2h}(x) = sum_{n<=x} n^{2h}:
// exact integer arithmetic at non-negative integer x, the Bernoulli
// polynomial continuation elsewhere.  Not thread-safe; one per evaluation.
class FaulhaberEvaluator {
public:
  FaulhaberEvaluator(const Real& x, mpfr_prec_t prec) : x_(round_to(x, prec)), prec_(prec) {
    double xd = x.to_double();
    integer_ = xd >= 0 && xd == std::floor(xd) && xd < 1e7 && mpfr_integer_p(x.raw());
    if (integer_) {
      long xi = x.to_long();
      pw_.assign(static_cast<std::size_t>(xi) + 1, Int(1));
      h_ = 0;
    }
  }

  // H_{2h}(x); h requests may arrive in any order but ascending is cheapest
  Real power_sum(long h) {
    if (h < 0) throw std::domain_error("FaulhaberEvaluator: h must be >= 0");
    if (!integer_) return detail::faulhaber_polynomial(x_, h, prec_);
    if (h < h_) {
      for (std::size_t n = 1; n < pw_.size(); ++n) pw_[n] = 1;
      h_ = 0;
    }
    while (h_ < h) {
      for (std::size_t n = 2; n < pw_.size(); ++n) pw_[n] *= Int(n * n);
      ++h_;
    }
    Int s = 0;
    for (std::size_t n = 1; n < pw_.size(); ++n) s += pw_[n];
    return to_real(s, prec_);
  }

private:
  Real x_;
  mpfr_prec_t prec_;
  bool integer_ = false;
  long h_ = 0;
  std::vector<Int> pw_;
};

// sum_{n<=x} n^{2h} for integer x >= 0; Bernoulli continuation for real x.
inline Real faulhaber_power_sum(const Real& x, long h, mpfr_prec_t prec) {
  if (h < 0) throw std::domain_error("faulhaber_power_sum: h must be >= 0");
  FaulhaberEvaluator ev(x, prec);
  return ev.power_sum(h);
}

inline Real faulhaber_power_sum(double x, long h, mpfr_prec_t prec = 128) {
  return faulhaber_power_sum(Real(x, prec), h, prec);
}

// Dominant-terms approximation x^{2h+1}/(2h+1) + x^{2h}/2.
inline Real faulhaber_asymptotic(const Real& x, long h, mpfr_prec_t prec) {
  if (h < 0) throw std::domain_error("faulhaber_asymptotic: h must be >= 0");
  Real xp = pow(round_to(x, prec), 2 * h);
  return xp * x / (2 * h + 1) + ldexp(xp, -1);
}

inline Real faulhaber_asymptotic(double x, long h, mpfr_prec_t prec = 128) {
  return faulhaber_asymptotic(Real(x, prec), h, prec);
}

}  // namespace dirichlet

#endif  // DIRICHLET_FAULHABER_HPP
