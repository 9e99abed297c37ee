#ifndef DIRICHLET_ZETA_HPP
#define DIRICHLET_ZETA_HPP

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dirichlet/bernoulli.hpp"
#include "dirichlet/complex.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/real.hpp"
#include "dirichlet/sieve.hpp"

namespace dirichlet {
namespace detail {

// n^{-s} for positive integer n and complex s
inline Complex cpow_int(long n, const Complex& s, mpfr_prec_t p) {
  Real ln = log(Real(n, p));
  Real re = -(s.re * ln);
  if (s.im.is_zero()) return Complex(exp(re), Real(0L, p));
  Real mag = exp(re);
  Real ang = -(s.im * ln);
  Real si(p), co(p);
  sin_cos(si, co, ang);
  return Complex(mag * co, mag * si);
}

// Euler-Maclaurin zeta for complex s away from the pole.
// N direct terms, M Bernoulli corrections; standard remainder decay while
// (|s|+2M) < 2 pi N.
inline Complex zeta_em(const Complex& s, mpfr_prec_t prec) {
  mpfr_prec_t p = prec + 32;
  double sa = std::abs(s.re.to_double()) + std::abs(s.im.to_double());
  long n_terms = std::max<long>(16, static_cast<long>(0.55 * p + 1.5 * sa) + 2);
  long m_corr = std::max<long>(8, static_cast<long>(0.30 * p + 0.75 * sa) + 2);

  Complex sum(p);
  for (long n = 1; n < n_terms; ++n) sum += cpow_int(n, s, p);

  Complex s_minus(s.re - 1, s.im);
  Complex npow = cpow_int(n_terms, s, p);                       // N^{-s}
  Complex tail = (npow * Real(n_terms, p)) / s_minus;           // N^{1-s}/(s-1)
  sum += tail;
  sum += npow * Real(0.5, p);

  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
  Real inv_n2 = 1L / Real(static_cast<long>(n_terms) * n_terms, p);
  Complex rising(Real(1L, p), Real(0L, p));
  Complex npow_shift = npow * Real(n_terms, p) * inv_n2;        // N^{1-s-2}
  for (long k = 1; k <= m_corr; ++k) {
    if (k == 1) {
      rising = s;
    } else {
      Complex a(s.re + (2 * k - 3), s.im);
      Complex b(s.re + (2 * k - 2), s.im);
      rising *= a * b;
    }
    Real w = to_real(bernoulli(2 * k), p) / factorial(static_cast<unsigned long>(2 * k), p);
    sum += rising * npow_shift * w;
    npow_shift *= inv_n2;
  }
  return Complex(round_to(sum.re, prec), round_to(sum.im, prec));
}

inline Real zeta_direct_real(const Real& s, mpfr_prec_t prec, long n_terms) {
  mpfr_prec_t p = prec + 16;
  Real sum(0L, p);
  bool int_s = mpfr_integer_p(s.raw()) != 0;
  long si = int_s ? s.to_long() : 0;
  for (long n = 1; n <= n_terms; ++n) {
    if (int_s)
      sum += pow(Real(n, p), -si);
    else
      sum += exp(-(s * log(Real(n, p))));
  }
  return round_to(sum, prec);
}

}  // namespace detail

// zeta(2j) by the closed form -(-1)^j (2pi)^{2j} B_{2j} / (2 (2j)!);
// exact zero at negative even arguments.
inline Real zeta_even(long j, mpfr_prec_t prec) {
  if (j < 0) return Real(0L, prec);
  if (j == 0) return Real(-0.5, prec);
  mpfr_prec_t p = prec + 16;
  Real twopi = ldexp(Real::pi(p), 1);
  Real v = pow(twopi, 2 * j) * to_real(bernoulli(2 * j), p) /
           (factorial(static_cast<unsigned long>(2 * j), p) * 2L);
  if (j % 2 == 0) v = -v;
  return round_to(v, prec);
}

// zeta at any integer argument except the pole at 1
inline Real zeta_int(long s, mpfr_prec_t prec) {
  if (s == 1) throw std::domain_error("zeta: pole at s = 1");
  if (s >= 0 && s % 2 == 0) return zeta_even(s / 2, prec);
  if (s < 0) {
    if (s % 2 == 0) return Real(0L, prec);  // trivial zeros
    // zeta(-n) = -B_{n+1}/(n+1)
    Rational b = bernoulli(1 - s);
    return to_real(-b / (1 - s), prec);
  }
  // odd s >= 3
  mpfr_prec_t p = prec + 32;
  if (s >= p / 8 + 2) {
    long n_terms = static_cast<long>(std::ceil(std::exp2(static_cast<double>(p) / (s - 1)))) + 2;
    return detail::zeta_direct_real(Real(s, p), prec, n_terms);
  }
  Complex z = detail::zeta_em(Complex(Real(s, p), Real(0L, p)), prec);
  return z.re;
}

inline Real zeta(const Real& s, mpfr_prec_t prec) {
  if (mpfr_integer_p(s.raw())) return zeta_int(s.to_long(), prec);
  mpfr_prec_t p = prec + 32;
  Real dist = abs(s - 1L);
  if (dist.is_zero() || dist.exponent2() < -static_cast<long>(p))
    throw std::domain_error("zeta: argument too close to the pole at s = 1");
  double sd = s.to_double();
  if (sd >= static_cast<double>(p) / 8 + 2) {
    long n_terms =
        static_cast<long>(std::ceil(std::exp2(static_cast<double>(p) / (sd - 1)))) + 2;
    return detail::zeta_direct_real(s, prec, n_terms);
  }
  Complex z = detail::zeta_em(Complex(s, Real(0L, s.precision())), prec);
  return z.re;
}

inline Complex zeta(const Complex& s, mpfr_prec_t prec) {
  if (s.im.is_zero()) return Complex(zeta(s.re, prec), Real(0L, prec));
  Real dist = abs(s - Complex(Real(1L, 32), Real(0L, 32)));
  if (dist.is_zero() || dist.exponent2() < -static_cast<long>(prec + 32))
    throw std::domain_error("zeta: argument too close to the pole at s = 1");
  return detail::zeta_em(s, prec);
}

// log zeta(2j) for j >= 1, via log1p of (zeta(2j) - 1) so large j keep full
// relative accuracy instead of collapsing to log(1) = 0.
inline Real log_zeta_even(long j, mpfr_prec_t prec) {
  if (j < 1)
    throw std::domain_error(
        "log_zeta_even: j = 0 excluded (zeta(0) = -1/2 makes the logarithm non-real; "
        "the series drops this index)");
  mpfr_prec_t p = prec + 16;
  Real delta(p);
  long s = 2 * j;
  if (s >= p / 10 + 4) {
    // direct tail sum_{n>=2} n^{-2j}, needs only a handful of terms
    double nd = std::exp2((static_cast<double>(p) + s) / (s - 1));
    long n_terms = static_cast<long>(std::ceil(nd)) + 2;
    for (long n = 2; n <= n_terms; ++n) delta += pow(Real(n, p), -s);
  } else {
    delta = zeta_even(j, p + s + 16) - 1L;
  }
  return round_to(log1p(delta), prec);
}

// k-th derivative of zeta.  Direct Dirichlet sum when the argument is large
// enough for the tail to die; otherwise Cauchy-integral trapezoidal
// quadrature on a circle around s (geometric convergence, pole excluded).
inline Complex zeta_derivative(const Complex& s, long k, mpfr_prec_t prec) {
  if (k < 1) throw std::domain_error("zeta_derivative: k must be >= 1");
  Real dist = abs(s - Complex(Real(1L, 64), Real(0L, 64)));
  if (dist.is_zero() || dist.exponent2() < -60)
    throw std::domain_error("zeta_derivative: circle around s would enclose the pole at 1");
  mpfr_prec_t p = prec + 32;

  if (s.im.is_zero() && mpfr_integer_p(s.re.raw())) {
    long si = s.re.to_long();
    if (si >= 3) {
      // tail of sum (log n)^k n^{-s} past N is < 2 (log N)^k N^{1-s}/(s-1)
      double need = static_cast<double>(p);
      long n_terms = 0;
      for (long n = 1 << 4; n <= (1 << 16); n *= 2) {
        double tail_log2 = 1 + k * std::log2(std::log(static_cast<double>(n))) -
                           (si - 1) * std::log2(static_cast<double>(n)) + 1 -
                           std::log2(static_cast<double>(si - 1));
        if (tail_log2 <= -need) {
          n_terms = n;
          break;
        }
      }
      if (n_terms != 0) {
        Real sum(0L, p);
        for (long n = 2; n <= n_terms; ++n) {
          Real ln = log(Real(n, p));
          sum += pow(ln, k) * pow(Real(n, p), -si);
        }
        if (k % 2 == 1) sum = -sum;
        return Complex(round_to(sum, prec), Real(0L, prec));
      }
    }
  }

  // radius: largest power of two <= min(1, |s-1|/2)
  long r_exp = 0;  // r = 2^{-r_exp}
  {
    Real half_dist = ldexp(dist, -1);
    if (half_dist < 1L) r_exp = 1 - half_dist.exponent2();
  }
  mpfr_prec_t ps = p + static_cast<mpfr_prec_t>(k) * r_exp + 32;
  long q_nodes = static_cast<long>(p) + 64;

  Complex acc(Real(0L, ps), Real(0L, ps));
  Real two_pi = ldexp(Real::pi(ps), 1);
  for (long t = 0; t < q_nodes; ++t) {
    Real theta = two_pi * t / q_nodes;
    Real si(ps), co(ps);
    sin_cos(si, co, theta);
    Complex z(s.re + ldexp(co, -r_exp), s.im + ldexp(si, -r_exp));
    Complex f = zeta(z, ps);
    Real kth = theta * k;
    Real sk(ps), ck(ps);
    sin_cos(sk, ck, kth);
    acc += f * Complex(ck, -sk);
  }
  acc /= Real(q_nodes, ps);
  acc *= factorial(static_cast<unsigned long>(k), ps);
  return Complex(round_to(ldexp(acc.re, static_cast<long>(k) * r_exp), prec),
                 round_to(ldexp(acc.im, static_cast<long>(k) * r_exp), prec));
}

inline Real zeta_derivative(const Real& s, long k, mpfr_prec_t prec) {
  Complex z = zeta_derivative(Complex(s, Real(0L, 32)), k, prec);
  return z.re;
}

struct PrimeZetaResult {
  Real value;       // sum of p_n / n^s over summed n
  Real tail_bound;  // proven bound on the omitted tail
  long terms_used = 0;
};

// The prime-indexed zeta variant P(s) = sum_{n>=1} p_n / n^s, s > 2.
// Tail via p_n < n (log n + log log n) for n >= 6:
//   sum_{n>N} p_n n^{-s} < (log N + loglog N + 2) (1/(s-2) + 1/(s-2)^2) N^{2-s}.
inline PrimeZetaResult prime_zeta_paper(const Real& s, mpfr_prec_t prec, PrimeSource& src,
                                        double target_abs_bits, long max_terms = 10000000L) {
  if (!(s > 2L)) throw std::domain_error("prime_zeta_paper: requires s > 2");
  mpfr_prec_t p = prec + 16;
  double sd = s.to_double();
  bool int_s = mpfr_integer_p(s.raw()) != 0;
  long si = int_s ? s.to_long() : 0;

  auto tail_log2 = [&](double n) {
    double ln = std::log(n);
    return std::log2(ln + std::log(ln) + 2.0) +
           std::log2(1.0 / (sd - 2) + 1.0 / ((sd - 2) * (sd - 2))) +
           (2.0 - sd) * std::log2(n);
  };

  PrimeZetaResult out;
  Real sum(0L, p);
  long n = 0;
  while (true) {
    if (n >= 8 && tail_log2(static_cast<double>(n)) <= -target_abs_bits) break;
    if (n >= max_terms) break;
    ++n;
    long pn = src.nth(static_cast<std::size_t>(n));
    if (int_s)
      sum += Real(pn, p) * pow(Real(n, p), -si);
    else
      sum += Real(pn, p) * exp(-(s * log(Real(n, p))));
  }
  out.terms_used = n;
  out.value = round_to(sum, prec);
  double tl2 = tail_log2(static_cast<double>(std::max(n, 8L)));
  out.tail_bound = Real::pow2(static_cast<long>(std::ceil(tl2)) + 1, 64);
  return out;
}

inline PrimeZetaResult prime_zeta_paper(const Real& s, mpfr_prec_t prec, PrimeSource& src) {
  return prime_zeta_paper(s, prec, src, static_cast<double>(prec) - 8);
}

}  // namespace dirichlet

#endif  // DIRICHLET_ZETA_HPP
