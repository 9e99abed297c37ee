#ifndef DIRICHLET_INDICATOR_HPP
#define DIRICHLET_INDICATOR_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "dirichlet/engine.hpp"
#include "dirichlet/zeta.hpp"

namespace dirichlet {

// 1 if k divides n, else 0, by integer arithmetic.
inline int divides_exact(long long n, long long k) {
  if (k == 0) throw std::domain_error("divides_exact: k must be nonzero");
  return n % k == 0 ? 1 : 0;
}

struct IndicatorQuery {
  double n = 0;  // evaluation point
  long k = 1;    // candidate divisor
  long q = 0;    // leading terms dropped from both sums
};

namespace detail {

// F(2j) = zeta(2j) k^{-2j}, the Dirichlet series sum_{m} (km)^{-s} of the
// divisibility indicator; jmin carries the q-shift (dropped leading columns
// vanish at integer arguments).
class DivisibilityProvider final : public CoefficientProvider {
public:
  DivisibilityProvider(long k, long q) : k_(k), q_(q) {}
  std::string name() const override { return "divisibility(k=" + std::to_string(k_) + ")"; }
  long jmin() const override { return q_; }
  Complex eval(long j, long abs_bits) const override {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(abs_bits + 16);
    Real f = zeta_even(j, p) * pow(Real(k_, p), -2 * j);
    return Complex(std::move(f), Real(0L, p));
  }

private:
  long k_;
  long q_;
};

}  // namespace detail

// Power-series divisibility indicator
//   sum_{i>=q} (-1)^i (omega n)^{2i} sum_{j=q}^{i} B_{2j} k^{-2j} / ((2j)!(2i+1-2j)!)
// written in engine form via B_{2j}/(2j)! = -2 (-1)^j (2 pi)^{-2j} zeta(2j).
inline SeriesResult indicator_series(const IndicatorQuery& query, const NumericContext& ctx) {
  if (query.k < 1) throw std::domain_error("indicator_series: k must be >= 1");
  if (query.q < 0) throw std::domain_error("indicator_series: q must be >= 0");
  detail::DivisibilityProvider prov(query.k, query.q);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "indicator_series";
  s.x = query.n;
  s.n_elev = query.n / static_cast<double>(query.k);
  return detail::run_engine<Real>(s, ctx);
}

// Sine analog: sum_i (-1)^i (omega n)^{2i+1} sum_j B_{2j}k^{-2j}/((2j)!(2i+2-2j)!);
// vanishes at every integer n.
inline SeriesResult indicator_analog_series(double n, long k, const NumericContext& ctx) {
  if (k < 1) throw std::domain_error("indicator_analog_series: k must be >= 1");
  detail::DivisibilityProvider prov(k, 0);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "indicator_analog_series";
  s.scale_omega_x_power = 1;
  s.k_shift = 2;
  s.x = n;
  s.n_elev = n / static_cast<double>(k);
  return detail::run_engine<Real>(s, ctx);
}

// Closed form (1/2k) cot(pi n / k)(1 - cos 2 pi n) of the sine analog.
// Indeterminate (0 * inf) when k | n, so it serves only as a cross-check at
// points where n/k is not an integer.
inline Real indicator_analog_closed(double n, long k, mpfr_prec_t prec) {
  if (k < 1) throw std::domain_error("indicator_analog_closed: k must be >= 1");
  double ratio = n / static_cast<double>(k);
  if (ratio == std::floor(ratio))
    throw std::domain_error("indicator_analog_closed: undefined when k divides n");
  Real x(n, prec);
  Real pi = Real::pi(prec);
  Real ang = pi * x / k;
  Real s(prec), c(prec);
  sin_cos(s, c, ang);
  Real cot = c / s;
  Real one_minus = 1L - cos(ldexp(pi * x, 1));
  return cot * one_minus / (2 * k);
}

}  // namespace dirichlet

#endif  // DIRICHLET_INDICATOR_HPP
