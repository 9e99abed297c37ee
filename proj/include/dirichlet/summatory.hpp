#ifndef DIRICHLET_SUMMATORY_HPP
#define DIRICHLET_SUMMATORY_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirichlet/engine.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/faulhaber.hpp"
#include "dirichlet/functions.hpp"
#include "dirichlet/sieve.hpp"

namespace dirichlet {

// Series evaluation of a summatory quantity, tagged with the frequency
// variant that produced it.
struct CountResult {
  Real value;
  Real abs_error_estimate;
  Variant variant = Variant::TwoPi;
  long outer_terms_used = 0;
  std::vector<long> skipped_j;

  double value_d() const { return value.to_double(); }
  double error_d() const { return abs_error_estimate.to_double(); }
};

namespace detail {

inline CountResult to_count(SeriesResult s, Variant v) {
  CountResult r;
  r.value = std::move(s.value.re);
  r.abs_error_estimate = std::move(s.abs_error_estimate);
  r.variant = v;
  r.outer_terms_used = s.outer_terms_used;
  r.skipped_j = std::move(s.skipped_j);
  return r;
}

// Power-sum weight backed by one lazily constructed evaluator per engine run
inline std::function<Real(long, mpfr_prec_t)> faulhaber_weight(double x) {
  auto slot = std::make_shared<std::unique_ptr<FaulhaberEvaluator>>();
  return [slot, x](long h, mpfr_prec_t p) -> Real {
    if (!*slot) *slot = std::make_unique<FaulhaberEvaluator>(Real(x, p), p);
    return (*slot)->power_sum(h);
  };
}

}  // namespace detail

// Coefficients of the prime-indicator series: the convolution
// c(2j) = sum_{i=1..j} log zeta(2i) / zeta(2j - 2i), with 1/zeta(0) = -2.
class PrimeIndicatorProvider final : public CoefficientProvider {
public:
  explicit PrimeIndicatorProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "prime_indicator"; }
  long jmin() const override { return 1; }
  Complex eval(long j, long abs_bits) const override {
    long b = abs_bits + 8 + static_cast<long>(std::ceil(std::log2(static_cast<double>(j) + 1)));
    mpfr_prec_t p = static_cast<mpfr_prec_t>(b + 16);
    Real acc(p);
    for (long i = 1; i <= j; ++i)
      acc = fma(view_.log_even(i, b), view_.inv_even(j - i, b), acc);
    return Complex(std::move(acc));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = zeta(2j)^2 from j = 1 on, for the divisor summatory approximation
class DivisorSumProvider final : public CoefficientProvider {
public:
  explicit DivisorSumProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "divisor_sum"; }
  long jmin() const override { return 1; }
  Complex eval(long j, long abs_bits) const override {
    Real z = view_.even(j, abs_bits + 8);
    return Complex(z * z);
  }

private:
  detail::ZetaView view_;
};

// 1 at prime integers, 0 at other integers
inline SeriesResult prime_indicator(double n, const NumericContext& ctx,
                                    const ZetaTable* table = nullptr) {
  detail::require_positive(n, "prime_indicator");
  PrimeIndicatorProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "prime_indicator";
  s.scale_int = -8;
  s.k_shift = 2;
  s.x = n;
  s.n_elev = n;
  return detail::run_engine<Real>(s, ctx);
}

// pi(x): the prime indicator summed through the power-sum weights; real x
// follows the Faulhaber continuation.
inline CountResult pi_series(double x, const NumericContext& ctx,
                             const ZetaTable* table = nullptr) {
  detail::require_positive(x, "pi_series");
  PrimeIndicatorProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "pi_series";
  s.weight = detail::WeightShape::Faulhaber;
  s.faulhaber = detail::faulhaber_weight(x);
  s.scale_int = -8;
  s.k_shift = 2;
  s.x = x;
  s.n_elev = x;
  return detail::to_count(detail::run_engine<Real>(s, ctx), ctx.variant);
}

// M(x) = sum_{n<=x} mu(n): the 1/zeta series under power-sum weights
inline CountResult mertens_series(double x, const NumericContext& ctx,
                                  const ZetaTable* table = nullptr) {
  detail::require_positive(x, "mertens_series");
  MoebiusProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "mertens_series";
  s.weight = detail::WeightShape::Faulhaber;
  s.faulhaber = detail::faulhaber_weight(x);
  s.scale_int = -2;
  s.k_shift = 1;
  s.x = x;
  s.n_elev = x;
  return detail::to_count(detail::run_engine<Real>(s, ctx), ctx.variant);
}

// Conjectured large-x approximation of pi(x): half the prime indicator plus
// the odd-power series.  The displayed constants correspond to the FourPi
// variant; ctx.variant is honored as an experimental override.
inline CountResult pi_asymptotic(long x, const NumericContext& ctx, const Sieve& sieve,
                                 const ZetaTable* table = nullptr) {
  if (x < 1) throw std::domain_error("pi_asymptotic: argument must be >= 1");
  PrimeIndicatorProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "pi_asymptotic";
  s.weight = detail::WeightShape::OddPower;
  s.scale_int = -16;
  s.k_shift = 2;
  s.x = static_cast<double>(x);
  s.n_elev = static_cast<double>(x);
  CountResult r = detail::to_count(detail::run_engine<Real>(s, ctx), ctx.variant);
  if (sieve.is_prime(x)) {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(ctx.precision_bits);
    r.value += ldexp(Real(1L, p), -1);
  }
  return r;
}

// J(x) = sum_{p^k <= x} 1/k, exact from the sieve, next to the conjectured
// approximation Lambda(x)/(2 log x) + odd-power log-zeta series (displayed
// constants correspond to TwoPi).
struct PrimePowerCount {
  Rational exact;
  CountResult approx;
};

inline PrimePowerCount j_exact_and_asymptotic(long x, const NumericContext& ctx,
                                              const Sieve& sieve,
                                              const ZetaTable* table = nullptr) {
  if (x < 1) throw std::domain_error("j_exact_and_asymptotic: argument must be >= 1");
  PrimePowerCount out;
  out.exact = sieve.prime_power_count(x);
  MangoldtOverLogProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "j_asymptotic";
  s.weight = detail::WeightShape::OddPower;
  s.scale_int = -4;
  s.k_shift = 1;
  s.x = static_cast<double>(x);
  s.n_elev = static_cast<double>(x);
  out.approx = detail::to_count(detail::run_engine<Real>(s, ctx), ctx.variant);
  Rational jump = sieve.mangoldt_over_log(x) / 2;
  out.approx.value += to_real(jump, static_cast<mpfr_prec_t>(ctx.precision_bits));
  return out;
}

// sum_{n<=x} d(n), exact from the sieve, next to the conjectured
// approximation d(x)/2 + odd-power zeta^2 series (displayed constants
// correspond to TwoPi).
struct DivisorSummatory {
  Int exact;
  CountResult approx;
};

inline DivisorSummatory dsum_exact_and_asymptotic(long x, const NumericContext& ctx,
                                                  const Sieve& sieve,
                                                  const ZetaTable* table = nullptr) {
  if (x < 1) throw std::domain_error("dsum_exact_and_asymptotic: argument must be >= 1");
  DivisorSummatory out;
  out.exact = sieve.divisor_summatory(x);
  DivisorSumProvider prov(table);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "dsum_asymptotic";
  s.weight = detail::WeightShape::OddPower;
  s.scale_int = -4;
  s.k_shift = 1;
  s.x = static_cast<double>(x);
  s.n_elev = static_cast<double>(x);
  out.approx = detail::to_count(detail::run_engine<Real>(s, ctx), ctx.variant);
  Rational jump = Rational(sieve.divisor_count(x)) / 2;
  out.approx.value += to_real(jump, static_cast<mpfr_prec_t>(ctx.precision_bits));
  return out;
}

}  // namespace dirichlet

#endif  // DIRICHLET_SUMMATORY_HPP
