#ifndef DIRICHLET_ENGINE_HPP
#define DIRICHLET_ENGINE_HPP

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/complex.hpp"
#include "dirichlet/context.hpp"
#include "dirichlet/real.hpp"

namespace dirichlet {

// A Dirichlet-series evaluator F(2j).  eval must return F(2j) with absolute
// error at most 2^{-abs_bits}; tail_bounded providers may carry an extra
// truncation slop declared through the result's error estimate.
// Implementations must be safe for concurrent read-only use.
class CoefficientProvider {
public:
  virtual ~CoefficientProvider() = default;
  virtual std::string name() const = 0;
  virtual long jmin() const { return 0; }
  virtual bool real_valued() const { return true; }
  virtual bool tail_bounded() const { return false; }
  virtual bool skip(long j) const {
    (void)j;
    return false;
  }
  virtual Complex eval(long j, long abs_bits) const = 0;
};

struct InversionRequest {
  const CoefficientProvider* provider = nullptr;
  double n = 0;             // evaluation point
  std::set<long> j_skip;    // extra inner indices to omit
  NumericContext ctx;
};

namespace detail {

enum class WeightShape { PowN, Faulhaber, OddPower };

struct EngineSpec {
  const CoefficientProvider* provider = nullptr;
  const std::set<long>* extra_skip = nullptr;
  std::string op;                 // label for error messages
  WeightShape weight = WeightShape::PowN;
  long scale_int = -2;            // constant prefactor
  int scale_omega_x_power = 0;    // extra (omega*x)^e on the prefactor
  long k_shift = 1;               // factorial offset: (2i + K - 2j)!
  double x = 0;                   // outer argument (n for PowN)
  double n_elev = 0;              // intermediate-growth scale for precision
  // power-sum weight W(h) at given precision, for WeightShape::Faulhaber
  std::function<Real(long, mpfr_prec_t)> faulhaber;
};

// Summation policy: add terms in order, stop once the index passed the decay
// threshold and the term dropped below target/4; the estimate charges the
// last added term (a bound on the first omitted one in the decay regime),
// cancellation-amplified rounding, and any declared provider tail slop.
template <typename Acc, typename TermFn>
SeriesResult sum_with_error(TermFn&& term_at, long i_start, const NumericContext& ctx,
                            double x_decay, mpfr_prec_t p_work, double tail_slop,
                            const std::string& op, std::vector<long> skipped = {}) {
  const long decay = decay_index(ctx, x_decay);
  const Real target(ctx.target_abs_error, 64);
  const Real quarter = ldexp(target, -2);
  Acc acc(p_work);
  Real peak(0L, 64);
  Real last(0L, 64);
  long used = 0;
  bool stopped = false;
  for (long i = i_start; i < i_start + ctx.max_outer_terms; ++i) {
    Acc t = term_at(i);
    acc += t;
    ++used;
    Real mag = round_to(abs(t), 64);
    peak = max(peak, mag);
    last = mag;
    if (i >= decay && mag < quarter) {
      stopped = true;
      break;
    }
  }
  if (!stopped)
    throw convergence_error(op + ": term cap " + std::to_string(ctx.max_outer_terms) +
                            " reached before the stopping rule fired (x = " +
                            std::to_string(x_decay) + ")");
  SeriesResult r;
  if constexpr (std::is_same_v<Acc, Real>) {
    r.value = Complex(round_to(acc, ctx.precision_bits), Real(0L, ctx.precision_bits));
  } else {
    r.value = Complex(round_to(acc.re, ctx.precision_bits), round_to(acc.im, ctx.precision_bits));
  }
  r.outer_terms_used = used;
  r.peak_term_magnitude = peak;
  r.abs_error_estimate = last + ldexp(max(peak, Real(1L, 64)), 1 - ctx.precision_bits);
  if (tail_slop > 0) r.abs_error_estimate += Real(tail_slop, 64);
  r.skipped_j = std::move(skipped);
  return r;
}

// Accuracy demanded of F(2j).  An error on c_j reaches the computed terms
// through x^{2j} h(i - j), h(u) = y^{2u+2+K}/(2u+2+K)!, and the stopping
// rule consults terms from i = decay onward, so the binding factor is
// h(max(decay - j, u*)) with u* = (y-2-K)/2 the mode of h.  For j far below
// the decay index this is a steep rebate; near and past it the mode value
// ~2^{y log2 e} must be paid so the term-level noise floor sits below the
// stopping threshold.  At integer x the same h bounds the truncated-column
// multiplier on the final sum; at non-integer x the completed column keeps
// an O(1) multiplier.  Everything here is double-precision planning math.
inline long graded_bits(long j, const NumericContext& ctx, const EngineSpec& spec, long i_cap,
                        mpfr_prec_t p_work, bool integer_x) {
  const double om = variant_omega_multiple(ctx.variant);
  const double y = om * 3.14159265358979324 * spec.x;
  const double tb = std::ceil(std::log2(4.0 / ctx.target_abs_error));
  double scale_log2 = std::log2(std::abs(static_cast<double>(spec.scale_int))) +
                      spec.scale_omega_x_power * std::log2(std::max(y, 2.0));
  double r = tb + std::log2(16.0 * static_cast<double>(i_cap)) + scale_log2 +
             (2.0 * j - 1.0) * std::log2(std::max(std::abs(spec.x), 1.0)) + 8;
  if (spec.weight != WeightShape::PowN) r += std::log2(std::abs(spec.x) + 2.0) + 2;
  double t = static_cast<double>(std::max<long>(0, decay_index(ctx, spec.x) - j));
  double u_star = std::max(0.0, (y - 2.0 - static_cast<double>(spec.k_shift)) / 2.0);
  double e = 2.0 * std::max(t, u_star) + 2.0 + static_cast<double>(spec.k_shift);
  double window = e * std::log2(std::max(y, 1e-9)) - std::lgamma(e + 1.0) / std::log(2.0);
  r += integer_x ? window : std::max(window, 8.0);
  long bits = static_cast<long>(std::ceil(r));
  if (bits < 32) bits = 32;
  if (bits > static_cast<long>(p_work)) bits = static_cast<long>(p_work);
  return bits;
}

inline mpfr_prec_t working_precision(const NumericContext& ctx, const EngineSpec& spec) {
  double elev = 2.0 * static_cast<double>(ctx.max_outer_terms) *
                std::log2(std::max(2.0, std::abs(spec.n_elev)));
  long p = ctx.precision_bits + static_cast<long>(std::ceil(elev)) + 32;
  if (p > max_precision_bits)
    throw std::domain_error(spec.op + ": working precision would exceed the ceiling");
  return static_cast<mpfr_prec_t>(p);
}

template <typename Acc>
SeriesResult run_engine(const EngineSpec& spec, const NumericContext& ctx) {
  if (!(spec.x > 0)) throw std::domain_error(spec.op + ": argument must be positive");
  const mpfr_prec_t p = working_precision(ctx, spec);
  const long i_cap = ctx.max_outer_terms;
  const long jmin = std::max(spec.provider->jmin(), 0L);
  const bool integer_x = spec.x == std::floor(spec.x);

  const Real omega = Real::pi(p) * variant_omega_multiple(ctx.variant);
  const Real x(spec.x, p);
  const Real omx = omega * x;
  const Real omx2 = omx * omx;
  const Real om_inv2 = 1L / (omega * omega);
  const Real om2 = omega * omega;

  Real scale(spec.scale_int, p);
  for (int e = 0; e < spec.scale_omega_x_power; ++e) scale *= omx;

  // c[j] = (-1)^j omega^{-2j} F(2j), zero at skipped indices
  std::vector<Acc> c;
  std::vector<long> skipped;
  Real opow = pow(omega, -2 * jmin);
  // running 1/(t!) for t = 0..2i+K-2jmin
  std::vector<Real> invfact;
  Real fact(1L, p);
  invfact.emplace_back(1L, p);
  auto extend_invfact = [&](long t_max) {
    while (static_cast<long>(invfact.size()) <= t_max) {
      fact *= static_cast<long>(invfact.size());
      invfact.push_back(1L / fact);
    }
  };

  // outer weight state
  Real apow = pow(omx, 2 * jmin);  // (omega x)^{2i} for PowN / OddPower
  Real wpow = pow(omega, 2 * jmin);  // omega^{2i} for Faulhaber

  auto term_at = [&, sign = (jmin % 2 == 0 ? 1 : -1)](long i) mutable -> Acc {
    // bring c up through index i
    while (static_cast<long>(c.size()) + jmin <= i) {
      long j = jmin + static_cast<long>(c.size());
      bool skip_it = spec.provider->skip(j) ||
                     (spec.extra_skip && spec.extra_skip->count(j) != 0);
      if (skip_it) {
        skipped.push_back(j);
        c.emplace_back(p);  // zero
      } else {
        long bits = graded_bits(j, ctx, spec, i_cap, p, integer_x);
        Complex f = spec.provider->eval(j, bits);
        if constexpr (std::is_same_v<Acc, Real>) {
          Real v = round_to(f.re, p) * opow;
          if (j % 2 != 0) v = -v;
          c.push_back(std::move(v));
        } else {
          Complex v(round_to(f.re, p) * opow, round_to(f.im, p) * opow);
          if (j % 2 != 0) {
            v.re = -v.re;
            v.im = -v.im;
          }
          c.push_back(std::move(v));
        }
      }
      opow *= om_inv2;
    }
    extend_invfact(2 * i + spec.k_shift - 2 * jmin);

    Acc inner(p);
    for (long j = jmin; j <= i; ++j) {
      const Acc& cj = c[static_cast<std::size_t>(j - jmin)];
      const Real& f = invfact[static_cast<std::size_t>(2 * i + spec.k_shift - 2 * j)];
      if constexpr (std::is_same_v<Acc, Real>) {
        inner = fma(cj, f, inner);
      } else {
        inner.re = fma(cj.re, f, inner.re);
        inner.im = fma(cj.im, f, inner.im);
      }
    }

    Real w(p);
    switch (spec.weight) {
      case WeightShape::PowN:
        w = apow;
        apow *= omx2;
        break;
      case WeightShape::OddPower:
        w = apow * x / (2 * i + 1);
        apow *= omx2;
        break;
      case WeightShape::Faulhaber:
        w = wpow * spec.faulhaber(i, p);
        wpow *= om2;
        break;
    }
    w *= scale;
    if (sign < 0) w = -w;
    sign = -sign;
    if constexpr (std::is_same_v<Acc, Real>) {
      return inner * w;
    } else {
      inner.re *= w;
      inner.im *= w;
      return inner;
    }
  };

  double slop = spec.provider->tail_bounded() ? ctx.target_abs_error / 4096.0 : 0.0;
  SeriesResult r = sum_with_error<Acc>(term_at, jmin, ctx, spec.x, p, slop, spec.op);
  r.skipped_j = std::move(skipped);
  return r;
}

inline SeriesResult run_engine_dispatch(const EngineSpec& spec, const NumericContext& ctx) {
  if (spec.provider->real_valued()) return run_engine<Real>(spec, ctx);
  return run_engine<Complex>(spec, ctx);
}

}  // namespace detail

// Theorem-form inversion: a(n) = scale * sum_i (-1)^i (omega n)^{2i}
// sum_{j<=i} (-1)^j omega^{-2j} F(2j) / (2i+1-2j)!  with scale = -2.
inline SeriesResult invert_at(const InversionRequest& req) {
  if (req.provider == nullptr) throw std::domain_error("invert_at: provider required");
  detail::EngineSpec s;
  s.provider = req.provider;
  s.extra_skip = req.j_skip.empty() ? nullptr : &req.j_skip;
  s.op = "invert_at[" + req.provider->name() + "]";
  s.x = req.n;
  s.n_elev = req.n;
  return detail::run_engine_dispatch(s, req.ctx);
}

// Compact |n| < 1 form: a(n) = -(sin 2 pi n / (pi n)) sum_j n^{2j} F(2j).
inline SeriesResult invert_compact(const CoefficientProvider& provider, double n,
                                   const NumericContext& ctx) {
  if (!(std::abs(n) < 1))
    throw std::domain_error("invert_compact: requires |n| < 1 (radius of convergence)");
  const mpfr_prec_t p = ctx.precision_bits + 32;
  const bool real_path = provider.real_valued();
  const Real nn(n, p);
  Real sinc(p);
  if (n == 0) {
    sinc = Real(2L, p);
  } else {
    Real pin = Real::pi(p) * nn;
    sinc = sin(ldexp(pin, 1)) / pin;
  }
  const long jmin = std::max(provider.jmin(), 0L);
  const double target = ctx.target_abs_error;
  const long bits = ctx.precision_bits + 16;

  Complex acc(Real(0L, p), Real(0L, p));
  Real n2 = nn * nn;
  Real npow = pow(nn, 2 * jmin);
  Real peak(0L, 64);
  Real last(0L, 64);
  std::vector<long> skipped;
  long used = 0;
  bool stopped = false;
  const double n_abs = std::abs(n);
  // |n|^{2j} |F| falls below target/8 and stays there (F bounded on j >= 1)
  for (long j = jmin; j < jmin + ctx.max_outer_terms; ++j) {
    if (provider.skip(j)) {
      skipped.push_back(j);
    } else {
      Complex f = provider.eval(j, bits);
      Complex t(f.re * npow, f.im * npow);
      acc += t;
      Real mag = round_to(abs(t), 64);
      peak = max(peak, mag);
      last = mag;
      ++used;
      if (n == 0 || (mag.to_double() < target / 8 &&
                     std::pow(n_abs, 2 * j) * 4 < target / 8)) {
        stopped = true;
        break;
      }
    }
    npow *= n2;
  }
  if (!stopped)
    throw convergence_error("invert_compact[" + provider.name() + "]: term cap " +
                            std::to_string(ctx.max_outer_terms) +
                            " reached before the stopping rule fired (n = " + std::to_string(n) +
                            ")");
  acc.re *= -sinc;
  acc.im *= -sinc;
  SeriesResult r;
  r.value = Complex(round_to(acc.re, ctx.precision_bits),
                    round_to(real_path ? Real(0L, p) : acc.im, ctx.precision_bits));
  r.outer_terms_used = used;
  r.peak_term_magnitude = peak;
  // geometric tail of n^{2j} past the stop, through the sinc prefactor
  Real tail = last * Real(n_abs * n_abs / std::max(1e-30, 1.0 - n_abs * n_abs), 64);
  r.abs_error_estimate =
      (tail + ldexp(max(peak, Real(1L, 64)), 1 - ctx.precision_bits)) * round_to(abs(sinc), 64) +
      ldexp(Real(1L, 64), -ctx.precision_bits + 2);
  if (provider.tail_bounded()) r.abs_error_estimate += Real(target / 4096.0, 64);
  r.skipped_j = std::move(skipped);
  return r;
}

namespace detail {

class DeltaProvider final : public CoefficientProvider {
public:
  explicit DeltaProvider(long k) : k_(k) {}
  std::string name() const override { return "delta(k=" + std::to_string(k_) + ")"; }
  Complex eval(long j, long abs_bits) const override {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(abs_bits + 16);
    return Complex(pow(Real(k_, p), -2 * j), Real(0L, p));
  }

private:
  long k_;
};

}  // namespace detail

// Kronecker delta: 1 if n = k else 0, by the F(2j) = k^{-2j} series.
inline SeriesResult delta_series(long n, long k, const NumericContext& ctx) {
  if (n < 1 || k < 1) throw std::domain_error("delta_series: n and k must be >= 1");
  detail::DeltaProvider prov(k);
  detail::EngineSpec s;
  s.provider = &prov;
  s.op = "delta_series";
  s.x = static_cast<double>(n);
  s.n_elev = static_cast<double>(n) / static_cast<double>(k);
  return detail::run_engine<Real>(s, ctx);
}

}  // namespace dirichlet

#endif  // DIRICHLET_ENGINE_HPP
