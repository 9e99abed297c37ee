#ifndef DIRICHLET_CONTEXT_HPP
#define DIRICHLET_CONTEXT_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirichlet/complex.hpp"
#include "dirichlet/real.hpp"

namespace dirichlet {

// Angular-frequency constant of the series: 2pi (default), pi, or 4pi.
enum class Variant { TwoPi, Pi, FourPi };

inline double variant_omega_multiple(Variant v) {
  switch (v) {
    case Variant::Pi: return 1.0;
    case Variant::TwoPi: return 2.0;
    case Variant::FourPi: return 4.0;
  }
  return 2.0;
}

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Pi: return "pi";
    case Variant::TwoPi: return "2pi";
    case Variant::FourPi: return "4pi";
  }
  return "2pi";
}

// Thrown when the term cap is reached before the stopping rule fires.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

struct NumericContext {
  long precision_bits = 64;       // binary working precision of results
  double target_abs_error = 1e-10;  // requested absolute accuracy
  Variant variant = Variant::TwoPi;
  long max_outer_terms = 64;      // hard cap on the outer index

  // cancellation bits per unit of argument: peak term ~ e^{omega n}
  double bits_per_unit() const { return 4.535 * variant_omega_multiple(variant); }
};

// First outer index past which terms of e^{omega n} type start decaying:
// the peak of (omega n)^{2i}/(2i)! sits at 2i ~ omega n and the term drops
// back to O(1) near 2i ~ e * omega n, so decay is safe past i = e/2 * omega n.
inline long decay_index(const NumericContext& ctx, double n_abs) {
  double om = variant_omega_multiple(ctx.variant);  // omega = om * pi
  double d = om * 4.26986711133652 * n_abs + 1.0;   // pi*e/2 = 4.2698...
  return static_cast<long>(std::ceil(d));
}

inline constexpr long max_precision_bits = 1L << 22;  // runaway-memory guard

inline NumericContext make_context(double n_max, double target_abs_error,
                                   Variant variant = Variant::TwoPi) {
  if (!(n_max > 0)) throw std::domain_error("make_context: n_max must be positive");
  if (!(target_abs_error > 0) || !(target_abs_error < 1))
    throw std::domain_error("make_context: target_abs_error must lie in (0,1)");
  NumericContext ctx;
  ctx.variant = variant;
  ctx.target_abs_error = target_abs_error;
  double rate = 4.535 * variant_omega_multiple(variant);
  long prec = static_cast<long>(std::ceil(rate * n_max)) + 64 +
              static_cast<long>(std::ceil(std::log2(1.0 / target_abs_error)));
  if (prec > max_precision_bits)
    throw std::domain_error("make_context: required precision exceeds ceiling");
  ctx.precision_bits = prec;
  // past the decay index the term ratio is ~ (omega n / 2i)^2, so gaining the
  // last tb bits takes about sqrt(3 * om * n * tb) further terms
  double tb = std::ceil(std::log2(4.0 / target_abs_error));
  double om = variant_omega_multiple(variant);
  long extra = static_cast<long>(std::ceil(std::sqrt(3.0 * om * n_max * tb))) + 16;
  ctx.max_outer_terms = decay_index(ctx, n_max) + extra;
  return ctx;
}

struct SeriesResult {
  Complex value;
  Real abs_error_estimate;
  long outer_terms_used = 0;
  Real peak_term_magnitude;
  std::vector<long> skipped_j;  // inner indices omitted (poles, zeros, provider rules)

  double value_d() const { return value.re.to_double(); }
  double error_d() const { return abs_error_estimate.to_double(); }
};

}  // namespace dirichlet

#endif  // DIRICHLET_CONTEXT_HPP
