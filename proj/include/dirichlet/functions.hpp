#ifndef DIRICHLET_FUNCTIONS_HPP
#define DIRICHLET_FUNCTIONS_HPP

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dirichlet/engine.hpp"
#include "dirichlet/sieve.hpp"
#include "dirichlet/zeta.hpp"
#include "dirichlet/zeta_table.hpp"

namespace dirichlet {
namespace detail {

inline long bucket_bits(long bits) { return ((std::max(bits, 1L) + 255L) / 256L) * 256L; }

// Process-wide memo for zeta-family constants, keyed on a precision bucket
// and evaluated at the bucket precision itself so cached results are
// deterministic.  Repeated series runs reuse each other's evaluations.
class ZetaMemo {
public:
  static ZetaMemo& instance() {
    static ZetaMemo m;
    return m;
  }

  Real even(long j, long bits) {
    return get({0, 0, j, bucket_bits(bits + 16)},
               [&](mpfr_prec_t p) { return zeta_even(j, p); });
  }
  Real log_even(long j, long bits) {
    return get({1, 0, j, bucket_bits(bits + 16)},
               [&](mpfr_prec_t p) { return log_zeta_even(j, p); });
  }
  Real deriv_even(long k, long j, long bits) {
    return get({2, k, j, bucket_bits(bits + 16)},
               [&](mpfr_prec_t p) { return zeta_derivative(Real(2 * j, p), k, p); });
  }
  Real at_int(long s, long bits) {
    return get({3, s, 0, bucket_bits(bits + 16)},
               [&](mpfr_prec_t p) { return zeta_int(s, p); });
  }

  // Prime-indexed zeta P(2j) = sum p_n / n^{2j}.  Monotone per-j cache: a
  // stored result is reused when its proven tail meets the request, or when
  // the term cap was already hit (recomputing cannot improve on it).  A
  // capped result more than `grace` bits short of the request is an error
  // rather than a silently degraded value.
  Real prime_even(long j, long bits, PrimeSource& src) {
    static constexpr long grace = 12;
    static constexpr long terms_cap = 10000000L;
    std::lock_guard<std::mutex> lock(pz_mu_);
    auto it = pz_.find(j);
    if (it != pz_.end()) {
      const PrimeZetaResult& r = it->second;
      bool tail_ok = !(r.tail_bound > Real::pow2(-bits, 64));
      bool capped = r.terms_used >= terms_cap;
      if ((tail_ok || capped) && static_cast<long>(r.value.precision()) >= bits + 16) {
        if (!tail_ok && r.tail_bound > Real::pow2(-(bits - grace), 64))
          throw convergence_error(
              "prime-indexed zeta: the " + std::to_string(terms_cap) +
              "-term budget leaves the tail above the accuracy this evaluation needs");
        return r.value;
      }
    }
    mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + 48);
    PrimeZetaResult r =
        prime_zeta_paper(Real(2 * j, p), p, src, static_cast<double>(bits + 8), terms_cap);
    if (r.tail_bound > Real::pow2(-(bits - grace), 64))
      throw convergence_error(
          "prime-indexed zeta: the " + std::to_string(terms_cap) +
          "-term budget leaves the tail above the accuracy this evaluation needs");
    Real out = r.value;
    pz_[j] = std::move(r);
    return out;
  }

private:
  template <typename F>
  Real get(std::array<long, 4> key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Real v = compute(static_cast<mpfr_prec_t>(key[3]));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = map_.emplace(std::move(key), std::move(v));
    (void)fresh;
    return it->second;
  }

  std::mutex mu_;
  std::map<std::array<long, 4>, Real> map_;
  std::mutex pz_mu_;
  std::map<long, PrimeZetaResult> pz_;
};

// Table-first lookup: serve from a ZetaTable when the index is in range and
// the stored precision covers the request, else fall back to the memo.
struct ZetaView {
  const ZetaTable* table = nullptr;

  bool table_ok(long j, long bits) const {
    return table != nullptr && j >= 0 && j <= table->j_max() &&
           static_cast<long>(table->precision_bits()) >= bits + 8;
  }
  Real even(long j, long bits) const {
    if (table_ok(j, bits)) return table->Z(j);
    return ZetaMemo::instance().even(j, bits);
  }
  Real inv_even(long j, long bits) const {
    if (table_ok(j, bits) && table->has_IZ()) return table->IZ(j);
    return 1L / ZetaMemo::instance().even(j, bits + 8);
  }
  Real log_even(long j, long bits) const {
    if (j >= 1 && table_ok(j, bits) && table->has_LZ()) return table->LZ(j);
    return ZetaMemo::instance().log_even(j, bits);
  }
  Real deriv_even(long k, long j, long bits) const {
    if (k == 1 && table_ok(j, bits) && table->has_DZ(j)) return table->DZ(j);
    return ZetaMemo::instance().deriv_even(k, j, bits);
  }
  // zeta(2j + m) for integer m
  Real offset(long m, long j, long bits) const {
    if (table_ok(j, bits) && table->has_offset(m)) {
      const Real& v = table->ZOFF(m, j);
      if (!v.is_nan()) return v;
    }
    return ZetaMemo::instance().at_int(2 * j + m, bits);
  }
};

// Absolute-accuracy driver: evaluate at a baseline precision, and when the
// magnitude turns out large (near-pole factors, tiny denominators) rerun
// with the exponent folded into the precision so the absolute error still
// lands under 2^{-abs_bits}.
template <typename Fn>
Real controlled_real(long abs_bits, Fn&& fn) {
  Real v = fn(static_cast<mpfr_prec_t>(abs_bits + 32));
  if (!v.is_zero() && !v.is_nan()) {
    long e = v.exponent2();
    if (e > 8) v = fn(static_cast<mpfr_prec_t>(abs_bits + 24 + e));
  }
  return v;
}

template <typename Fn>
Complex controlled_complex(long abs_bits, Fn&& fn) {
  Complex v = fn(static_cast<mpfr_prec_t>(abs_bits + 32));
  Real m = abs(v);
  if (!m.is_zero() && !m.is_nan()) {
    long e = m.exponent2();
    if (e > 8) v = fn(static_cast<mpfr_prec_t>(abs_bits + 24 + e));
  }
  return v;
}

inline bool is_integer_value(double x) {
  return std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9e15;
}

inline std::string num_label(std::complex<double> z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

inline Complex complex_param(std::complex<double> z, mpfr_prec_t p) {
  return Complex(Real(z.real(), p), Real(z.imag(), p));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coefficient providers.  Each one names the Dirichlet series F whose
// inversion reproduces the arithmetic function; the table pointer, when
// given, must outlive the provider.
// ---------------------------------------------------------------------------

// F(2j) = 1/zeta(2j)
class MoebiusProvider final : public CoefficientProvider {
public:
  explicit MoebiusProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "moebius"; }
  Complex eval(long j, long abs_bits) const override {
    Real v = detail::controlled_real(
        abs_bits, [&](mpfr_prec_t p) { return view_.inv_even(j, static_cast<long>(p)); });
    return Complex(std::move(v));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = zeta(2j)^{-q}; q = 0 is the convolution identity, negative q the
// repeated-divisor family.
class MoebiusQProvider final : public CoefficientProvider {
public:
  explicit MoebiusQProvider(long q, const ZetaTable* table = nullptr) : q_(q), view_{table} {}
  std::string name() const override { return "moebius_q(" + std::to_string(q_) + ")"; }
  Complex eval(long j, long abs_bits) const override {
    if (q_ == 0) return Complex(Real(1L, 64));
    Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
      mpfr_prec_t q = p + static_cast<mpfr_prec_t>(std::abs(q_)) + 8;
      return pow(view_.even(j, static_cast<long>(q)), -q_);
    });
    return Complex(std::move(v));
  }

private:
  long q_;
  detail::ZetaView view_;
};

// F(2j) = zeta(2j) zeta(2j - m), skipping indices that land on the pole
class SigmaMProvider final : public CoefficientProvider {
public:
  explicit SigmaMProvider(std::complex<double> m, const ZetaTable* table = nullptr)
      : m_(m), view_{table} {
    integer_m_ = m.imag() == 0 && detail::is_integer_value(m.real());
    m_int_ = integer_m_ ? static_cast<long>(m.real()) : 0;
  }
  std::string name() const override { return "sigma_m(" + detail::num_label(m_) + ")"; }
  bool real_valued() const override { return m_.imag() == 0; }
  bool skip(long j) const override { return integer_m_ && 2 * j - m_int_ == 1; }
  Complex eval(long j, long abs_bits) const override {
    if (integer_m_) {
      Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
        long b = static_cast<long>(p);
        return view_.even(j, b) * view_.offset(-m_int_, j, b);
      });
      return Complex(std::move(v));
    }
    return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
      Complex arg = detail::complex_param(std::complex<double>(2.0 * j, 0.0) - m_, p);
      Complex tail = m_.imag() == 0 ? Complex(zeta(arg.re, p), Real(0L, p)) : zeta(arg, p);
      return tail * view_.even(j, static_cast<long>(p));
    });
  }

private:
  std::complex<double> m_;
  bool integer_m_ = false;
  long m_int_ = 0;
  detail::ZetaView view_;
};

// F(2j) = zeta(2j)/zeta(4j)
class AbsMoebiusProvider final : public CoefficientProvider {
public:
  explicit AbsMoebiusProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "abs_moebius"; }
  Complex eval(long j, long abs_bits) const override {
    Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
      long b = static_cast<long>(p) + 8;
      return view_.even(j, b) / view_.even(2 * j, b);
    });
    return Complex(std::move(v));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = zeta(4j)/zeta(2j)
class LiouvilleProvider final : public CoefficientProvider {
public:
  explicit LiouvilleProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "liouville"; }
  Complex eval(long j, long abs_bits) const override {
    Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
      long b = static_cast<long>(p) + 8;
      return view_.even(2 * j, b) / view_.even(j, b);
    });
    return Complex(std::move(v));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = -zeta'(2j)/zeta(2j)
class MangoldtProvider final : public CoefficientProvider {
public:
  explicit MangoldtProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "mangoldt"; }
  Complex eval(long j, long abs_bits) const override {
    Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
      long b = static_cast<long>(p) + 8;
      return -(view_.deriv_even(1, j, b) / view_.even(j, b));
    });
    return Complex(std::move(v));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = log zeta(2j), defined from j = 1 on
class MangoldtOverLogProvider final : public CoefficientProvider {
public:
  explicit MangoldtOverLogProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "mangoldt_over_log"; }
  long jmin() const override { return 1; }
  Complex eval(long j, long abs_bits) const override {
    return Complex(view_.log_even(j, abs_bits));
  }

private:
  detail::ZetaView view_;
};

// F(2j) = zeta(s + 2j), skipping the pole index when s is an odd integer
class PowerValueProvider final : public CoefficientProvider {
public:
  explicit PowerValueProvider(std::complex<double> s, const ZetaTable* table = nullptr)
      : s_(s), view_{table} {
    integer_s_ = s.imag() == 0 && detail::is_integer_value(s.real());
    s_int_ = integer_s_ ? static_cast<long>(s.real()) : 0;
  }
  std::string name() const override { return "power_value(" + detail::num_label(s_) + ")"; }
  bool real_valued() const override { return s_.imag() == 0; }
  bool skip(long j) const override { return integer_s_ && 2 * j + s_int_ == 1; }
  Complex eval(long j, long abs_bits) const override {
    if (integer_s_) {
      Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
        return view_.offset(s_int_, j, static_cast<long>(p));
      });
      return Complex(std::move(v));
    }
    return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
      Complex arg = detail::complex_param(s_ + std::complex<double>(2.0 * j, 0.0), p);
      if (s_.imag() == 0) return Complex(zeta(arg.re, p), Real(0L, p));
      return zeta(arg, p);
    });
  }

private:
  std::complex<double> s_;
  bool integer_s_ = false;
  long s_int_ = 0;
  detail::ZetaView view_;
};

// F(2j) = (-1)^k zeta^{(k)}(2j)
class LogPowProvider final : public CoefficientProvider {
public:
  explicit LogPowProvider(long k, const ZetaTable* table = nullptr) : k_(k), view_{table} {
    if (k < 1) throw std::domain_error("log_pow: k must be >= 1");
  }
  std::string name() const override { return "log_pow(" + std::to_string(k_) + ")"; }
  Complex eval(long j, long abs_bits) const override {
    Real v = view_.deriv_even(k_, j, abs_bits);
    if (k_ % 2 != 0) v = -v;
    return Complex(std::move(v));
  }

private:
  long k_;
  detail::ZetaView view_;
};

// F(2j) = sum_k p_k / k^{2j}; needs 2j > 2, so the series starts at j = 2.
// Evaluations grow the shared prime source; concurrent runs must not share
// one source.
class PrimeIndexedProvider final : public CoefficientProvider {
public:
  explicit PrimeIndexedProvider(PrimeSource& src) : src_(&src) {}
  std::string name() const override { return "nth_prime"; }
  long jmin() const override { return 2; }
  bool tail_bounded() const override { return true; }
  bool skip(long j) const override { return j < 2; }
  Complex eval(long j, long abs_bits) const override {
    return Complex(detail::ZetaMemo::instance().prime_even(j, abs_bits, *src_));
  }

private:
  PrimeSource* src_;
};

// F(2j) = zeta(2j) zeta(2j - m) / zeta(4j - 2m).  Exact pole/zero bookkeeping
// for integer and half-integer m; otherwise a magnitude threshold guards the
// denominator's neighborhood of a zero.
class SquarefreeDivisorProvider final : public CoefficientProvider {
public:
  SquarefreeDivisorProvider(std::complex<double> m, long zero_threshold_bits,
                            const ZetaTable* table = nullptr)
      : m_(m), threshold_(std::max(zero_threshold_bits, 16L)), view_{table} {
    integer_m_ = m.imag() == 0 && detail::is_integer_value(m.real());
    m_int_ = integer_m_ ? static_cast<long>(m.real()) : 0;
    half_m_ = m.imag() == 0 && !integer_m_ && detail::is_integer_value(2 * m.real());
    m2_int_ = half_m_ ? static_cast<long>(2 * m.real()) : 0;
  }
  std::string name() const override {
    return "squarefree_divisor_power_sum(" + detail::num_label(m_) + ")";
  }
  bool real_valued() const override { return m_.imag() == 0; }
  bool skip(long j) const override {
    if (integer_m_) {
      // numerator pole / denominator zero at exact integer arguments
      return 2 * j - m_int_ == 1 || 2 * j - m_int_ <= -1;
    }
    // half-integer m: 4j - 2m = 4j - m2 is odd, so the denominator has no
    // trivial zeros; only the numerator pole 2j - m = 1 is skipped
    if (half_m_) return 4 * j - m2_int_ == 2;
    // continuous m: protect against the denominator vanishing
    Real d = denom(j, threshold_ + 32);
    return !(abs(d) > Real::pow2(-threshold_, 64));
  }
  Complex eval(long j, long abs_bits) const override {
    if (half_m_ && 4 * j - m2_int_ == 1) return Complex(Real(0L, 64));  // denominator pole
    if (m_.imag() == 0) {
      Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
        long b = static_cast<long>(p) + 8;
        Real num;
        if (integer_m_) {
          num = view_.even(j, b) * view_.offset(-m_int_, j, b);
        } else {
          num = view_.even(j, b) * zeta(Real(2.0 * j - m_.real(), p + 16), p + 16);
        }
        Real den = integer_m_ ? view_.offset(-2 * m_int_, 2 * j, b)
                              : zeta(Real(4.0 * j - 2 * m_.real(), p + 16), p + 16);
        return num / den;
      });
      return Complex(std::move(v));
    }
    return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
      mpfr_prec_t q = p + 16;
      Complex num = zeta(detail::complex_param(std::complex<double>(2.0 * j, 0.0) - m_, q), q) *
                    view_.even(j, static_cast<long>(q));
      Complex den =
          zeta(detail::complex_param(std::complex<double>(4.0 * j, 0.0) - 2.0 * m_, q), q);
      return num / den;
    });
  }

private:
  Real denom(long j, long bits) const {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + 16);
    if (m_.imag() == 0) return zeta(Real(4.0 * j - 2 * m_.real(), p), p);
    return abs(zeta(detail::complex_param(std::complex<double>(4.0 * j, 0.0) - 2.0 * m_, p), p));
  }

  std::complex<double> m_;
  long threshold_;
  bool integer_m_ = false;
  long m_int_ = 0;
  bool half_m_ = false;
  long m2_int_ = 0;
  detail::ZetaView view_;
};

// F(2j) = 1/zeta(2j + m): zero at the zeta pole, skipped at zeta zeros
class MoebiusOverPowProvider final : public CoefficientProvider {
public:
  MoebiusOverPowProvider(std::complex<double> m, long zero_threshold_bits,
                         const ZetaTable* table = nullptr)
      : m_(m), threshold_(std::max(zero_threshold_bits, 16L)), view_{table} {
    integer_m_ = m.imag() == 0 && detail::is_integer_value(m.real());
    m_int_ = integer_m_ ? static_cast<long>(m.real()) : 0;
  }
  std::string name() const override { return "moebius_over_pow(" + detail::num_label(m_) + ")"; }
  bool real_valued() const override { return m_.imag() == 0; }
  bool skip(long j) const override {
    if (integer_m_) {
      long a = 2 * j + m_int_;
      return a < 0 && a % 2 == 0;
    }
    Real d = denom(j, threshold_ + 32);
    return !(abs(d) > Real::pow2(-threshold_, 64));
  }
  Complex eval(long j, long abs_bits) const override {
    if (integer_m_ && 2 * j + m_int_ == 1) return Complex(Real(0L, 64));  // 1/pole
    if (m_.imag() == 0) {
      Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
        long b = static_cast<long>(p) + 8;
        if (integer_m_) return 1L / view_.offset(m_int_, j, b);
        return 1L / zeta(Real(2.0 * j + m_.real(), p + 16), p + 16);
      });
      return Complex(std::move(v));
    }
    return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
      mpfr_prec_t q = p + 16;
      Complex one(Real(1L, q), Real(0L, q));
      return one / zeta(detail::complex_param(m_ + std::complex<double>(2.0 * j, 0.0), q), q);
    });
  }

private:
  Real denom(long j, long bits) const {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + 16);
    if (m_.imag() == 0) return zeta(Real(2.0 * j + m_.real(), p), p);
    return abs(zeta(detail::complex_param(m_ + std::complex<double>(2.0 * j, 0.0), p), p));
  }

  std::complex<double> m_;
  long threshold_;
  bool integer_m_ = false;
  long m_int_ = 0;
  detail::ZetaView view_;
};

// F(2j) = zeta(2j)^w, principal branch.  zeta(0) = -1/2 is negative, so the
// j = 0 coefficient is kept exactly for integer w, kept on the principal
// branch for non-real w, and skipped (reported via skipped_j) when a real
// non-integer power would force a complex value into a real series.
class ZetaPowerProvider final : public CoefficientProvider {
public:
  explicit ZetaPowerProvider(std::complex<double> w, const ZetaTable* table = nullptr)
      : w_(w), view_{table} {
    integer_w_ = w.imag() == 0 && detail::is_integer_value(w.real());
    w_int_ = integer_w_ ? static_cast<long>(w.real()) : 0;
  }
  std::string name() const override { return "zeta_power(" + detail::num_label(w_) + ")"; }
  bool real_valued() const override { return w_.imag() == 0; }
  bool skip(long j) const override { return j == 0 && w_.imag() == 0 && !integer_w_; }
  Complex eval(long j, long abs_bits) const override {
    if (j == 0) {
      if (integer_w_) {
        Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
          return pow(Real(-0.5, p), w_int_);
        });
        return Complex(std::move(v));
      }
      return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
        Complex base(Real(-0.5, p), Real(0L, p));
        return pow(base, detail::complex_param(w_, p));
      });
    }
    if (w_.imag() == 0) {
      Real v = detail::controlled_real(abs_bits, [&](mpfr_prec_t p) {
        long b = static_cast<long>(p) + 8;
        if (integer_w_) return pow(view_.even(j, b), w_int_);
        return exp(Real(w_.real(), p + 16) * view_.log_even(j, b));
      });
      return Complex(std::move(v));
    }
    return detail::controlled_complex(abs_bits, [&](mpfr_prec_t p) {
      Real lz = view_.log_even(j, static_cast<long>(p) + 8);
      Complex e(Real(w_.real(), p + 16) * lz, Real(w_.imag(), p + 16) * lz);
      return exp(e);
    });
  }

private:
  std::complex<double> w_;
  bool integer_w_ = false;
  long w_int_ = 0;
  detail::ZetaView view_;
};

// F(2j) = zeta(2j); inverts to 1 at the integers
class OnesProvider final : public CoefficientProvider {
public:
  explicit OnesProvider(const ZetaTable* table = nullptr) : view_{table} {}
  std::string name() const override { return "ones"; }
  Complex eval(long j, long abs_bits) const override {
    return Complex(view_.even(j, abs_bits));
  }

private:
  detail::ZetaView view_;
};

// ---------------------------------------------------------------------------
// Named operations
// ---------------------------------------------------------------------------

namespace detail {
inline void require_positive(double n, const char* op) {
  if (!(n > 0)) throw std::domain_error(std::string(op) + ": argument must be positive");
}
}  // namespace detail

inline SeriesResult moebius(double n, const NumericContext& ctx,
                            const ZetaTable* table = nullptr) {
  detail::require_positive(n, "moebius");
  MoebiusProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult moebius_q(double n, long q, const NumericContext& ctx,
                              const ZetaTable* table = nullptr) {
  detail::require_positive(n, "moebius_q");
  MoebiusQProvider prov(q, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult sigma_m(double n, std::complex<double> m, const NumericContext& ctx,
                            const ZetaTable* table = nullptr) {
  detail::require_positive(n, "sigma_m");
  SigmaMProvider prov(m, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult sigma_m(double n, double m, const NumericContext& ctx,
                            const ZetaTable* table = nullptr) {
  return sigma_m(n, std::complex<double>(m, 0.0), ctx, table);
}

inline SeriesResult abs_moebius(double n, const NumericContext& ctx,
                                const ZetaTable* table = nullptr) {
  detail::require_positive(n, "abs_moebius");
  AbsMoebiusProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult liouville(double n, const NumericContext& ctx,
                              const ZetaTable* table = nullptr) {
  detail::require_positive(n, "liouville");
  LiouvilleProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult mangoldt(double n, const NumericContext& ctx,
                             const ZetaTable* table = nullptr) {
  detail::require_positive(n, "mangoldt");
  MangoldtProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult mangoldt_over_log(double n, const NumericContext& ctx,
                                      const ZetaTable* table = nullptr) {
  detail::require_positive(n, "mangoldt_over_log");
  MangoldtOverLogProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult power_value(double n, std::complex<double> s, const NumericContext& ctx,
                                const ZetaTable* table = nullptr) {
  if (!(n >= 1)) throw std::domain_error("power_value: argument must be >= 1");
  PowerValueProvider prov(s, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult power_value(double n, double s, const NumericContext& ctx,
                                const ZetaTable* table = nullptr) {
  return power_value(n, std::complex<double>(s, 0.0), ctx, table);
}

inline SeriesResult log_pow(double n, long k, const NumericContext& ctx,
                            const ZetaTable* table = nullptr) {
  if (!(n >= 1)) throw std::domain_error("log_pow: argument must be >= 1");
  LogPowProvider prov(k, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult nth_prime(double n, const NumericContext& ctx, PrimeSource& primes) {
  if (!(n >= 1)) throw std::domain_error("nth_prime: index must be >= 1");
  PrimeIndexedProvider prov(primes);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult squarefree_divisor_power_sum(double n, std::complex<double> m,
                                                 const NumericContext& ctx,
                                                 const ZetaTable* table = nullptr) {
  detail::require_positive(n, "squarefree_divisor_power_sum");
  SquarefreeDivisorProvider prov(m, ctx.precision_bits / 2, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult squarefree_divisor_power_sum(double n, double m, const NumericContext& ctx,
                                                 const ZetaTable* table = nullptr) {
  return squarefree_divisor_power_sum(n, std::complex<double>(m, 0.0), ctx, table);
}

inline SeriesResult moebius_over_pow(double n, std::complex<double> m, const NumericContext& ctx,
                                     const ZetaTable* table = nullptr) {
  detail::require_positive(n, "moebius_over_pow");
  MoebiusOverPowProvider prov(m, ctx.precision_bits / 2, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult moebius_over_pow(double n, double m, const NumericContext& ctx,
                                     const ZetaTable* table = nullptr) {
  return moebius_over_pow(n, std::complex<double>(m, 0.0), ctx, table);
}

inline SeriesResult zeta_power_coefficient(double n, std::complex<double> w,
                                           const NumericContext& ctx,
                                           const ZetaTable* table = nullptr) {
  detail::require_positive(n, "zeta_power_coefficient");
  ZetaPowerProvider prov(w, table);
  return invert_at({&prov, n, {}, ctx});
}

inline SeriesResult constant_one(double n, const NumericContext& ctx,
                                 const ZetaTable* table = nullptr) {
  detail::require_positive(n, "constant_one");
  OnesProvider prov(table);
  return invert_at({&prov, n, {}, ctx});
}

// Distinct-prime count via the base-2 logarithm of the square-free divisor
// count.  The log is snapped to the nearest integer when the inner value
// sits within 2^{-10} relative of a power of two; otherwise the raw log is
// reported with snapped = false so callers can see the precision shortfall.
struct OmegaResult {
  SeriesResult inner;
  Real value;
  Real abs_error_estimate;
  bool snapped = false;
};

inline OmegaResult omega_distinct(double n, const NumericContext& ctx,
                                  const ZetaTable* table = nullptr) {
  if (!(n >= 1)) throw std::domain_error("omega_distinct: argument must be >= 1");
  OmegaResult out;
  out.inner = squarefree_divisor_power_sum(n, 0.0, ctx, table);
  const Real& v = out.inner.value.re;
  if (!(v > 0L))
    throw std::domain_error(
        "omega_distinct: inner divisor-count series is not positive; raise the precision");
  mpfr_prec_t p = static_cast<mpfr_prec_t>(ctx.precision_bits);
  Real w = log2(round_to(v, p + 16));
  Real r = round(w);
  Real p2r = pow(Real(2L, p + 16), r);
  bool near = !(abs(v - p2r) > ldexp(p2r, -10));
  if (near) {
    out.value = round_to(r, p);
    out.snapped = true;
  } else {
    out.value = round_to(w, p);
  }
  Real ln2(std::log(2.0), 64);
  out.abs_error_estimate = out.inner.abs_error_estimate / (round_to(v, 64) * ln2);
  if (out.snapped) out.abs_error_estimate += abs(round_to(w, 64) - round_to(r, 64));
  return out;
}

// ---------------------------------------------------------------------------
// Function registry
// ---------------------------------------------------------------------------

enum class FunctionId {
  Moebius,
  MoebiusQ,
  SigmaM,
  AbsMoebius,
  Liouville,
  Mangoldt,
  MangoldtOverLog,
  PowerValue,
  LogPow,
  NthPrime,
  SquarefreeDivisorSum,
  OmegaDistinct,
  UnitFunction,
  MoebiusOverPow,
  ZetaPower,
  ConstantOne,
};

struct FunctionParams {
  long q = 2;                       // MoebiusQ
  std::complex<double> m{0.0, 0.0};  // SigmaM / SquarefreeDivisorSum / MoebiusOverPow
  std::complex<double> s{-0.5, 0.0};  // PowerValue
  long k = 1;                       // LogPow
  std::complex<double> w{0.5, 0.0};  // ZetaPower
};

struct NamedFunction {
  FunctionId id = FunctionId::Moebius;
  std::string label;
  std::shared_ptr<const CoefficientProvider> provider;  // null for OmegaDistinct
};

inline NamedFunction make_named_function(FunctionId id, const FunctionParams& pr,
                                         const NumericContext& ctx,
                                         const ZetaTable* table = nullptr,
                                         PrimeSource* primes = nullptr) {
  NamedFunction f;
  f.id = id;
  long threshold = ctx.precision_bits / 2;
  switch (id) {
    case FunctionId::Moebius:
      f.provider = std::make_shared<MoebiusProvider>(table);
      break;
    case FunctionId::MoebiusQ:
      f.provider = std::make_shared<MoebiusQProvider>(pr.q, table);
      break;
    case FunctionId::SigmaM:
      f.provider = std::make_shared<SigmaMProvider>(pr.m, table);
      break;
    case FunctionId::AbsMoebius:
      f.provider = std::make_shared<AbsMoebiusProvider>(table);
      break;
    case FunctionId::Liouville:
      f.provider = std::make_shared<LiouvilleProvider>(table);
      break;
    case FunctionId::Mangoldt:
      f.provider = std::make_shared<MangoldtProvider>(table);
      break;
    case FunctionId::MangoldtOverLog:
      f.provider = std::make_shared<MangoldtOverLogProvider>(table);
      break;
    case FunctionId::PowerValue:
      f.provider = std::make_shared<PowerValueProvider>(pr.s, table);
      break;
    case FunctionId::LogPow:
      f.provider = std::make_shared<LogPowProvider>(pr.k, table);
      break;
    case FunctionId::NthPrime:
      if (primes == nullptr)
        throw std::domain_error("nth_prime: a prime source is required");
      f.provider = std::make_shared<PrimeIndexedProvider>(*primes);
      break;
    case FunctionId::SquarefreeDivisorSum:
      f.provider = std::make_shared<SquarefreeDivisorProvider>(pr.m, threshold, table);
      break;
    case FunctionId::OmegaDistinct:
      f.provider = std::make_shared<SquarefreeDivisorProvider>(std::complex<double>(0.0, 0.0),
                                                               threshold, table);
      break;
    case FunctionId::UnitFunction:
      f.provider = std::make_shared<MoebiusQProvider>(0L, table);
      break;
    case FunctionId::MoebiusOverPow:
      f.provider = std::make_shared<MoebiusOverPowProvider>(pr.m, threshold, table);
      break;
    case FunctionId::ZetaPower:
      f.provider = std::make_shared<ZetaPowerProvider>(pr.w, table);
      break;
    case FunctionId::ConstantOne:
      f.provider = std::make_shared<OnesProvider>(table);
      break;
  }
  f.label = id == FunctionId::OmegaDistinct ? "omega_distinct" : f.provider->name();
  return f;
}

}  // namespace dirichlet

#endif  // DIRICHLET_FUNCTIONS_HPP
