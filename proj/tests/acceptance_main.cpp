// End-to-end gate: each numbered block prints one PASS/FAIL line; the exit
// code is the number of failing blocks.  Reference data lives in
// table_reference.hpp; tolerances are stated inline next to each check.
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dirichlet/dirichlet.hpp"
#include "table_reference.hpp"

using namespace dirichlet;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s - %s%s%s\n", idx, ok ? "PASS" : "FAIL", name,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fixed2(const Real& v) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.2Rf", v.raw());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// residual vs estimate bookkeeping for every evaluation with a known truth
struct Honesty {
  long checked = 0;
  long violated = 0;
  void note(double residual, double estimate) {
    ++checked;
    if (residual > estimate) ++violated;
  }
};
Honesty honesty;

std::vector<Int> dirichlet_product(const std::vector<Int>& f, const std::vector<Int>& g) {
  long n = static_cast<long>(f.size()) - 1;
  std::vector<Int> h(n + 1, Int(0));
  for (long d = 1; d <= n; ++d) {
    if (f[d] == 0) continue;
    for (long m = d; m <= n; m += d) h[m] += f[d] * g[m / d];
  }
  return h;
}

// F(2j) = 1/zeta(2j)^q
class InverseZetaPower final : public CoefficientProvider {
public:
  explicit InverseZetaPower(long q) : q_(q) {}
  std::string name() const override { return "inv_zeta_pow_" + std::to_string(q_); }
  Complex eval(long j, long abs_bits) const override {
    mpfr_prec_t p = static_cast<mpfr_prec_t>(abs_bits + 32);
    return Complex(1L / pow(zeta_even(j, p), q_), Real(0L, p));
  }

private:
  long q_;
};

class LinearMix final : public CoefficientProvider {
public:
  LinearMix(const CoefficientProvider& a, const CoefficientProvider& b, long al, long be)
      : a_(a), b_(b), al_(al), be_(be) {}
  std::string name() const override { return "mix"; }
  Complex eval(long j, long abs_bits) const override {
    Complex fa = a_.eval(j, abs_bits + 4);
    Complex fb = b_.eval(j, abs_bits + 4);
    return Complex(al_ * fa.re + be_ * fb.re, al_ * fa.im + be_ * fb.im);
  }

private:
  const CoefficientProvider& a_;
  const CoefficientProvider& b_;
  long al_, be_;
};

void criterion_1_prime_power_table(const Sieve& sieve, const ZetaTable& table) {
  int actual_ok = 0, approx_ok = 0;
  std::string flagged;
  for (const TableRow& row : kPrimePowerRows) {
    NumericContext ctx = make_context(row.x, 1e-6);
    PrimePowerCount r = j_exact_and_asymptotic(row.x, ctx, sieve, &table);
    std::string actual = fixed2(to_real(r.exact, 256));
    if (actual == row.actual) ++actual_ok;
    double appr = std::atof(row.approx);
    if (std::fabs(r.approx.value_d() - appr) <= 0.015) {
      ++approx_ok;
    } else {
      flagged += (flagged.empty() ? "x=" : ", x=") + std::to_string(row.x);
      char buf[64];
      std::snprintf(buf, sizeof buf, " (ours %.4f vs %s)", r.approx.value_d(), row.approx);
      flagged += buf;
    }
  }
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "prime-power table actual %d/75 exact, approx %d/75 within 0.015%s%s",
                actual_ok, approx_ok, flagged.empty() ? "" : "; flagged ", flagged.c_str());
  report(1, "prime-power count table", actual_ok == 75 && approx_ok >= 71, detail);
}

void criterion_2_divisor_table(const Sieve& sieve, const ZetaTable& table) {
  int actual_ok = 0, approx_ok = 0;
  std::string flagged;
  for (const TableRow& row : kDivisorSumRows) {
    NumericContext ctx = make_context(row.x, 1e-6);
    DivisorSummatory r = dsum_exact_and_asymptotic(row.x, ctx, sieve, &table);
    if (r.exact.str() == row.actual) ++actual_ok;
    double appr = std::atof(row.approx);
    if (std::fabs(r.approx.value_d() - appr) <= 0.015) {
      ++approx_ok;
    } else {
      flagged += (flagged.empty() ? "x=" : ", x=") + std::to_string(row.x);
    }
  }
  // spot anchors
  bool anchors = std::string(kDivisorSumRows[0].actual) == "1" &&
                 std::string(kDivisorSumRows[0].approx) == "1.16" &&
                 std::string(kDivisorSumRows[24].actual) == "87" &&
                 std::string(kDivisorSumRows[24].approx) == "87.11" &&
                 std::string(kDivisorSumRows[63].actual) == "280" &&
                 std::string(kDivisorSumRows[63].approx) == "280.21";
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "divisor-sum table actual %d/75 exact, approx %d/75 within 0.015%s%s%s",
                actual_ok, approx_ok, anchors ? "" : "; anchor mismatch",
                flagged.empty() ? "" : "; flagged ", flagged.c_str());
  report(2, "divisor summatory table", actual_ok == 75 && approx_ok >= 71 && anchors, detail);
}

void criterion_3_moebius_equivalence(const Sieve& sieve) {
  double worst = 0;
  for (long n = 1; n <= 40; ++n) {
    NumericContext ctx = make_context(n, 1e-10);
    ctx.precision_bits = static_cast<long>(std::ceil(9.07 * n)) + 128;
    SeriesResult r = moebius(static_cast<double>(n), ctx);
    double resid = std::fabs(r.value_d() - sieve.moebius(n));
    honesty.note(resid, r.error_d());
    worst = std::max(worst, resid);
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "max |series - sieve| = %.3e over n = 1..40", worst);
  report(3, "moebius series equals the sieve", worst <= 1e-10, detail);
}

void criterion_4_pi_series(const Sieve& sieve) {
  double worst = 0;
  for (Variant v : {Variant::TwoPi, Variant::FourPi}) {
    for (long x = 1; x <= 15; ++x) {
      CountResult r = pi_series(static_cast<double>(x), make_context(x, 1e-8, v));
      double resid = std::fabs(r.value_d() - static_cast<double>(sieve.prime_pi(x)));
      honesty.note(resid, r.error_d());
      worst = std::max(worst, resid);
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "max residual %.3e over x = 1..15, both frequencies",
                worst);
  report(4, "prime counting series", worst <= 1e-6, detail);
}

void criterion_5_delta(void) {
  double worst = 0;
  for (long k = 1; k <= 10; ++k)
    for (long n = 1; n <= 10; ++n) {
      SeriesResult r = delta_series(n, k, make_context(n, 1e-12));
      double want = n == k ? 1.0 : 0.0;
      double resid = std::fabs(r.value_d() - want);
      honesty.note(resid, r.error_d());
      worst = std::max(worst, resid);
    }
  char detail[96];
  std::snprintf(detail, sizeof detail, "max |entry - identity| = %.3e on the 10x10 grid", worst);
  report(5, "kronecker delta grid", worst <= 1e-12, detail);
}

void criterion_6_zeta_powers(void) {
  static const double sq[11] = {1.0,      1.0 / 2,  1.0 / 2, 3.0 / 8, 1.0 / 2, 1.0 / 4,
                                1.0 / 2,  5.0 / 16, 3.0 / 8, 1.0 / 4, 1.0 / 2};
  static const double zi_re[11] = {1, 0, 0, -0.5, 0, -1, 0, -0.5, -0.5, -1, 0};
  static const double zi_im[11] = {0, 1, 1, 0.5, 1, 0, 1, 1.0 / 6, 0.5, 0, 1};
  double worst = 0;
  for (long n = 1; n <= 11; ++n) {
    NumericContext ctx = make_context(n, 1e-12);
    SeriesResult h = zeta_power_coefficient(static_cast<double>(n), {0.5, 0.0}, ctx);
    worst = std::max(worst, std::fabs(h.value_d() - sq[n - 1]));
    worst = std::max(worst, std::fabs(h.value.im.to_double()));
    SeriesResult c = zeta_power_coefficient(static_cast<double>(n), {0.0, 1.0}, ctx);
    worst = std::max(worst, std::fabs(c.value.re.to_double() - zi_re[n - 1]));
    worst = std::max(worst, std::fabs(c.value.im.to_double() - zi_im[n - 1]));
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "max coefficient error %.3e for n <= 11", worst);
  report(6, "square root and imaginary power of zeta", worst <= 1e-12, detail);
}

void criterion_7_integer_identities(const Sieve& sieve) {
  const long N = 10000;
  std::string bad;

  // mu(n) equals the divisor sum of the twofold self-convolution
  std::vector<long> conv(N + 1, 0);
  for (long d = 1; d <= N; ++d) {
    // moebius_q(d, 2) summed over divisors d of every n
    long mq = static_cast<long>(sieve.moebius_q(d, 2));
    if (mq == 0) continue;
    for (long n = d; n <= N; n += d) conv[n] += mq;
  }
  for (long n = 1; n <= N && bad.empty(); ++n)
    if (conv[n] != sieve.moebius(n)) bad = "convolution identity at n=" + std::to_string(n);

  // sum of mu over divisors detects 1
  std::fill(conv.begin(), conv.end(), 0L);
  for (long d = 1; d <= N; ++d) {
    long mu = sieve.moebius(d);
    if (mu == 0) continue;
    for (long n = d; n <= N; n += d) conv[n] += mu;
  }
  for (long n = 1; n <= N && bad.empty(); ++n)
    if (conv[n] != (n == 1 ? 1 : 0)) bad = "mu divisor sum at n=" + std::to_string(n);

  // convolving with the delta column changes nothing
  if (bad.empty()) {
    std::vector<Int> f(N + 1), g(N + 1);
    for (long n = 1; n <= N; ++n) {
      f[n] = Int(sieve.moebius(n));
      g[n] = sieve.moebius_q(n, 0);
    }
    std::vector<Int> h = dirichlet_product(f, g);
    for (long n = 1; n <= N; ++n)
      if (h[n] != f[n]) {
        bad = "delta convolution at n=" + std::to_string(n);
        break;
      }
  }

  // inverse pairs across the convolution-power ladder
  for (long q = 1; q <= 3 && bad.empty(); ++q) {
    std::vector<Int> f(N + 1), g(N + 1);
    for (long n = 1; n <= N; ++n) {
      f[n] = sieve.moebius_q(n, q);
      g[n] = sieve.moebius_q(n, -q);
    }
    std::vector<Int> h = dirichlet_product(f, g);
    for (long n = 1; n <= N; ++n)
      if (h[n] != Int(n == 1 ? 1 : 0)) {
        bad = "inverse pair q=" + std::to_string(q) + " at n=" + std::to_string(n);
        break;
      }
  }

  // ladder step: the (q+1)-fold column is the q-fold column convolved with mu
  for (long q = 1; q <= 2 && bad.empty(); ++q) {
    std::vector<Int> f(N + 1), g(N + 1);
    for (long n = 1; n <= N; ++n) {
      f[n] = sieve.moebius_q(n, q);
      g[n] = Int(sieve.moebius(n));
    }
    std::vector<Int> h = dirichlet_product(f, g);
    for (long n = 1; n <= N; ++n)
      if (h[n] != sieve.moebius_q(n, q + 1)) {
        bad = "ladder step q=" + std::to_string(q) + " at n=" + std::to_string(n);
        break;
      }
  }

  // parity of the factor count
  for (long n = 1; n <= N && bad.empty(); ++n)
    if (sieve.liouville(n) != (sieve.big_omega(n) % 2 == 0 ? 1 : -1))
      bad = "factor parity at n=" + std::to_string(n);

  report(7, "integer identity suite (n <= 10000)", bad.empty(), bad);
}

void criterion_8_properties(const Sieve& sieve) {
  std::string bad;

  // linearity of the inversion in the series
  {
    InverseZetaPower mu_p(1), mu2_p(2);
    LinearMix mix(mu_p, mu2_p, 2, -3);
    for (long n : {6L, 12L}) {
      NumericContext ctx = make_context(n, 1e-10);
      InversionRequest req;
      req.provider = &mix;
      req.n = static_cast<double>(n);
      req.ctx = ctx;
      double got = invert_at(req).value_d();
      double want =
          2.0 * sieve.moebius(n) - 3.0 * static_cast<double>(sieve.moebius_q(n, 2));
      if (std::fabs(got - want) > 5e-10) {
        bad = "linearity at n=" + std::to_string(n);
        break;
      }
    }
  }

  // dropping leading columns leaves integer values alone
  if (bad.empty()) {
    for (long n = 1; n <= 20 && bad.empty(); ++n) {
      NumericContext ctx = make_context(n, 1e-10);
      double base = indicator_series({static_cast<double>(n), 2, 0}, ctx).value_d();
      for (long q = 1; q <= 4; ++q) {
        double shifted = indicator_series({static_cast<double>(n), 2, q}, ctx).value_d();
        if (std::fabs(shifted - base) > 2e-10) {
          bad = "column shift q=" + std::to_string(q) + " at n=" + std::to_string(n);
          break;
        }
      }
    }
  }

  // the all-ones divisor sum stays 1 on integers
  if (bad.empty()) {
    for (long n = 1; n <= 30; ++n) {
      SeriesResult r = constant_one(static_cast<double>(n), make_context(n, 1e-8));
      double resid = std::fabs(r.value_d() - 1.0);
      honesty.note(resid, r.error_d());
      if (resid > 1e-7) {
        bad = "all-ones at n=" + std::to_string(n);
        break;
      }
    }
  }

  // summatory series telescope through their pointwise series
  if (bad.empty()) {
    for (long x = 2; x <= 15; ++x) {
      double step = pi_series(x, make_context(x, 1e-8)).value_d() -
                    pi_series(x - 1, make_context(x, 1e-8)).value_d();
      double ind = prime_indicator(x, make_context(x, 1e-8)).value_d();
      if (std::fabs(step - ind) > 1e-6) {
        bad = "pi telescoping at x=" + std::to_string(x);
        break;
      }
    }
  }
  if (bad.empty()) {
    for (long x = 1; x <= 20; ++x) {
      CountResult r = mertens_series(static_cast<double>(x), make_context(x, 1e-8));
      double resid = std::fabs(r.value_d() - static_cast<double>(sieve.mertens(x)));
      honesty.note(resid, r.error_d());
      if (resid > 1e-6) {
        bad = "mertens at x=" + std::to_string(x);
        break;
      }
    }
  }

  // every residual recorded above must sit inside its reported estimate
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%s%serror honesty: %ld checked, %ld outside their estimate",
                bad.c_str(), bad.empty() ? "" : "; ", honesty.checked, honesty.violated);
  report(8, "property suite", bad.empty() && honesty.violated == 0, detail);
}

void criterion_9_trend_report(const Sieve& sieve, const ZetaTable& table) {
  std::puts("half-weight counting approximation, doubled frequency, x = 5..75:");
  std::puts("       x    exact    approx      rel_err    approx/exact");
  bool converged = true;
  double prev_rel = -1;
  bool monotone = true;
  for (long x = 5; x <= 75; x += 5) {
    try {
      NumericContext ctx = make_context(x, 1e-6, Variant::FourPi);
      CountResult r = pi_asymptotic(x, ctx, sieve, &table);
      double exact = static_cast<double>(sieve.prime_pi(x));
      double rel = std::fabs(r.value_d() - exact) / exact;
      std::printf("  %6ld   %6.0f   %9.4f   %.3e   %.4f\n", x, exact, r.value_d(), rel,
                  r.value_d() / exact);
      if (prev_rel >= 0 && rel > prev_rel) monotone = false;
      prev_rel = rel;
    } catch (const std::exception& e) {
      converged = false;
      std::printf("  %6ld   did not converge: %s\n", x, e.what());
    }
  }
  std::printf("  relative error trend monotone: %s (reported, not asserted)\n",
              monotone ? "yes" : "no");
  report(9, "asymptotic trend report", converged,
         "all 15 points converged; trend reported above");
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  Sieve sieve(10000);

  ZetaTable::Options opt;
  opt.j_max = 840;
  opt.precision_bits = 1536;
  ZetaTable table = ZetaTable::build(opt);

  criterion_1_prime_power_table(sieve, table);
  criterion_2_divisor_table(sieve, table);
  criterion_3_moebius_equivalence(sieve);
  criterion_4_pi_series(sieve);
  criterion_5_delta();
  criterion_6_zeta_powers();
  criterion_7_integer_identities(sieve);
  criterion_8_properties(sieve);
  criterion_9_trend_report(sieve, table);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
