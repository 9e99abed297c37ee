#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/dirichlet.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace dirichlet;

struct CommonOpts {
  long precision_bits = 0;  // 0 = derived from the argument range
  double target = 0;        // 0 = command default
  std::string variant = "2pi";
  long terms_cap = 0;
  std::string cache_path;
  std::string format = "csv";
  std::string out_path;
};

struct FuncParams {
  long q = 2;
  std::string m = "1";
  std::string s = "-0.5";
  long k = 1;
  std::string w = "0.5";
  long at = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--precision-bits", o.precision_bits, "override working precision in bits");
  cmd->add_option("--target-error", o.target, "absolute error target");
  cmd->add_option("--variant", o.variant, "series frequency variant")
      ->check(CLI::IsMember({"2pi", "pi", "4pi"}));
  cmd->add_option("--terms-cap", o.terms_cap, "outer term cap override");
  cmd->add_option("--cache", o.cache_path, "zeta table cache file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "tsv", "pretty"}));
  cmd->add_option("--out", o.out_path, "write output to file instead of stdout");
}

void add_params(CLI::App* cmd, FuncParams& p) {
  cmd->add_option("--q", p.q, "convolution order for moebius_q");
  cmd->add_option("--m", p.m, "exponent m (re or re,im)");
  cmd->add_option("--s", p.s, "exponent s (re or re,im)");
  cmd->add_option("--k", p.k, "log power k");
  cmd->add_option("--w", p.w, "zeta power w (re or re,im)");
  cmd->add_option("--at", p.at, "delta target index");
}

Variant parse_variant(const std::string& v) {
  if (v == "pi") return Variant::Pi;
  if (v == "4pi") return Variant::FourPi;
  return Variant::TwoPi;
}

std::complex<double> parse_complex(const std::string& text) {
  std::string t = text;
  auto comma = t.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(t), 0.0};
    return {std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::domain_error("cannot parse complex number: " + text);
  }
}

NumericContext build_ctx(double n_max, double tgt, const CommonOpts& o) {
  NumericContext ctx = make_context(std::max(1.0, std::fabs(n_max)), tgt, parse_variant(o.variant));
  if (o.precision_bits > 0) ctx.precision_bits = o.precision_bits;
  if (o.terms_cap > 0) ctx.max_outer_terms = o.terms_cap;
  return ctx;
}

std::optional<ZetaTable> maybe_table(const CommonOpts& o) {
  std::string path = o.cache_path;
  if (path.empty()) {
    const char* dir = std::getenv("DIRICHLET_CACHE_DIR");
    if (dir && *dir) {
      std::string cand = std::string(dir) + "/default.ztab";
      if (std::filesystem::exists(cand)) path = cand;
    }
  }
  if (path.empty()) return std::nullopt;
  return load_table(path);
}

std::string fixed_str(const Real& v, int digits) {
  if (v.is_nan()) return "nan";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string sci_str(const Real& v, int digits = 2) {
  if (v.is_nan()) return "nan";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits, v.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

bool near_integer(double x) { return std::fabs(x - std::llround(x)) < 1e-9; }

struct EvalOutput {
  Complex value{64};
  Real err{64};
  long terms = 0;
  std::vector<long> skipped;
  bool complex_valued = false;
  std::string note;
};

EvalOutput from_series(SeriesResult s, bool complex_valued = false) {
  EvalOutput o;
  o.value = std::move(s.value);
  o.err = std::move(s.abs_error_estimate);
  o.terms = s.outer_terms_used;
  o.skipped = std::move(s.skipped_j);
  o.complex_valued = complex_valued;
  return o;
}

EvalOutput from_count(CountResult c) {
  EvalOutput o;
  o.value = Complex(std::move(c.value));
  o.err = std::move(c.abs_error_estimate);
  o.terms = c.outer_terms_used;
  o.skipped = std::move(c.skipped_j);
  return o;
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {
      "moebius", "moebius_q", "sigma", "abs_moebius", "liouville", "mangoldt",
      "mangoldt_over_log", "power", "log_pow", "nth_prime", "sfds", "omega",
      "unit", "moebius_over_pow", "zeta_power", "ones", "delta",
      "pi", "mertens", "prime_indicator"};
  return names;
}

std::string canonical_name(std::string f) {
  if (f == "sigma_m") return "sigma";
  if (f == "power_value") return "power";
  if (f == "constant_one") return "ones";
  if (f == "omega_distinct") return "omega";
  if (f == "squarefree_divisor") return "sfds";
  return f;
}

EvalOutput eval_function(const std::string& f, double x, const FuncParams& p,
                         const NumericContext& ctx, const ZetaTable* table,
                         PrimeSource& primes) {
  if (f == "moebius") return from_series(moebius(x, ctx, table));
  if (f == "moebius_q") return from_series(moebius_q(x, p.q, ctx, table));
  if (f == "sigma") {
    std::complex<double> m = parse_complex(p.m);
    return from_series(sigma_m(x, m, ctx, table), m.imag() != 0);
  }
  if (f == "abs_moebius") return from_series(abs_moebius(x, ctx, table));
  if (f == "liouville") return from_series(liouville(x, ctx, table));
  if (f == "mangoldt") return from_series(mangoldt(x, ctx, table));
  if (f == "mangoldt_over_log") return from_series(mangoldt_over_log(x, ctx, table));
  if (f == "power") {
    std::complex<double> s = parse_complex(p.s);
    return from_series(power_value(x, s, ctx, table), s.imag() != 0);
  }
  if (f == "log_pow") return from_series(log_pow(x, p.k, ctx, table));
  if (f == "nth_prime") return from_series(nth_prime(x, ctx, primes));
  if (f == "sfds") {
    std::complex<double> m = parse_complex(p.m);
    return from_series(squarefree_divisor_power_sum(x, m, ctx, table), m.imag() != 0);
  }
  if (f == "omega") {
    OmegaResult r = omega_distinct(x, ctx, table);
    EvalOutput o;
    o.value = Complex(std::move(r.value));
    o.err = std::move(r.abs_error_estimate);
    o.terms = r.inner.outer_terms_used;
    o.skipped = r.inner.skipped_j;
    if (r.snapped) o.note = "snapped-to-integer-log2";
    return o;
  }
  if (f == "unit") return from_series(moebius_q(x, 0, ctx, table));
  if (f == "moebius_over_pow") {
    std::complex<double> m = parse_complex(p.m);
    return from_series(moebius_over_pow(x, m, ctx, table), m.imag() != 0);
  }
  if (f == "zeta_power") {
    std::complex<double> w = parse_complex(p.w);
    return from_series(zeta_power_coefficient(x, w, ctx, table), w.imag() != 0);
  }
  if (f == "ones") return from_series(constant_one(x, ctx, table));
  if (f == "delta") {
    if (!near_integer(x)) throw std::domain_error("delta: argument must be an integer");
    return from_series(delta_series(std::llround(x), p.at, ctx));
  }
  if (f == "pi") return from_count(pi_series(x, ctx, table));
  if (f == "mertens") return from_count(mertens_series(x, ctx, table));
  if (f == "prime_indicator") return from_series(prime_indicator(x, ctx, table));
  throw std::domain_error("unknown function: " + f);
}

// Exact integer-argument reference where one exists.
std::optional<Real> oracle_value(const std::string& f, long n, const FuncParams& p,
                                 const Sieve& sieve, mpfr_prec_t prec) {
  if (f == "moebius") return Real(static_cast<long>(sieve.moebius(n)), prec);
  if (f == "moebius_q") return to_real(sieve.moebius_q(n, p.q), prec);
  if (f == "sigma") {
    std::complex<double> m = parse_complex(p.m);
    if (m.imag() != 0 || !near_integer(m.real())) return std::nullopt;
    return to_real(sieve.sigma(n, std::llround(m.real())), prec);
  }
  if (f == "abs_moebius") return Real(static_cast<long>(sieve.abs_moebius(n)), prec);
  if (f == "liouville") return Real(static_cast<long>(sieve.liouville(n)), prec);
  if (f == "mangoldt") {
    auto [pp, k] = sieve.mangoldt_pk(n);
    return k > 0 ? log(Real(pp, prec)) : Real(0L, prec);
  }
  if (f == "mangoldt_over_log") return to_real(sieve.mangoldt_over_log(n), prec);
  if (f == "power") {
    std::complex<double> s = parse_complex(p.s);
    if (s.imag() != 0) return std::nullopt;
    return pow(Real(n, prec), Real(-s.real(), prec));
  }
  if (f == "log_pow") return pow(log(Real(n, prec)), p.k);
  if (f == "nth_prime") return Real(sieve.nth_prime(static_cast<std::size_t>(n)), prec);
  if (f == "sfds") {
    std::complex<double> m = parse_complex(p.m);
    if (m.imag() != 0 || !near_integer(m.real())) return std::nullopt;
    return to_real(sieve.squarefree_sigma(n, std::llround(m.real())), prec);
  }
  if (f == "omega") return Real(static_cast<long>(sieve.omega(n)), prec);
  if (f == "unit") return Real(n == 1 ? 1L : 0L, prec);
  if (f == "moebius_over_pow") {
    std::complex<double> m = parse_complex(p.m);
    if (m.imag() != 0 || !near_integer(m.real())) return std::nullopt;
    long mi = std::llround(m.real());
    Rational r(sieve.moebius(n));
    Rational scale = mi >= 0 ? Rational(pow(Int(n), static_cast<unsigned>(mi)))
                             : Rational(pow(Int(n), static_cast<unsigned>(-mi)));
    Rational scaled = mi >= 0 ? Rational(r / scale) : Rational(r * scale);
    return to_real(scaled, prec);
  }
  if (f == "ones") return Real(1L, prec);
  if (f == "delta") return Real(n == p.at ? 1L : 0L, prec);
  if (f == "pi") return Real(sieve.prime_pi(n), prec);
  if (f == "mertens") return Real(sieve.mertens(n), prec);
  if (f == "prime_indicator") return Real(sieve.is_prime(n) ? 1L : 0L, prec);
  return std::nullopt;
}

long sieve_bound_for(const std::string& f, long hi) {
  if (f == "nth_prime") {
    if (hi < 6) return 16;
    double b = hi * (std::log(hi) + std::log(std::log(hi))) + 16;
    return static_cast<long>(b);
  }
  return std::max(hi, 2L);
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::domain_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string join_row(const std::vector<std::string>& cells, const std::string& fmt) {
  std::ostringstream os;
  if (fmt == "pretty") {
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? "  " : "") << cells[i] << std::string(cells[i].size() < 14 ? 14 - cells[i].size() : 1, ' ');
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  }
  const char sep = fmt == "tsv" ? '\t' : ',';
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? std::string(1, sep) : "") << cells[i];
  return os.str();
}

int digits_for(double target) {
  int d = static_cast<int>(std::ceil(-std::log10(target))) + 2;
  return std::clamp(d, 6, 48);
}

// ---- eval ----------------------------------------------------------------

int cmd_eval(const std::string& fname, double x, const FuncParams& p, const CommonOpts& o,
             bool allow_noninteger) {
  std::string f = canonical_name(fname);
  double target = o.target > 0 ? o.target : 1e-10;
  bool integer_arg = near_integer(x);
  if (!integer_arg && !allow_noninteger)
    throw std::domain_error(
        "non-integer argument: continuation values carry no oracle claim; "
        "pass --allow-noninteger to evaluate anyway");
  NumericContext ctx = build_ctx(x, target, o);
  auto table = maybe_table(o);
  PrimeSource primes;
  EvalOutput r = eval_function(f, x, p, ctx, table ? &*table : nullptr, primes);

  int d = digits_for(target);
  std::string val = fixed_str(r.value.re, d);
  if (r.complex_valued || !r.value.im.is_zero())
    val += (r.value.im.sign() < 0 ? " - " : " + ") + fixed_str(abs(r.value.im), d) + "i";
  std::string status = integer_arg ? "certified" : "uncertified";
  if (!r.note.empty()) status += "," + r.note;

  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << fname << "(" << x << ") = " << val << " (err <= " << sci_str(r.err) << ")\n";
  os << "  terms=" << r.terms << " precision_bits=" << ctx.precision_bits << " variant="
     << variant_name(ctx.variant) << " skipped_j=[";
  for (std::size_t i = 0; i < r.skipped.size(); ++i) os << (i ? "," : "") << r.skipped[i];
  os << "] status=" << status << "\n";
  os << "result function=" << f << " x=" << x << " value=" << val << " err=" << sci_str(r.err)
     << " terms=" << r.terms << " precision_bits=" << ctx.precision_bits << " variant="
     << variant_name(ctx.variant) << " status=" << status << "\n";
  return 0;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const std::string& fname, const std::string& range, const FuncParams& p,
                const CommonOpts& o) {
  std::string f = canonical_name(fname);
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw std::domain_error("range must look like 1..40");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(range.substr(0, dots));
    hi = std::stol(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::domain_error("range must look like 1..40");
  }
  if (lo < 1 || hi < lo) throw std::domain_error("range must satisfy 1 <= lo <= hi");
  double target = o.target > 0 ? o.target : 1e-10;

  Sieve sieve(sieve_bound_for(f, hi));
  auto table = maybe_table(o);
  const ZetaTable* tbl = table ? &*table : nullptr;

  {
    FuncParams probe = p;
    if (!oracle_value(f, lo, probe, sieve, 64))
      throw std::domain_error("no exact reference for function/parameters: " + fname);
  }

  const long count = hi - lo + 1;
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(count));
  std::vector<double> residuals(static_cast<std::size_t>(count), 0.0);
  std::vector<int> honest(static_cast<std::size_t>(count), 1);
  std::vector<std::string> failures(static_cast<std::size_t>(count));
  int d = digits_for(target);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long n = lo; n <= hi; ++n) {
    std::size_t idx = static_cast<std::size_t>(n - lo);
    try {
      NumericContext ctx = build_ctx(static_cast<double>(n), target, o);
      PrimeSource primes;
      EvalOutput r = eval_function(f, static_cast<double>(n), p, ctx,
                                   tbl, primes);
      mpfr_prec_t prec = static_cast<mpfr_prec_t>(ctx.precision_bits + 64);
      Real orc = *oracle_value(f, n, p, sieve, prec);
      Real resid = abs(Complex(r.value.re - orc, r.value.im));
      residuals[idx] = resid.to_double();
      honest[idx] = resid > r.err ? 0 : 1;
      rows[idx] = {std::to_string(n), fixed_str(r.value.re, d), fixed_str(orc, d),
                   sci_str(resid), sci_str(r.err), honest[idx] ? "yes" : "no"};
    } catch (const std::exception& e) {
      residuals[idx] = std::numeric_limits<double>::infinity();
      honest[idx] = 0;
      failures[idx] = e.what();
      rows[idx] = {std::to_string(n), "nan", "nan", "inf", "inf", "no"};
    }
  }

  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << join_row({"n", "series", "oracle", "residual", "err_estimate", "honest"}, o.format)
     << "\n";
  for (const auto& row : rows) os << join_row(row, o.format) << "\n";

  double worst = 0;
  long worst_n = lo;
  bool all_honest = true;
  for (long n = lo; n <= hi; ++n) {
    std::size_t idx = static_cast<std::size_t>(n - lo);
    if (residuals[idx] > worst) {
      worst = residuals[idx];
      worst_n = n;
    }
    all_honest = all_honest && honest[idx];
  }
  bool pass = worst <= target && all_honest;
  char summary[256];
  std::snprintf(summary, sizeof summary,
                "compare function=%s range=%ld..%ld variant=%s max_residual=%.3e worst_n=%ld "
                "tolerance=%.3e honest=%s status=%s",
                f.c_str(), lo, hi, o.variant.c_str(), worst, worst_n, target,
                all_honest ? "yes" : "no", pass ? "pass" : "fail");
  os << summary << "\n";
  if (!pass) {
    std::size_t widx = static_cast<std::size_t>(worst_n - lo);
    if (!failures[widx].empty())
      std::cerr << "worst n=" << worst_n << ": " << failures[widx] << "\n";
    return 1;
  }
  return 0;
}

// ---- table -----------------------------------------------------------------

int cmd_table(const std::string& which, long x_max, const CommonOpts& o) {
  if (x_max < 1 || x_max > 75) throw std::domain_error("table supports x_max in [1, 75]");
  bool is_j = which == "J" || which == "j";
  if (!is_j && which != "dsum") throw std::domain_error("table kind must be J or dsum");
  double target = o.target > 0 ? o.target : 1e-6;

  Sieve sieve(std::max(x_max, 2L));
  auto table = maybe_table(o);
  const ZetaTable* tbl = table ? &*table : nullptr;

  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(x_max));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long x = 1; x <= x_max; ++x) {
    std::size_t idx = static_cast<std::size_t>(x - 1);
    NumericContext ctx = build_ctx(static_cast<double>(x), target, o);
    double a = is_j ? to_real(sieve.prime_power_count(x), 128).to_double()
                    : static_cast<double>(sieve.divisor_summatory(x));
    std::string actual = is_j ? fixed_str(to_real(sieve.prime_power_count(x), 128), 2)
                              : sieve.divisor_summatory(x).str();
    std::string approx, pct;
    try {
      double v = is_j ? j_exact_and_asymptotic(x, ctx, sieve, tbl).approx.value_d()
                      : dsum_exact_and_asymptotic(x, ctx, sieve, tbl).approx.value_d();
      approx = fixed_str(Real(v, 64), 2);
      double pd = a == 0 ? 0.0 : (v - a) / a * 100.0;
      char b[32];
      std::snprintf(b, sizeof b, "%.1f%%", pd);
      pct = b;
    } catch (const convergence_error& e) {
      approx = "nan";
      pct = std::string("non-convergence: ") + e.what();
      for (char& c : pct)
        if (c == ',' || c == '\t') c = ';';
    }
    rows[idx] = {std::to_string(x), actual, approx, pct};
  }

  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << join_row({"x", "actual", "approx", "pct_diff"}, o.format) << "\n";
  for (const auto& row : rows) os << join_row(row, o.format) << "\n";
  return 0;
}

// ---- plot-data -------------------------------------------------------------

int cmd_plot_data(const std::string& fname, double start, double stop, double step,
                  const FuncParams& p, const CommonOpts& o) {
  std::string f = canonical_name(fname);
  if (step <= 0) throw std::domain_error("step must be > 0");
  if (stop < start) throw std::domain_error("stop must be >= start");
  double target = o.target > 0 ? o.target : 1e-4;
  if (parse_variant(o.variant) == Variant::FourPi && stop > 20)
    std::cerr << "warning: 4pi variant above x=20 is expensive; expect long runtimes\n";

  std::vector<double> xs;
  for (double x = start; x <= stop + 1e-12; x += step)
    if (x > 1e-12) xs.push_back(x);
  if (xs.empty()) throw std::domain_error("empty range");

  long max_int = static_cast<long>(std::floor(stop + 1e-9));
  Sieve sieve(sieve_bound_for(f, std::max(max_int, 2L)));
  auto table = maybe_table(o);
  const ZetaTable* tbl = table ? &*table : nullptr;

  std::vector<std::vector<std::string>> rows(xs.size());
  int d = digits_for(target);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double x = xs[i];
    char xb[32];
    std::snprintf(xb, sizeof xb, "%.6f", x);
    std::string oracle_cell, check_cell;
    try {
      NumericContext ctx = build_ctx(x, target, o);
      PrimeSource primes;
      EvalOutput r = eval_function(f, x, p, ctx, tbl, primes);
      if (near_integer(x)) {
        auto orc = oracle_value(f, std::llround(x), p, sieve,
                                static_cast<mpfr_prec_t>(ctx.precision_bits + 64));
        if (orc) {
          Real resid = abs(Complex(r.value.re - *orc, r.value.im));
          oracle_cell = fixed_str(*orc, d);
          check_cell = resid.to_double() <= std::max(target, r.err.to_double()) ? "ok" : "FAIL";
        }
      }
      std::string val = fixed_str(r.value.re, d);
      if (r.complex_valued)
        rows[i] = {xb, val, fixed_str(r.value.im, d), sci_str(r.err), oracle_cell, check_cell};
      else
        rows[i] = {xb, val, sci_str(r.err), oracle_cell, check_cell};
    } catch (const std::exception& e) {
      std::string diag = e.what();
      for (char& c : diag)
        if (c == ',' || c == '\t' || c == '\n') c = ';';
      rows[i] = {xb, "nan", "nan", "", diag};
    }
  }

  bool complex_header = false;
  for (const auto& row : rows) complex_header = complex_header || row.size() == 6;
  Output out(o.out_path);
  std::ostream& os = out.stream();
  if (complex_header)
    os << join_row({"x", "value", "value_im", "err", "oracle", "check"}, o.format) << "\n";
  else
    os << join_row({"x", "value", "err", "oracle", "check"}, o.format) << "\n";
  for (auto& row : rows) {
    if (complex_header && row.size() == 5) row.insert(row.begin() + 2, "0");
    os << join_row(row, o.format) << "\n";
  }
  return 0;
}

// ---- cache -----------------------------------------------------------------

int cmd_cache(std::string path, long precision_bits, long j_max, long dz_j_max,
              const std::vector<long>& offsets, bool info_only) {
  if (path.empty()) {
    const char* dir = std::getenv("DIRICHLET_CACHE_DIR");
    path = (dir && *dir) ? std::string(dir) + "/default.ztab" : "default.ztab";
  }
  if (info_only) {
    ZetaTable t = load_table(path);
    std::cout << "cache file=" << path << " precision_bits=" << t.precision_bits()
              << " j_max=" << t.j_max() << " zeta_prime=" << (t.has_DZ(0) ? "yes" : "no");
    std::cout << " offsets=[";
    bool first = true;
    for (const auto& [m, column] : t.offsets()) {
      (void)column;
      std::cout << (first ? "" : ",") << m;
      first = false;
    }
    std::cout << "]\n";
    return 0;
  }
  ZetaTable::Options opt;
  opt.precision_bits = static_cast<mpfr_prec_t>(precision_bits);
  opt.j_max = j_max;
  opt.zeta_prime_j_max = dz_j_max;
  opt.offsets = offsets;
  ZetaTable t = ZetaTable::build(opt);
  std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  save_table(t, path);
  std::cout << "cache written file=" << path << " precision_bits=" << precision_bits
            << " j_max=" << j_max << " zeta_prime_j_max=" << dz_j_max
            << " offsets=" << offsets.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision Dirichlet-series inversion toolkit"};
  app.require_subcommand(1);

  std::string fname, range, which = "J";
  double x = 1, start = 0, stop = 9, step = 0.25;
  long x_max = 75;
  bool allow_noninteger = false;
  CommonOpts oe, oc, ot, op;
  FuncParams pe, pc, pp;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one argument");
  eval->add_option("function", fname, "function name")->required()
      ->check(CLI::IsMember(function_names()).description("known function"));
  eval->add_option("x", x, "argument")->required();
  eval->add_flag("--allow-noninteger", allow_noninteger,
                 "evaluate the continuation at non-integer arguments");
  add_params(eval, pe);
  add_common(eval, oe);

  CLI::App* compare = app.add_subcommand("compare", "series vs exact reference over a range");
  compare->add_option("function", fname, "function name")->required();
  compare->add_option("range", range, "integer range like 1..40")->required();
  add_params(compare, pc);
  add_common(compare, oc);

  CLI::App* table = app.add_subcommand("table", "reproduce a comparison table");
  table->add_option("which", which, "J or dsum")->required();
  table->add_option("--x-max", x_max, "last row (<= 75)");
  add_common(table, ot);

  CLI::App* plot = app.add_subcommand("plot-data", "continuation samples over a range");
  plot->add_option("function", fname, "function name")->required();
  plot->add_option("--start", start, "range start");
  plot->add_option("--stop", stop, "range stop")->required();
  plot->add_option("--step", step, "range step");
  add_params(plot, pp);
  add_common(plot, op);

  std::string cache_path;
  long cache_bits = 1536, cache_jmax = 256, cache_dz = 256;
  std::vector<long> cache_offsets;
  bool cache_info = false;
  CLI::App* cache = app.add_subcommand("cache", "build or inspect a zeta table cache");
  cache->add_option("path", cache_path, "cache file (default: $DIRICHLET_CACHE_DIR/default.ztab)");
  cache->add_option("--precision-bits", cache_bits, "table precision");
  cache->add_option("--j-max", cache_jmax, "largest tabulated index");
  cache->add_option("--zeta-prime-j-max", cache_dz, "derivative records up to this index (-1 off)");
  cache->add_option("--offset", cache_offsets, "extra integer shifts m for zeta(2j+m)");
  cache->add_flag("--info", cache_info, "print header of an existing cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are domain errors; --help stays 0
  }

  try {
    if (eval->parsed()) return cmd_eval(fname, x, pe, oe, allow_noninteger);
    if (compare->parsed()) return cmd_compare(fname, range, pc, oc);
    if (table->parsed()) return cmd_table(which, x_max, ot);
    if (plot->parsed()) return cmd_plot_data(fname, start, stop, step, pp, op);
    if (cache->parsed()) return cmd_cache(cache_path, cache_bits, cache_jmax, cache_dz,
                                          cache_offsets, cache_info);
  } catch (const convergence_error& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
