#ifndef DIRICHLET_ZETA_TABLE_HPP
#define DIRICHLET_ZETA_TABLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirichlet/bernoulli.hpp"
#include "dirichlet/context.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/real.hpp"
#include "dirichlet/zeta.hpp"

namespace dirichlet {
namespace detail {

inline std::uint32_t crc32_bytes(const std::string& data) {
  static const std::array<std::uint32_t, 256> table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t crc = 0xFFFFFFFFu;
  for (unsigned char ch : data) crc = table[(crc ^ ch) & 0xFFu] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

// decimal digits that guarantee binary -> decimal -> binary identity
inline std::size_t roundtrip_digits(mpfr_prec_t p) {
  return static_cast<std::size_t>(std::ceil(p * 0.30103)) + 4;
}

inline std::string real_record(const Real& x, mpfr_prec_t p) {
  if (x.is_zero()) return "+ 0 e 0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, roundtrip_digits(p), x.raw(), MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign = "+";
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  return sign + " " + mant + " e " + std::to_string(static_cast<long long>(e));
}

inline Real parse_real_record(const std::string& sign, const std::string& mant, long long e,
                              mpfr_prec_t p) {
  if (mant == "0") return Real(0L, p);
  Real r((sign == "-" ? "-0." : "0.") + mant + "e" + std::to_string(e), p);
  return r;
}

}  // namespace detail

// Precomputed zeta-derived constants shared by the series evaluators.
// Immutable after construction; concurrent readers are safe.
class ZetaTable {
public:
  struct Options {
    long j_max = 64;
    mpfr_prec_t precision_bits = 256;
    bool inverse = true;
    bool log = true;
    long zeta_prime_j_max = -1;  // DZ for j = 0..this; -1 disables
    std::vector<long> offsets;   // integer shifts m: store zeta(2j + m)
  };

  long j_max() const { return j_max_; }
  mpfr_prec_t precision_bits() const { return prec_; }

  const Rational& B(long j) const {
    check(j, "B");
    return b_[static_cast<std::size_t>(j)];
  }
  const Real& Z(long j) const {
    check(j, "Z");
    return z_[static_cast<std::size_t>(j)];
  }
  bool has_IZ() const { return !iz_.empty(); }
  const Real& IZ(long j) const {
    check(j, "IZ");
    if (iz_.empty()) throw std::domain_error("ZetaTable: inverse array not built");
    return iz_[static_cast<std::size_t>(j)];
  }
  bool has_LZ() const { return !lz_.empty(); }
  const Real& LZ(long j) const {
    check(j, "LZ");
    if (lz_.empty()) throw std::domain_error("ZetaTable: log array not built");
    if (j == 0) throw std::domain_error("ZetaTable: log zeta undefined at j = 0");
    return lz_[static_cast<std::size_t>(j)];
  }
  bool has_DZ(long j) const { return j >= 0 && j < static_cast<long>(dz_.size()); }
  const Real& DZ(long j) const {
    if (!has_DZ(j)) throw std::domain_error("ZetaTable: derivative entry not built");
    return dz_[static_cast<std::size_t>(j)];
  }
  bool has_offset(long m) const { return zoff_.count(m) != 0; }
  // zeta(2j + m); NaN marks the pole 2j + m = 1
  const Real& ZOFF(long m, long j) const {
    auto it = zoff_.find(m);
    if (it == zoff_.end()) throw std::domain_error("ZetaTable: offset array not built");
    check(j, "ZOFF");
    return it->second[static_cast<std::size_t>(j)];
  }
  const std::map<long, std::vector<Real>>& offsets() const { return zoff_; }

  static ZetaTable build(const Options& opt) {
    if (opt.j_max < 0) throw std::domain_error("ZetaTable: j_max must be >= 0");
    if (opt.precision_bits > max_precision_bits)
      throw std::domain_error("ZetaTable: precision exceeds ceiling");
    ZetaTable t;
    t.j_max_ = opt.j_max;
    t.prec_ = opt.precision_bits;
    mpfr_prec_t p = t.prec_;
    std::size_t count = static_cast<std::size_t>(opt.j_max) + 1;
    t.b_.reserve(count);
    t.z_.reserve(count);
    for (long j = 0; j <= opt.j_max; ++j) {
      t.b_.push_back(bernoulli(2 * j));
      t.z_.push_back(zeta_even(j, p));
    }
    if (opt.inverse) {
      t.iz_.reserve(count);
      for (long j = 0; j <= opt.j_max; ++j) t.iz_.push_back(1L / t.z_[j]);
    }
    if (opt.log) {
      t.lz_.reserve(count);
      t.lz_.push_back(Real::nan(p));
      for (long j = 1; j <= opt.j_max; ++j) t.lz_.push_back(log_zeta_even(j, p));
    }
    // the serialized form indexes every column by j <= j_max
    for (long j = 0; j <= std::min(opt.zeta_prime_j_max, opt.j_max); ++j)
      t.dz_.push_back(zeta_derivative(Real(2 * j, p), 1, p));
    for (long m : opt.offsets) {
      if (t.zoff_.count(m)) continue;
      std::vector<Real> col;
      col.reserve(count);
      for (long j = 0; j <= opt.j_max; ++j) {
        long s = 2 * j + m;
        col.push_back(s == 1 ? Real::nan(p) : zeta_int(s, p));
      }
      t.zoff_.emplace(m, std::move(col));
    }
    return t;
  }

  // serialized body (everything after the header line)
  std::string body() const {
    std::ostringstream os;
    for (long j = 0; j <= j_max_; ++j) {
      const Rational& b = b_[static_cast<std::size_t>(j)];
      bool neg = b < 0;
      Rational a = neg ? Rational(-b) : b;
      os << "B " << j << " " << (neg ? '-' : '+') << " " << a.str() << " e 0\n";
    }
    auto put = [&](const char* kind, long j, const Real& x) {
      if (x.is_nan()) return;
      os << kind << " " << j << " " << detail::real_record(x, prec_) << "\n";
    };
    for (long j = 0; j <= j_max_; ++j) put("Z", j, z_[static_cast<std::size_t>(j)]);
    for (std::size_t j = 0; j < iz_.size(); ++j) put("IZ", static_cast<long>(j), iz_[j]);
    for (std::size_t j = 0; j < lz_.size(); ++j) put("LZ", static_cast<long>(j), lz_[j]);
    for (std::size_t j = 0; j < dz_.size(); ++j) put("DZ", static_cast<long>(j), dz_[j]);
    for (const auto& [m, col] : zoff_) {
      std::string kind = "ZOFF(" + std::to_string(m) + ")";
      for (std::size_t j = 0; j < col.size(); ++j) put(kind.c_str(), static_cast<long>(j), col[j]);
    }
    return os.str();
  }

  friend ZetaTable load_table(const std::string& path, mpfr_prec_t min_precision_bits);

private:
  void check(long j, const char* what) const {
    if (j < 0 || j > j_max_)
      throw std::domain_error(std::string("ZetaTable: ") + what + " index out of range");
  }

  long j_max_ = -1;
  mpfr_prec_t prec_ = 0;
  std::vector<Rational> b_;
  std::vector<Real> z_, iz_, lz_, dz_;
  std::map<long, std::vector<Real>> zoff_;
};

inline void save_table(const ZetaTable& t, const std::string& path) {
  std::string body = t.body();
  std::uint32_t crc = detail::crc32_bytes(body);
  char head[96];
  std::snprintf(head, sizeof head, "ZTAB v1 %ld %ld %08x\n",
                static_cast<long>(t.precision_bits()), t.j_max(), crc);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_table: cannot open " + path);
  out << head << body;
  if (!out.good()) throw std::runtime_error("save_table: write failed for " + path);
}

inline ZetaTable load_table(const std::string& path, mpfr_prec_t min_precision_bits = 0) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_table: cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("load_table: empty file " + path);
  std::istringstream hs(header);
  std::string magic, version, crc_hex;
  long prec = 0, j_max = -1;
  hs >> magic >> version >> prec >> j_max >> crc_hex;
  if (!hs || magic != "ZTAB") throw std::runtime_error("load_table: not a ZTAB file: " + path);
  if (version != "v1")
    throw std::runtime_error("load_table: unsupported version " + version + " in " + path);
  if (prec <= 0 || j_max < 0) throw std::runtime_error("load_table: malformed header in " + path);
  if (prec < static_cast<long>(min_precision_bits))
    throw std::runtime_error("load_table: insufficient precision: file has " +
                             std::to_string(prec) + " bits, " +
                             std::to_string(static_cast<long>(min_precision_bits)) +
                             " required");
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::uint32_t want = 0;
  try {
    want = static_cast<std::uint32_t>(std::stoul(crc_hex, nullptr, 16));
  } catch (const std::exception&) {
    throw std::runtime_error("load_table: malformed checksum in " + path);
  }
  if (detail::crc32_bytes(body) != want)
    throw std::runtime_error("load_table: checksum mismatch in " + path);

  ZetaTable t;
  t.j_max_ = j_max;
  t.prec_ = static_cast<mpfr_prec_t>(prec);
  std::size_t count = static_cast<std::size_t>(j_max) + 1;
  t.b_.assign(count, Rational(0));
  t.z_.assign(count, Real::nan(t.prec_));

  std::istringstream bs(body);
  std::string line;
  while (std::getline(bs, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind, sign, mant, e_mark;
    long idx = -1;
    long long e = 0;
    ls >> kind >> idx >> sign >> mant >> e_mark >> e;
    if (!ls || e_mark != "e" || (sign != "+" && sign != "-") || idx < 0 ||
        idx > j_max)
      throw std::runtime_error("load_table: malformed record in " + path + ": " + line);
    std::size_t i = static_cast<std::size_t>(idx);
    if (kind == "B") {
      Rational r(mant);
      mpq_canonicalize(r.backend().data());
      t.b_[i] = sign == "-" ? Rational(-r) : r;
    } else if (kind == "Z") {
      t.z_[i] = detail::parse_real_record(sign, mant, e, t.prec_);
    } else if (kind == "IZ") {
      if (t.iz_.empty()) t.iz_.assign(count, Real::nan(t.prec_));
      t.iz_[i] = detail::parse_real_record(sign, mant, e, t.prec_);
    } else if (kind == "LZ") {
      if (t.lz_.empty()) t.lz_.assign(count, Real::nan(t.prec_));
      t.lz_[i] = detail::parse_real_record(sign, mant, e, t.prec_);
    } else if (kind == "DZ") {
      if (static_cast<std::size_t>(idx) >= t.dz_.size())
        t.dz_.resize(i + 1, Real::nan(t.prec_));
      t.dz_[i] = detail::parse_real_record(sign, mant, e, t.prec_);
    } else if (kind.rfind("ZOFF(", 0) == 0 && kind.back() == ')') {
      long m = 0;
      try {
        m = std::stol(kind.substr(5, kind.size() - 6));
      } catch (const std::exception&) {
        throw std::runtime_error("load_table: malformed offset kind in " + path + ": " + kind);
      }
      auto [it, fresh] = t.zoff_.try_emplace(m);
      if (fresh) it->second.assign(count, Real::nan(t.prec_));
      it->second[i] = detail::parse_real_record(sign, mant, e, t.prec_);
    } else {
      throw std::runtime_error("load_table: unknown record kind in " + path + ": " + kind);
    }
  }
  return t;
}

}  // namespace dirichlet

#endif  // DIRICHLET_ZETA_TABLE_HPP
