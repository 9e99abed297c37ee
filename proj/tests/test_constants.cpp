#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dirichlet/functions.hpp"
#include "dirichlet/zeta_table.hpp"

using namespace dirichlet;

namespace {

ZetaTable small_table() {
  ZetaTable::Options opt;
  opt.j_max = 8;
  opt.precision_bits = 256;
  opt.zeta_prime_j_max = 2;
  opt.offsets = {-1, 3};
  return ZetaTable::build(opt);
}

std::string temp_path(const char* name) {
  return std::string("/tmp/dirichlet_test_") + name + "_" + std::to_string(getpid()) + ".ztab";
}

bool bit_equal(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

}  // namespace

TEST_CASE("table entries match the direct evaluators", "[constants]") {
  ZetaTable t = small_table();
  mpfr_prec_t p = t.precision_bits();

  CHECK(t.j_max() == 8);
  CHECK(t.Z(0).to_double() == -0.5);
  for (long j = 0; j <= 8; ++j) {
    CHECK(t.B(j) == bernoulli(2 * j));
    CHECK(bit_equal(t.Z(j), zeta_even(j, p)));
  }
  for (long j = 0; j <= 8; ++j)
    CHECK(abs(t.IZ(j) * t.Z(j) - 1L).to_double() < std::ldexp(1.0, 4 - static_cast<int>(p)));
  for (long j = 1; j <= 8; ++j)
    CHECK(abs(exp(t.LZ(j)) - t.Z(j)).to_double() < std::ldexp(1.0, 8 - static_cast<int>(p)));
  CHECK_THROWS_AS(t.LZ(0), std::domain_error);

  CHECK(t.has_DZ(2));
  CHECK_FALSE(t.has_DZ(3));
  for (long j = 0; j <= 2; ++j)
    CHECK(abs(t.DZ(j) - zeta_derivative(Real(2 * j, p), 1, p)).to_double() < 1e-70);

  // offset m = -1 covers odd arguments; 2j - 1 = 1 is the pole slot
  CHECK(t.has_offset(-1));
  CHECK(t.ZOFF(-1, 1).is_nan());
  CHECK(abs(t.ZOFF(-1, 2) - zeta_int(3, p)).to_double() < 1e-70);
  CHECK(abs(t.ZOFF(3, 0) - zeta_int(3, p)).to_double() < 1e-70);
  CHECK_FALSE(t.has_offset(5));
  CHECK_THROWS_AS(t.ZOFF(5, 1), std::domain_error);

  CHECK_THROWS_AS(t.Z(9), std::domain_error);
  CHECK_THROWS_AS(t.Z(-1), std::domain_error);
}

TEST_CASE("save and load round-trip is bit exact", "[constants]") {
  ZetaTable t = small_table();
  std::string path = temp_path("roundtrip");
  save_table(t, path);
  ZetaTable u = load_table(path);

  CHECK(u.j_max() == t.j_max());
  CHECK(u.precision_bits() == t.precision_bits());
  for (long j = 0; j <= t.j_max(); ++j) {
    CHECK(u.B(j) == t.B(j));
    CHECK(bit_equal(u.Z(j), t.Z(j)));
    CHECK(bit_equal(u.IZ(j), t.IZ(j)));
    if (j >= 1) CHECK(bit_equal(u.LZ(j), t.LZ(j)));
  }
  for (long j = 0; j <= 2; ++j) CHECK(bit_equal(u.DZ(j), t.DZ(j)));
  CHECK(u.ZOFF(-1, 1).is_nan());
  CHECK(bit_equal(u.ZOFF(-1, 3), t.ZOFF(-1, 3)));
  CHECK(bit_equal(u.ZOFF(3, 2), t.ZOFF(3, 2)));
  std::remove(path.c_str());
}

TEST_CASE("corrupted cache files are rejected", "[constants]") {
  ZetaTable t = small_table();
  std::string path = temp_path("corrupt");
  save_table(t, path);

  std::stringstream buf;
  {
    std::ifstream in(path);
    buf << in.rdbuf();
  }
  std::string text = buf.str();
  std::size_t at = text.rfind("Z 4 ");
  REQUIRE(at != std::string::npos);
  text[at + 6] = text[at + 6] == '5' ? '6' : '5';
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  CHECK_THROWS_WITH(load_table(path), Catch::Matchers::ContainsSubstring("checksum"));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_table("/tmp/no_such_dir_xyz/none.ztab"), std::runtime_error);
}

TEST_CASE("precision floor on load is enforced", "[constants]") {
  ZetaTable t = small_table();
  std::string path = temp_path("floor");
  save_table(t, path);
  CHECK_THROWS_WITH(load_table(path, 512),
                    Catch::Matchers::ContainsSubstring("insufficient precision"));
  CHECK_NOTHROW(load_table(path, 256));
  std::remove(path.c_str());
}

TEST_CASE("series values are unchanged by a table", "[constants]") {
  ZetaTable::Options opt;
  opt.j_max = 96;
  opt.precision_bits = 512;
  ZetaTable t = ZetaTable::build(opt);

  for (double n : {6.0, 9.0}) {
    NumericContext ctx = make_context(n, 1e-10);
    SeriesResult plain = moebius(n, ctx);
    SeriesResult cached = moebius(n, ctx, &t);
    CHECK(abs(plain.value.re - cached.value.re).to_double() < 2e-10);
    CHECK(plain.outer_terms_used == cached.outer_terms_used);
  }
}

TEST_CASE("table reads are deterministic", "[constants]") {
  ZetaTable t = small_table();
  detail::ZetaView view{&t};
  Real a = view.log_even(3, 128);
  Real b = view.log_even(3, 128);
  CHECK(bit_equal(a, b));
  CHECK(bit_equal(view.inv_even(2, 128), view.inv_even(2, 128)));

  // beyond the table the view falls back to direct evaluation
  Real far = view.even(20, 128);
  CHECK(abs(far - zeta_even(20, 130)).to_double() < std::ldexp(1.0, -120));
}
