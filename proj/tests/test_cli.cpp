#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DIRICHLET_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string temp_name(const char* tag) {
  return std::string("/tmp/dirichlet_cli_") + tag + "_" + std::to_string(getpid());
}

}  // namespace

TEST_CASE("eval certifies integer points", "[cli]") {
  RunResult r = run("eval moebius 30");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "status=certified"));
  CHECK(contains(r.out, "value=-0.99999999"));
  CHECK(contains(r.out, "err="));

  r = run("eval pi 9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "value=4.0000000"));
}

TEST_CASE("eval guards non-integer arguments behind a flag", "[cli]") {
  RunResult r = run("eval moebius 0.5");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "--allow-noninteger"));

  r = run("eval moebius 0.5 --allow-noninteger");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "status=uncertified"));
}

TEST_CASE("eval reports failure modes through exit codes", "[cli]") {
  CHECK(run("eval moebius 30 --terms-cap 2").exit_code == 3);
  CHECK(run("eval no_such_function 5").exit_code == 2);
  CHECK(run("eval moebius 30 --variant 3pi").exit_code != 0);
  CHECK(run("eval delta 2.5 --at 3").exit_code == 2);
  CHECK(run("eval zeta_power 4 --w bogus").exit_code == 2);
}

TEST_CASE("eval handles parameterized functions", "[cli]") {
  RunResult r = run("eval sigma 6 --m 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "value=12.0000000"));

  r = run("eval zeta_power 8 --w 0,1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "value=-0.5000000"));
  CHECK(contains(r.out, "0.166666666"));

  r = run("eval nth_prime 5 --target-error 1e-8");
  CHECK(r.exit_code == 0);
  CHECK((contains(r.out, "value=10.99999") || contains(r.out, "value=11.0000")));
}

TEST_CASE("compare pits the series against the sieve", "[cli]") {
  RunResult r = run("compare moebius 1..20");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "status=pass"));
  CHECK(contains(r.out, "honest=yes"));
  CHECK(contains(r.out, "n,series,oracle,residual,err_estimate,honest"));

  // a starved run must be surfaced as a failure, not a silent pass
  r = run("compare moebius 1..20 --terms-cap 3");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "status=fail"));
}

TEST_CASE("reference tables are reproduced", "[cli]") {
  RunResult r = run("table J --x-max 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "x,actual,approx,pct_diff"));
  CHECK(contains(r.out, "2,1.00,1.06,"));

  r = run("table dsum --x-max 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "1,1,1.16,"));
  CHECK(contains(r.out, "3,5,5.23,"));

  CHECK(run("table J --x-max 76").exit_code == 2);
  CHECK(run("table bogus --x-max 5").exit_code == 2);
}

TEST_CASE("plot data carries an embedded self check", "[cli]") {
  RunResult r = run("plot-data moebius --stop 3 --step 0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "x,value,err,oracle,check"));
  CHECK(contains(r.out, ",ok"));
  CHECK_FALSE(contains(r.out, "FAIL"));

  // starved rows degrade to nan + diagnostic but the sweep continues
  r = run("plot-data moebius --start 1 --stop 12 --step 1 --terms-cap 40");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "nan"));
  CHECK(contains(r.out, "12.000000"));
}

TEST_CASE("cache lifecycle", "[cli]") {
  std::string path = temp_name("cache") + ".ztab";

  RunResult r = run("cache " + path + " --precision-bits 256 --j-max 16");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cache written"));

  r = run("cache " + path + " --info");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "precision_bits=256"));
  CHECK(contains(r.out, "j_max=16"));

  r = run("eval moebius 6 --cache " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "status=certified"));

  {
    std::ofstream f(path, std::ios::app);
    f << "Z 3 deadbeef\n";
  }
  CHECK(run("eval moebius 6 --cache " + path).exit_code == 2);
  CHECK(run("cache " + path + " --info").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("output lands in a file when requested", "[cli]") {
  std::string path = temp_name("out") + ".csv";
  RunResult r = run("table dsum --x-max 2 --out " + path);
  CHECK(r.exit_code == 0);

  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(contains(buf.str(), "x,actual,approx,pct_diff"));
  CHECK(contains(buf.str(), "1,1,1.16,"));
  CHECK(contains(buf.str(), "2,3,3.21,"));
  std::remove(path.c_str());
}

TEST_CASE("tsv format switches the delimiter", "[cli]") {
  RunResult r = run("compare moebius 1..3 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n\tseries\toracle"));
}
