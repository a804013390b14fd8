#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

#ifndef CEIT_CLI_PATH
#error "CEIT_CLI_PATH must point at the built CLI binary"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CEIT_CLI_PATH) + " " + args +
                          " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ceit-cli-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("spectrum: schema, determinism, engine selection") {
  const fs::path dir = fresh_dir("spectrum");
  const std::string base =
      "spectrum --set u0=8 --range -1.2,0.4 --resolution 17 --engines mfa,qme"
      " --out " + dir.string();
  REQUIRE(run(base) == 0);
  REQUIRE(fs::exists(dir / "spectrum.csv"));
  REQUIRE(fs::exists(dir / "spectrum.svg"));

  const std::string first = slurp(dir / "spectrum.csv");
  const auto lines = lines_of(first);
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "engine,axis_value,branch_index,n_s,T_a,stable,g2_0,status");
  int mfa = 0, qme = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("mfa,", 0) == 0) ++mfa;
    if (lines[i].rfind("qme,", 0) == 0) ++qme;
  }
  CHECK(mfa >= 17);  // multivalued points emit one row per branch
  CHECK(qme == 17);

  // Byte-identical rerun, also with a different thread partition.
  REQUIRE(run(base) == 0);
  CHECK(slurp(dir / "spectrum.csv") == first);
  REQUIRE(run(base + " --set threads=3") == 0);
  CHECK(slurp(dir / "spectrum.csv") == first);

  // MFA-only drops the qme rows.
  const fs::path dir2 = fresh_dir("spectrum-mfa");
  REQUIRE(run("spectrum --set u0=8 --range -1.2,0.4 --resolution 17 "
              "--engines mfa --out " + dir2.string()) == 0);
  for (const auto& line : lines_of(slurp(dir2 / "spectrum.csv"))) {
    CHECK(line.rfind("qme,", 0) != 0);
  }
}

TEST_CASE("spectrum honors --g-units") {
  const fs::path a = fresh_dir("gunits-a");
  const fs::path b = fresh_dir("gunits-b");
  REQUIRE(run("spectrum --set u0=2 --set omega=0.35 --g-units "
              "--range -1,0 --resolution 5 --engines mfa --out " +
              a.string()) == 0);
  REQUIRE(run("spectrum --set u0=8 --set omega=1.4 "
              "--range -1,0 --resolution 5 --engines mfa --out " +
              b.string()) == 0);
  CHECK(slurp(a / "spectrum.csv") == slurp(b / "spectrum.csv"));
}

TEST_CASE("scurve: hysteresis artifact and zero-width range rejection") {
  const fs::path dir = fresh_dir("scurve");
  REQUIRE(run("scurve --set u0=8 --set delta_c=-0.48 --range 0.02,0.3 "
              "--resolution 41 --engines mfa --out " + dir.string()) == 0);
  REQUIRE(fs::exists(dir / "scurve.csv"));
  REQUIRE(fs::exists(dir / "scurve_hysteresis.csv"));
  const auto lines = lines_of(slurp(dir / "scurve_hysteresis.csv"));
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "direction,axis_value,n_s,jump");
  int up = 0, down = 0, jumps = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("up,", 0) == 0) ++up;
    if (lines[i].rfind("down,", 0) == 0) ++down;
    if (lines[i].size() >= 2 && lines[i].substr(lines[i].size() - 2) == ",1")
      ++jumps;
  }
  CHECK(up == 41);
  CHECK(down == 41);
  CHECK(jumps == 2);  // one fold jump per direction

  CHECK(run("scurve --range 0.1,0.1 --out " + dir.string()) == 1);
}

TEST_CASE("phase: schema and flag column") {
  const fs::path dir = fresh_dir("phase");
  REQUIRE(run("phase --set eta=0.6 --range -2,8,0,24 --resolution 25,25 "
              "--out " + dir.string()) == 0);
  const auto lines = lines_of(slurp(dir / "phase.csv"));
  REQUIRE(lines.size() == 1 + 25 * 25);
  CHECK(lines[0] == "x,y,n_solutions,n_stable,n_s_lowest,flag");
  REQUIRE(fs::exists(dir / "phase.svg"));
}

TEST_CASE("g2tau: monotone grid written with final factorization") {
  const fs::path dir = fresh_dir("g2tau");
  REQUIRE(run("g2tau --set tau_max=10 --set tau_points=21 --out " +
              dir.string()) == 0);
  const auto lines = lines_of(slurp(dir / "g2.csv"));
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "tau,g2");
}

TEST_CASE("config errors exit 1") {
  const fs::path dir = fresh_dir("errors");
  CHECK(run("spectrum --set bogus_key=1 --out " + dir.string()) == 1);
  CHECK(run("spectrum --set eta=-0.5 --out " + dir.string()) == 1);
  CHECK(run("spectrum --resolution 1,2,3 --out " + dir.string()) == 1);
  CHECK(run("spectrum --range 1 --out " + dir.string()) == 1);
  CHECK(run("bogus-subcommand") == 1);
}

TEST_CASE("solver failures exit 2") {
  const fs::path dir = fresh_dir("solverfail");
  // Drive so strong the cutoff cap is exceeded at once.
  CHECK(run("g2tau --set eta=0.6 --set cutoff_start=2 --set cutoff_cap=4 "
            "--out " + dir.string()) == 2);
}

TEST_CASE("validate: quick suite passes, fault injection is detected") {
  CHECK(run("validate --quick") == 0);
  CHECK(run("validate --quick --inject-coeff-fault") == 1);
}
