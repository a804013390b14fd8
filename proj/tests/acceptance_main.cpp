// Acceptance gate: one pass/fail line per criterion; exit code is the
// number of failures.
#include <cstdio>
#include <string>

#include "ceit/checks.hpp"

int main(int argc, char** argv) {
  ceit::CheckOptions opt;
  bool allow_known = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") opt.quick = true;
    // Known-limit failures (criterion targets shown to be unreachable within
    // the model equations; see the per-line detail) still print as FAIL but
    // do not count toward the exit code.
    if (arg == "--allow-known-failures") allow_known = true;
  }

  int failures = 0, known = 0;
  for (const auto& r : ceit::run_all_checks(opt)) {
    std::printf("[%s] %s%s%s\n",
                r.pass ? "PASS" : (r.known_limit ? "FAIL:known-limit" : "FAIL"),
                r.name.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) {
      if (r.known_limit) ++known;
      if (!(allow_known && r.known_limit)) ++failures;
    }
  }
  std::printf("%d criterion failure(s)", failures);
  if (allow_known && known > 0)
    std::printf(" (%d known-limit failure(s) reported but not counted)", known);
  std::printf("\n");
  return failures;
}
