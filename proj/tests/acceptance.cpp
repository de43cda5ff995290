#include <chrono>
#include <cstdio>
#include <string>

#include "wronski/harness.hpp"

int main() {
  using namespace wronski::harness;
  const SuiteOptions opt;
  int failed = 0;
  for (int c = 1; c <= 13; ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    int pass = 0;
    int fail = 0;
    std::string first_failure;
    run_criterion(c, opt, [&](const VerificationRecord& r) {
      if (r.pass) {
        ++pass;
      } else {
        if (fail++ == 0) first_failure = r.claim + " " + r.parameters.dump();
      }
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = fail == 0 && pass > 0;
    if (!ok) ++failed;
    std::printf("criterion %2d %s  %-40s %4d/%-4d records  %.1fs%s%s\n", c, ok ? "PASS" : "FAIL", criterion_title(c).c_str(), pass, pass + fail,
                secs, first_failure.empty() ? "" : "  first failure: ", first_failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}
