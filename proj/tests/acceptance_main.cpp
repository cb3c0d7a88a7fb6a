// Acceptance driver: runs every verification criterion and prints one
// pass/fail line each.  Exit code is the number of failing criteria.
#include <cstdio>

#include "weylchar/verify.hpp"

int main() {
  const auto results =
      weylchar::run_verification_suite(weylchar::VerifyOptions{});
  int failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    std::printf("[%s] %-26s (%7.2f s)  %s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures;
}
