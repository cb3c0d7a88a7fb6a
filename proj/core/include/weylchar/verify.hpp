#ifndef WEYLCHAR_VERIFY_HPP
#define WEYLCHAR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weylchar {

struct CriterionResult {
  std::string name;
  bool passed;
  double seconds;
  std::string detail;  // failure explanation, or a short success summary
};

struct VerifyOptions {
  /// Restrict criteria that sweep over several primes to this prime.
  /// Criteria pinned to a specific prime always run as stated.
  std::optional<std::uint64_t> prime;
  /// Run only the criterion with this name (empty = all).
  std::string only;
};

/// The built-in verification battery: exact identities and randomized
/// property suites covering normal forms, centers, endomorphism kernels,
/// growth tables, dependence decisions and rectification.  Each criterion
/// is deterministic (fixed seeds) and returns pass/fail with timing.
std::vector<CriterionResult> run_verification_suite(const VerifyOptions& opt);

/// Names of all criteria, in execution order.
std::vector<std::string> verification_criteria();

}  // namespace weylchar

#endif  // WEYLCHAR_VERIFY_HPP
