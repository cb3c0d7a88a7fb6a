#include "weylchar/monomial.hpp"

#include <limits>

namespace weylchar {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw ComputeError("exponent overflow in 64-bit arithmetic");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw ComputeError("exponent overflow in 64-bit arithmetic");
  }
  return a * b;
}

}  // namespace weylchar
