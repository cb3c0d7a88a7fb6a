#ifndef WEYLCHAR_GUARD_HPP
#define WEYLCHAR_GUARD_HPP

#include <cstddef>

namespace weylchar {

/// Term-count explosion guard.  Computations that would store more than
/// this many monomials in a single element (or basis) raise ComputeError;
/// there is no silent truncation.  The CLI wires WEYLCHAR_MAX_TERMS to
/// set_max_term_count().
std::size_t max_term_count();
void set_max_term_count(std::size_t limit);

/// Throws ComputeError when count exceeds the configured limit.
void ensure_term_count(std::size_t count);

}  // namespace weylchar

#endif  // WEYLCHAR_GUARD_HPP
