#include "weylchar/guard.hpp"

#include <atomic>
#include <string>

#include "weylchar/errors.hpp"

namespace weylchar {

namespace {
std::atomic<std::size_t> g_max_terms{8'000'000};
}

std::size_t max_term_count() { return g_max_terms.load(); }

void set_max_term_count(std::size_t limit) {
  g_max_terms.store(limit == 0 ? 1 : limit);
}

void ensure_term_count(std::size_t count) {
  const std::size_t limit = g_max_terms.load();
  if (count > limit) {
    throw ComputeError("term count " + std::to_string(count) +
                       " exceeds the configured limit of " +
                       std::to_string(limit));
  }
}

}  // namespace weylchar
