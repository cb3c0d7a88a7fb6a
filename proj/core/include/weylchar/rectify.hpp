#ifndef WEYLCHAR_RECTIFY_HPP
#define WEYLCHAR_RECTIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "weylchar/element.hpp"

namespace weylchar {

/// Proportionality witness for homogeneous forms: a^q = f * b^r with
/// gcd(q, r) = 1.
struct DependenceWitness {
  FpScalar f;
  std::uint64_t q;
  std::uint64_t r;
};

/// Decides algebraic dependence of two nonzero homogeneous commutative
/// forms.  With d = gcd(deg a, deg b), the forms are dependent exactly when
/// a^{deg(b)/d} and b^{deg(a)/d} are scalar-proportional; the witness
/// carries that scalar and the coprime exponent pair.  Constants are
/// dependent on everything.  Returns nullopt for an independent pair.
std::optional<DependenceWitness> homogeneous_dependent(const PolyElement& a,
                                                       const PolyElement& b);

/// One replacement step of the rectification loop; def is the commutation
/// defect of the replaced pair.
struct RectifyStep {
  int step;
  std::uint64_t q;
  std::uint64_t r;
  std::uint64_t k;
  std::uint64_t s;
  FpScalar f1;
  std::uint64_t def;
  bool swapped;  // roles of u and v were exchanged before this step
};

struct RectifyResult {
  enum class Status { rectified, cap_exceeded };
  Status status;
  WeylElement u;
  WeylElement v;
  std::vector<RectifyStep> log;
  // word lengths of the final pair in the original generators
  std::uint64_t word_length_u = 1;
  std::uint64_t word_length_v = 1;

  bool rectified() const { return status == Status::rectified; }
};

/// Rectification loop: while the leading forms of (u, v) are algebraically
/// dependent with witness u^q = f v^r (roles swapped if p divides q), pick
/// the minimal k >= 1 with kp + 1 = 0 mod q, set s = (kp+1) deg(u) / deg(v)
/// and f_1 by coefficient matching, and replace u by u^{kp+1} - f_1 v^s.
/// Every step strictly decreases the commutation defect and preserves
/// [u, v] != 0, so the loop ends with algebraically independent leading
/// forms unless a cap is hit first.  Requires [u, v] != 0.
RectifyResult rectify_pair(WeylElement u, WeylElement v, int max_steps = 16,
                           std::uint64_t max_degree = 512);

}  // namespace weylchar

#endif  // WEYLCHAR_RECTIFY_HPP
