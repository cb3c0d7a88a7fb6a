#ifndef WEYLCHAR_MONOMIAL_HPP
#define WEYLCHAR_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "weylchar/errors.hpp"
#include "weylchar/fp.hpp"

namespace weylchar {

/// The ambient algebra: n generator pairs over F_p.
struct AlgebraSignature {
  int n;
  Prime p;

  AlgebraSignature(int n_, Prime p_) : n(n_), p(p_) {
    if (n < 1) throw UsageError("algebra rank n must be >= 1");
  }

  friend bool operator==(const AlgebraSignature& a,
                         const AlgebraSignature& b) {
    return a.n == b.n && a.p == b.p;
  }
  friend bool operator!=(const AlgebraSignature& a,
                         const AlgebraSignature& b) {
    return !(a == b);
  }
};

/// One of the 2n generators x_i, y_i (1-based index).
struct Generator {
  enum class Kind { x, y };
  Kind kind;
  int index;

  static Generator x(int i) { return {Kind::x, i}; }
  static Generator y(int i) { return {Kind::y, i}; }

  /// Position in the interleaved exponent vector (j_1, i_1, j_2, i_2, ...).
  int slot() const {
    return 2 * (index - 1) + (kind == Generator::Kind::x ? 1 : 0);
  }

  std::string name() const {
    return (kind == Kind::x ? "x" : "y") + std::to_string(index);
  }

  friend bool operator==(Generator a, Generator b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Exponent vector of length 2n, interleaved as (j_1, i_1, ..., j_n, i_n),
/// encoding the basis word y_1^{j_1} x_1^{i_1} ... y_n^{j_n} x_n^{i_n}.
///
/// Ordering: by total degree first, then lexicographically with
/// y_1 >> x_1 >> y_2 >> x_2 >> ...
class PBWMonomial {
 public:
  explicit PBWMonomial(int n) : exps_(2 * static_cast<std::size_t>(n), 0) {}

  explicit PBWMonomial(std::vector<std::uint64_t> exps)
      : exps_(std::move(exps)) {
    if (exps_.empty() || exps_.size() % 2 != 0) {
      throw UsageError("exponent vector must have even positive length");
    }
    recompute_degree();
  }

  static PBWMonomial unit(int n) { return PBWMonomial(n); }

  static PBWMonomial generator(int n, Generator g, std::uint64_t e = 1) {
    PBWMonomial m(n);
    if (g.index < 1 || g.index > n) {
      throw UsageError("generator index " + std::to_string(g.index) +
                       " out of range for n = " + std::to_string(n));
    }
    m.exps_[static_cast<std::size_t>(g.slot())] = e;
    m.degree_ = e;
    return m;
  }

  int pairs() const { return static_cast<int>(exps_.size() / 2); }

  std::uint64_t exponent(Generator g) const {
    return exps_.at(static_cast<std::size_t>(g.slot()));
  }
  std::uint64_t y_exponent(int i) const { return exponent(Generator::y(i)); }
  std::uint64_t x_exponent(int i) const { return exponent(Generator::x(i)); }

  const std::vector<std::uint64_t>& exponents() const { return exps_; }

  std::uint64_t total_degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  /// Exponent-wise sum (the commutative product of monomials).
  PBWMonomial operator*(const PBWMonomial& rhs) const {
    PBWMonomial r = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      r.exps_[k] = checked_add(r.exps_[k], rhs.exps_[k]);
    }
    r.degree_ = checked_add(r.degree_, rhs.degree_);
    return r;
  }

  /// Copy with one slot replaced.
  PBWMonomial with_exponent(Generator g, std::uint64_t e) const {
    PBWMonomial r = *this;
    r.exps_[static_cast<std::size_t>(g.slot())] = e;
    r.recompute_degree();
    return r;
  }

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const PBWMonomial& a, const PBWMonomial& b) {
    return !(a == b);
  }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;  // lexicographic, slot 0 (= y_1) decides first
  }
  friend bool operator>(const PBWMonomial& a, const PBWMonomial& b) {
    return b < a;
  }

 private:
  void recompute_degree() {
    degree_ = 0;
    for (std::uint64_t e : exps_) degree_ = checked_add(degree_, e);
  }

  std::vector<std::uint64_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Total degree of an element: a nonnegative integer, or minus infinity for
/// the zero element.  Addition absorbs minus infinity, which keeps
/// deg(ab) = deg(a) + deg(b) exception-free.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  Degree(std::uint64_t v) : finite_(true), value_(v) {}  // NOLINT(implicit)

  bool is_minus_infinity() const { return !finite_; }
  std::uint64_t value() const {
    if (!finite_) throw UsageError("degree of the zero element is -infinity");
    return value_;
  }

  Degree operator+(Degree rhs) const {
    if (!finite_ || !rhs.finite_) return minus_infinity();
    return Degree(checked_add(value_, rhs.value_));
  }

  friend bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator!=(Degree a, Degree b) { return !(a == b); }
  friend bool operator<(Degree a, Degree b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(Degree a, Degree b) { return a < b || a == b; }
  friend bool operator>(Degree a, Degree b) { return b < a; }
  friend bool operator>=(Degree a, Degree b) { return b <= a; }

 private:
  Degree() : finite_(false), value_(0) {}

  bool finite_;
  std::uint64_t value_;
};

}  // namespace weylchar

#endif  // WEYLCHAR_MONOMIAL_HPP
