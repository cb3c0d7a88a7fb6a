#ifndef WEYLCHAR_FP_HPP
#define WEYLCHAR_FP_HPP

#include <cstdint>
#include <iosfwd>

#include "weylchar/errors.hpp"

namespace weylchar {

/// A prime modulus, validated by deterministic trial division at
/// construction.  Values must fit in a 64-bit word.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const { return value_; }

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
  friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

 private:
  std::uint64_t value_;
};

/// An element of F_p.  The residue is always reduced; binary operations
/// require equal moduli.
class FpScalar {
 public:
  FpScalar(Prime p, std::uint64_t residue)
      : residue_(residue % p.value()), p_(p.value()) {}

  static FpScalar zero(Prime p) { return FpScalar(p, 0); }
  static FpScalar one(Prime p) { return FpScalar(p, 1); }

  /// Reduces a possibly negative integer into [0, p).
  static FpScalar from_int(Prime p, std::int64_t v);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return residue_ == 0; }
  bool is_one() const { return residue_ == 1; }

  FpScalar operator-() const;
  FpScalar operator+(FpScalar rhs) const;
  FpScalar operator-(FpScalar rhs) const;
  FpScalar operator*(FpScalar rhs) const;

  FpScalar& operator+=(FpScalar rhs) { return *this = *this + rhs; }
  FpScalar& operator-=(FpScalar rhs) { return *this = *this - rhs; }
  FpScalar& operator*=(FpScalar rhs) { return *this = *this * rhs; }

  /// Multiplicative inverse; the residue must be nonzero.
  FpScalar inverse() const;

  /// Exact power with nonnegative exponent; pow(0) = 1.
  FpScalar pow(std::uint64_t k) const;

  friend bool operator==(FpScalar a, FpScalar b) {
    return a.p_ == b.p_ && a.residue_ == b.residue_;
  }
  friend bool operator!=(FpScalar a, FpScalar b) { return !(a == b); }

 private:
  void require_same_modulus(FpScalar rhs) const;

  std::uint64_t residue_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, FpScalar s);

/// k! mod p.  Zero whenever k >= p.
std::uint64_t factorial_mod(std::uint64_t k, Prime p);

/// C(n, k) mod p by Lucas' theorem (digit-wise products of base-p digits),
/// so arguments may vastly exceed p.  Zero when k > n.
std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, Prime p);

/// The reordering coefficient k! * C(b, k) * C(c, k) mod p.
/// Requires k <= min(b, c).
FpScalar falling_binomial_weight(std::uint64_t b, std::uint64_t c,
                                 std::uint64_t k, Prime p);

}  // namespace weylchar

#endif  // WEYLCHAR_FP_HPP
