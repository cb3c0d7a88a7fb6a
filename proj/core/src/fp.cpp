#include "weylchar/fp.hpp"

#include <ostream>

namespace weylchar {

namespace {

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= v / d; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime_u64(value)) {
    throw UsageError("modulus " + std::to_string(value) + " is not prime");
  }
}

FpScalar FpScalar::from_int(Prime p, std::int64_t v) {
  const std::int64_t m = static_cast<std::int64_t>(p.value());
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return FpScalar(p, static_cast<std::uint64_t>(r));
}

void FpScalar::require_same_modulus(FpScalar rhs) const {
  if (p_ != rhs.p_) {
    throw UsageError("mixed moduli: " + std::to_string(p_) + " vs " +
                     std::to_string(rhs.p_));
  }
}

FpScalar FpScalar::operator-() const {
  FpScalar r = *this;
  r.residue_ = residue_ == 0 ? 0 : p_ - residue_;
  return r;
}

FpScalar FpScalar::operator+(FpScalar rhs) const {
  require_same_modulus(rhs);
  FpScalar r = *this;
  r.residue_ = residue_ + rhs.residue_;  // p < 2^63, no overflow
  if (r.residue_ >= p_) r.residue_ -= p_;
  return r;
}

FpScalar FpScalar::operator-(FpScalar rhs) const { return *this + (-rhs); }

FpScalar FpScalar::operator*(FpScalar rhs) const {
  require_same_modulus(rhs);
  FpScalar r = *this;
  r.residue_ = mulmod(residue_, rhs.residue_, p_);
  return r;
}

FpScalar FpScalar::inverse() const {
  if (residue_ == 0) {
    throw UsageError("division by zero in F_" + std::to_string(p_));
  }
  return pow(p_ - 2);  // Fermat
}

FpScalar FpScalar::pow(std::uint64_t k) const {
  FpScalar base = *this;
  FpScalar acc(Prime(p_), 1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, FpScalar s) {
  return os << s.residue();
}

std::uint64_t factorial_mod(std::uint64_t k, Prime p) {
  if (k >= p.value()) return 0;  // k! contains the factor p
  std::uint64_t acc = 1;
  for (std::uint64_t i = 2; i <= k; ++i) acc = mulmod(acc, i, p.value());
  return acc;
}

std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) return 0;
  const std::uint64_t q = p.value();
  std::uint64_t acc = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % q;
    const std::uint64_t kd = k % q;
    if (kd > nd) return 0;
    // small-digit binomial, exact in 64 bits since digits < p
    std::uint64_t digit = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      digit = mulmod(digit, nd - i, q);
      digit = mulmod(digit, FpScalar(p, i + 1).inverse().residue(), q);
    }
    acc = mulmod(acc, digit, q);
    if (acc == 0) return 0;
    n /= q;
    k /= q;
  }
  return acc;
}

FpScalar falling_binomial_weight(std::uint64_t b, std::uint64_t c,
                                 std::uint64_t k, Prime p) {
  if (k > b || k > c) {
    throw UsageError("falling_binomial_weight requires k <= min(b, c)");
  }
  std::uint64_t acc = factorial_mod(k, p);
  acc = mulmod(acc, binomial_mod(b, k, p), p.value());
  acc = mulmod(acc, binomial_mod(c, k, p), p.value());
  return FpScalar(p, acc);
}

}  // namespace weylchar
