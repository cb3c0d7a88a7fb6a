#ifndef WEYLCHAR_ELEMENT_HPP
#define WEYLCHAR_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylchar/fp.hpp"
#include "weylchar/guard.hpp"
#include "weylchar/monomial.hpp"

namespace weylchar {

enum class AlgebraLaw { weyl, poisson };

/// Sparse exact element of A_n (law = weyl, PBW normal form) or of the
/// commutative polynomial ring (law = poisson).  The term map is ordered by
/// the degree-lexicographic monomial order, never stores a zero coefficient,
/// and is therefore a canonical representation: equal elements have
/// identical term maps.
template <AlgebraLaw Law>
class Element {
 public:
  using TermMap = std::map<PBWMonomial, FpScalar>;
  static constexpr AlgebraLaw law = Law;

  static Element zero(const AlgebraSignature& sig) { return Element(sig); }

  static Element one(const AlgebraSignature& sig) {
    return monomial(sig, PBWMonomial::unit(sig.n), FpScalar::one(sig.p));
  }

  static Element constant(const AlgebraSignature& sig, FpScalar c) {
    return monomial(sig, PBWMonomial::unit(sig.n), c);
  }

  static Element generator(const AlgebraSignature& sig, Generator g) {
    return monomial(sig, PBWMonomial::generator(sig.n, g),
                    FpScalar::one(sig.p));
  }

  static Element monomial(const AlgebraSignature& sig, const PBWMonomial& m,
                          FpScalar c) {
    Element e(sig);
    e.check_scalar(c);
    if (m.pairs() != sig.n) {
      throw UsageError("monomial length does not match the signature");
    }
    if (!c.is_zero()) e.terms_.emplace(m, c);
    return e;
  }

  static Element from_terms(const AlgebraSignature& sig, TermMap terms) {
    Element e(sig);
    for (auto it = terms.begin(); it != terms.end();) {
      if (it->first.pairs() != sig.n) {
        throw UsageError("monomial length does not match the signature");
      }
      e.check_scalar(it->second);
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    e.terms_ = std::move(terms);
    return e;
  }

  const AlgebraSignature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial; zero when absent.
  FpScalar coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FpScalar::zero(sig_.p) : it->second;
  }

  Element operator-() const {
    Element r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Element operator+(const Element& rhs) const {
    check_signature(rhs);
    Element r = *this;
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
    return r;
  }

  Element operator-(const Element& rhs) const { return *this + (-rhs); }

  Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
  Element& operator-=(const Element& rhs) { return *this = *this - rhs; }

  friend Element operator*(FpScalar c, const Element& a) {
    a.check_scalar(c);
    Element r(a.sig_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : a.terms_) r.terms_.emplace(m, c * coef);
    return r;
  }

  Element operator*(const Element& rhs) const {
    check_signature(rhs);
    Element r(sig_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : rhs.terms_) {
        accumulate_product(r, ma, ca, mb, cb);
        ensure_term_count(r.terms_.size());
      }
    }
    return r;
  }

  Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  /// Largest term under the monomial order; element must be nonzero.
  const std::pair<const PBWMonomial, FpScalar>& leading_term() const {
    if (terms_.empty()) throw UsageError("zero element has no leading term");
    return *terms_.rbegin();
  }

 private:
  explicit Element(const AlgebraSignature& sig) : sig_(sig) {}

  void check_signature(const Element& rhs) const {
    if (sig_ != rhs.sig_) {
      throw UsageError("elements come from different algebras");
    }
  }

  void check_scalar(FpScalar c) const {
    if (c.modulus() != sig_.p.value()) {
      throw UsageError("coefficient modulus does not match the signature");
    }
  }

  void add_term(const PBWMonomial& m, FpScalar c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// out += (ca * ma) * (cb * mb) under the algebra law.
  void accumulate_product(Element& out, const PBWMonomial& ma, FpScalar ca,
                          const PBWMonomial& mb, FpScalar cb) const {
    if constexpr (Law == AlgebraLaw::poisson) {
      out.add_term(ma * mb, ca * cb);
      return;
    }
    // PBW product: per pair, x^b y^c = sum_k k! C(b,k) C(c,k) y^{c-k} x^{b-k}
    // with b = left x-exponent, c = right y-exponent; distinct pairs commute.
    const int n = sig_.n;
    struct PairChoices {
      std::vector<std::pair<std::uint64_t, FpScalar>> options;  // (k, weight)
    };
    std::vector<PairChoices> pairs(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t b = ma.x_exponent(i);
      const std::uint64_t c = mb.y_exponent(i);
      auto& opts = pairs[static_cast<std::size_t>(i - 1)].options;
      const std::uint64_t kmax = b < c ? b : c;
      for (std::uint64_t k = 0; k <= kmax; ++k) {
        if (k >= sig_.p.value() && k > 0) break;  // k! = 0 from here on
        FpScalar w = falling_binomial_weight(b, c, k, sig_.p);
        if (!w.is_zero()) opts.emplace_back(k, w);
      }
    }
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    for (;;) {
      FpScalar coef = ca * cb;
      std::vector<std::uint64_t> exps(2 * static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        const auto& [k, w] =
            pairs[static_cast<std::size_t>(i - 1)]
                .options[choice[static_cast<std::size_t>(i - 1)]];
        coef *= w;
        exps[static_cast<std::size_t>(2 * (i - 1))] =
            checked_add(ma.y_exponent(i), mb.y_exponent(i)) - k;
        exps[static_cast<std::size_t>(2 * (i - 1) + 1)] =
            checked_add(ma.x_exponent(i), mb.x_exponent(i)) - k;
      }
      out.add_term(PBWMonomial(std::move(exps)), coef);
      // odometer over the per-pair reordering choices
      std::size_t pos = 0;
      while (pos < choice.size()) {
        if (++choice[pos] < pairs[pos].options.size()) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
  }

  AlgebraSignature sig_;
  TermMap terms_;
};

using WeylElement = Element<AlgebraLaw::weyl>;
using PolyElement = Element<AlgebraLaw::poisson>;

/// Binary powering; pow(a, 0) = 1 for every a including zero.
template <AlgebraLaw Law>
Element<Law> pow(const Element<Law>& a, std::uint64_t k) {
  Element<Law> acc = Element<Law>::one(a.signature());
  Element<Law> base = a;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

/// Normal form of x_i^b y_i^c for one index pair (default the first).
WeylElement reorder_single_pair(const AlgebraSignature& sig, std::uint64_t b,
                                std::uint64_t c, int pair_index = 1);

/// ab - ba in standard form.
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// k-fold iterate of b under ad_a = [a, .]; ad_power(a, b, 0) = b.
WeylElement ad_power(const WeylElement& a, const WeylElement& b,
                     std::uint64_t k);

/// Max total degree over terms; MinusInfinity for the zero element.
template <AlgebraLaw Law>
Degree total_degree(const Element<Law>& a) {
  if (a.is_zero()) return Degree::minus_infinity();
  return Degree(a.leading_term().first.total_degree());
}

/// The commutative polynomial collecting exactly the terms of maximal total
/// degree; input must be nonzero.
template <AlgebraLaw Law>
PolyElement leading_form(const Element<Law>& a) {
  if (a.is_zero()) throw UsageError("leading form of the zero element");
  const std::uint64_t top = a.leading_term().first.total_degree();
  typename PolyElement::TermMap terms;
  for (auto it = a.terms().rbegin();
       it != a.terms().rend() && it->first.total_degree() == top; ++it) {
    terms.emplace(it->first, it->second);
  }
  return PolyElement::from_terms(a.signature(), terms);
}

/// True when every term is homogeneous of the same total degree.
template <AlgebraLaw Law>
bool is_homogeneous(const Element<Law>& a) {
  if (a.is_zero()) return true;
  return a.terms().begin()->first.total_degree() ==
         a.terms().rbegin()->first.total_degree();
}

/// Reinterpret Weyl terms as a commutative polynomial (same exponents).
PolyElement as_commutative(const WeylElement& a);

std::string monomial_to_string(const PBWMonomial& m, AlgebraLaw law);

/// Canonical text form: terms sorted descending by the monomial order,
/// coefficient 1 and exponent 1 elided, e.g. "y1^2*x1 + 4*y1 + 2".
template <AlgebraLaw Law>
std::string to_string(const Element<Law>& a);

extern template class Element<AlgebraLaw::weyl>;
extern template class Element<AlgebraLaw::poisson>;
extern template std::string to_string(const WeylElement&);
extern template std::string to_string(const PolyElement&);

}  // namespace weylchar

#endif  // WEYLCHAR_ELEMENT_HPP
