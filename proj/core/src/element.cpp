#include "weylchar/element.hpp"

#include <sstream>

namespace weylchar {

template class Element<AlgebraLaw::weyl>;
template class Element<AlgebraLaw::poisson>;

WeylElement reorder_single_pair(const AlgebraSignature& sig, std::uint64_t b,
                                std::uint64_t c, int pair_index) {
  const auto xb = WeylElement::monomial(
      sig, PBWMonomial::generator(sig.n, Generator::x(pair_index), b),
      FpScalar::one(sig.p));
  const auto yc = WeylElement::monomial(
      sig, PBWMonomial::generator(sig.n, Generator::y(pair_index), c),
      FpScalar::one(sig.p));
  return xb * yc;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return a * b - b * a;
}

WeylElement ad_power(const WeylElement& a, const WeylElement& b,
                     std::uint64_t k) {
  WeylElement acc = b;
  for (std::uint64_t i = 0; i < k; ++i) acc = commutator(a, acc);
  return acc;
}

PolyElement as_commutative(const WeylElement& a) {
  PolyElement::TermMap terms(a.terms().begin(), a.terms().end());
  return PolyElement::from_terms(a.signature(), std::move(terms));
}

std::string monomial_to_string(const PBWMonomial& m, AlgebraLaw law) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](Generator g) {
    const std::uint64_t e = m.exponent(g);
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << g.name();
    if (e != 1) os << '^' << e;
  };
  for (int i = 1; i <= m.pairs(); ++i) {
    if (law == AlgebraLaw::weyl) {
      emit(Generator::y(i));  // PBW word order y_i x_i
      emit(Generator::x(i));
    } else {
      emit(Generator::x(i));  // printing order x1 < y1 < x2 < y2 ...
      emit(Generator::y(i));
    }
  }
  if (first) os << '1';
  return os.str();
}

template <AlgebraLaw Law>
std::string to_string(const Element<Law>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *it;
    if (m.is_unit()) {
      os << c.residue();
    } else if (c.is_one()) {
      os << monomial_to_string(m, Law);
    } else {
      os << c.residue() << '*' << monomial_to_string(m, Law);
    }
  }
  return os.str();
}

template std::string to_string(const WeylElement&);
template std::string to_string(const PolyElement&);

}  // namespace weylchar
