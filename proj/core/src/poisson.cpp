#include "weylchar/poisson.hpp"

namespace weylchar {

PolyElement partial(const PolyElement& f, Generator var) {
  const auto& sig = f.signature();
  if (var.index < 1 || var.index > sig.n) {
    throw UsageError("unknown variable " + var.name() + " for n = " +
                     std::to_string(sig.n));
  }
  PolyElement::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    const std::uint64_t e = m.exponent(var);
    if (e == 0) continue;
    const FpScalar factor = FpScalar(sig.p, e % sig.p.value());
    if (factor.is_zero()) continue;
    out.emplace(m.with_exponent(var, e - 1), c * factor);
  }
  return PolyElement::from_terms(sig, std::move(out));
}

PolyElement poisson_bracket(const PolyElement& f, const PolyElement& g) {
  if (f.signature() != g.signature()) {
    throw UsageError("elements come from different algebras");
  }
  const auto& sig = f.signature();
  PolyElement acc = PolyElement::zero(sig);
  for (int i = 1; i <= sig.n; ++i) {
    acc += partial(f, Generator::x(i)) * partial(g, Generator::y(i));
    acc -= partial(f, Generator::y(i)) * partial(g, Generator::x(i));
  }
  return acc;
}

std::map<PBWMonomial, PolyElement> frobenius_decompose(const PolyElement& f,
                                                       unsigned m) {
  if (m < 1) throw UsageError("frobenius_decompose requires m >= 1");
  const auto& sig = f.signature();
  std::uint64_t P = 1;
  for (unsigned i = 0; i < m; ++i) P = checked_mul(P, sig.p.value());

  std::map<PBWMonomial, PolyElement::TermMap> parts;
  for (const auto& [mon, c] : f.terms()) {
    std::vector<std::uint64_t> low(mon.exponents().size());
    std::vector<std::uint64_t> high(mon.exponents().size());
    for (std::size_t k = 0; k < low.size(); ++k) {
      low[k] = mon.exponents()[k] % P;
      high[k] = mon.exponents()[k] - low[k];
    }
    parts[PBWMonomial(std::move(low))].emplace(PBWMonomial(std::move(high)),
                                               c);
  }
  std::map<PBWMonomial, PolyElement> out;
  for (auto& [key, terms] : parts) {
    out.emplace(key, PolyElement::from_terms(sig, std::move(terms)));
  }
  return out;
}

}  // namespace weylchar
