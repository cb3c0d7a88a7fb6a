#include "weylchar/structure.hpp"

#include <algorithm>

namespace weylchar {

namespace {

template <AlgebraLaw Law>
bool all_exponents_divisible(const Element<Law>& a) {
  const std::uint64_t p = a.signature().p.value();
  for (const auto& [m, c] : a.terms()) {
    for (std::uint64_t e : m.exponents()) {
      if (e % p != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_central(const WeylElement& a) { return all_exponents_divisible(a); }

bool poisson_is_central(const PolyElement& f) {
  return all_exponents_divisible(f);
}

WeylElement CentralDecomposition::reassemble() const {
  WeylElement acc = WeylElement::zero(sig);
  for (const auto& [mu, c] : parts) {
    acc += c * WeylElement::monomial(sig, mu, FpScalar::one(sig.p));
  }
  return acc;
}

CentralDecomposition central_decompose(const WeylElement& a) {
  const auto& sig = a.signature();
  const std::uint64_t p = sig.p.value();
  CentralDecomposition out{sig, {}};
  std::map<PBWMonomial, WeylElement::TermMap> parts;
  for (const auto& [m, c] : a.terms()) {
    std::vector<std::uint64_t> low(m.exponents().size());
    std::vector<std::uint64_t> high(m.exponents().size());
    for (std::size_t k = 0; k < low.size(); ++k) {
      low[k] = m.exponents()[k] % p;
      high[k] = m.exponents()[k] - low[k];
    }
    parts[PBWMonomial(std::move(low))].emplace(PBWMonomial(std::move(high)),
                                               c);
  }
  for (auto& [mu, terms] : parts) {
    out.parts.emplace(mu, WeylElement::from_terms(sig, std::move(terms)));
  }
  return out;
}

namespace {

/// All monomials with every exponent divisible by p and total degree
/// <= bound, ascending.
std::vector<PBWMonomial> central_monomials_up_to(const AlgebraSignature& sig,
                                                 std::uint64_t bound) {
  std::vector<PBWMonomial> base =
      monomials_up_to_degree(sig.n, bound / sig.p.value());
  std::vector<PBWMonomial> out;
  out.reserve(base.size());
  for (const auto& m : base) {
    std::vector<std::uint64_t> exps = m.exponents();
    for (auto& e : exps) e = checked_mul(e, sig.p.value());
    out.emplace_back(std::move(exps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All monomials with every exponent < p, ascending.
std::vector<PBWMonomial> reduced_monomials(const AlgebraSignature& sig) {
  std::vector<PBWMonomial> out;
  std::vector<std::uint64_t> current(2 * static_cast<std::size_t>(sig.n), 0);
  const std::uint64_t p = sig.p.value();
  for (;;) {
    out.emplace_back(current);
    std::size_t pos = 0;
    while (pos < current.size()) {
      if (++current[pos] < p) break;
      current[pos] = 0;
      ++pos;
    }
    if (pos == current.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<CentralDecomposition> express_over_center(
    const WeylElement& a, const WeylEndomorphism& phi,
    std::uint64_t deg_bound) {
  if (!check_relations(phi).valid()) {
    throw UsageError("express_over_center requires an endomorphism that "
                     "satisfies the defining relations");
  }
  const auto& sig = a.signature();
  if (sig != phi.sig) {
    throw UsageError("elements come from different algebras");
  }

  const auto mus = reduced_monomials(sig);
  const auto centrals = central_monomials_up_to(sig, deg_bound);

  Substitution<WeylElement> subst(phi);
  LinearSolver<AlgebraLaw::weyl> solver;
  // column order: reduced image monomial ascending, then central monomial
  // ascending; free unknowns are pinned to zero by the solver
  for (const auto& mu : mus) {
    const WeylElement& image = subst.monomial_image(mu);
    for (const auto& e : centrals) {
      const auto ce =
          WeylElement::monomial(sig, e, FpScalar::one(sig.p));
      solver.add_column(ce * image);
    }
  }
  const auto solution = solver.solve(a);
  if (!solution) return std::nullopt;  // BoundExceeded: truncation artifact

  CentralDecomposition out{sig, {}};
  const std::size_t stride = centrals.size();
  for (std::size_t i = 0; i < mus.size(); ++i) {
    WeylElement::TermMap coeff;
    for (std::size_t j = 0; j < stride; ++j) {
      const FpScalar c = (*solution)[i * stride + j];
      if (!c.is_zero()) coeff.emplace(centrals[j], c);
    }
    if (!coeff.empty()) {
      out.parts.emplace(mus[i],
                        WeylElement::from_terms(sig, std::move(coeff)));
    }
  }
  return out;
}

WeylElement reassemble_in_image(const CentralDecomposition& decomposition,
                                const WeylEndomorphism& phi) {
  Substitution<WeylElement> subst(phi);
  WeylElement acc = WeylElement::zero(decomposition.sig);
  for (const auto& [mu, c] : decomposition.parts) {
    acc += c * subst.monomial_image(mu);
  }
  return acc;
}

}  // namespace weylchar
