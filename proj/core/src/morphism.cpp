#include "weylchar/morphism.hpp"

#include <utility>

namespace weylchar {

template struct Endomorphism<WeylElement>;
template struct Endomorphism<PolyElement>;
template RelationReport<WeylElement> check_relations(const WeylEndomorphism&);
template RelationReport<PolyElement> check_relations(
    const PoissonEndomorphism&);
template class Substitution<WeylElement>;
template class Substitution<PolyElement>;
template WeylElement apply(const WeylEndomorphism&, const WeylElement&);
template PolyElement apply(const PoissonEndomorphism&, const PolyElement&);

template <class Elem>
KernelReport<Elem> kernel_basis(const Endomorphism<Elem>& phi,
                                std::uint64_t degree_bound) {
  if (!check_relations(phi).valid()) {
    throw UsageError("kernel_basis requires an endomorphism that satisfies "
                     "the defining relations");
  }
  const auto& sig = phi.sig;
  const std::vector<PBWMonomial> mons =
      monomials_up_to_degree(sig.n, degree_bound);

  Substitution<Elem> subst(phi);
  LinearSolver<Elem::law> solver;
  std::vector<typename LinearSolver<Elem::law>::Combination> kernel;
  for (const auto& m : mons) {
    if (auto combo = solver.add_column(subst.monomial_image(m))) {
      kernel.push_back(std::move(*combo));
    }
  }

  // Each kernel combination has coefficient 1 on its own (latest) column and
  // support only on earlier columns.  Back-eliminate those leading columns
  // from one another to reach reduced echelon form.
  auto top_index = [](const auto& combo) { return combo.size() - 1; };
  for (std::size_t a = 1; a < kernel.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t t = top_index(kernel[b]);
      if (t >= kernel[a].size()) continue;
      const FpScalar c = kernel[a][t];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < kernel[b].size(); ++j) {
        kernel[a][j] -= c * kernel[b][j];
      }
    }
  }

  KernelReport<Elem> report;
  report.degree_bound = degree_bound;
  report.source_dimension = mons.size();
  report.rank = solver.rank();
  for (const auto& combo : kernel) {
    typename Elem::TermMap terms;
    for (std::size_t j = 0; j < combo.size(); ++j) {
      if (!combo[j].is_zero()) terms.emplace(mons[j], combo[j]);
    }
    report.basis.push_back(Elem::from_terms(sig, std::move(terms)));
  }
  report.dimension = report.basis.size();
  return report;
}

template KernelReport<WeylElement> kernel_basis(const WeylEndomorphism&,
                                                std::uint64_t);
template KernelReport<PolyElement> kernel_basis(const PoissonEndomorphism&,
                                                std::uint64_t);

WeylEndomorphism descent_failure_map(Prime p) {
  if (p.value() != 2) {
    throw UsageError("the descent-failure map is defined for p = 2 only");
  }
  const AlgebraSignature sig(1, p);
  const auto x = WeylElement::generator(sig, Generator::x(1));
  const auto y = WeylElement::generator(sig, Generator::y(1));
  return WeylEndomorphism(sig, {x}, {y * y * x - y});
}

WeylElement descent_failure_witness(const WeylEndomorphism& phi) {
  const auto& sig = phi.sig;
  const auto y4 = WeylElement::monomial(
      sig, PBWMonomial::generator(sig.n, Generator::y(1), 4),
      FpScalar::one(sig.p));
  return pow(phi.image_of_y(1), 2) - y4 * pow(phi.image_of_x(1), 2);
}

WeylElement a2_chain_element(const AlgebraSignature& sig) {
  if (sig.n != 2) throw UsageError("the chain element z lives in A_2");
  const auto x2 = WeylElement::generator(sig, Generator::x(2));
  const auto y1p1 = WeylElement::monomial(
      sig, PBWMonomial::generator(sig.n, Generator::y(1), sig.p.value() - 1),
      FpScalar::one(sig.p));
  return WeylElement::generator(sig, Generator::x(1)) + y1p1 * x2;
}

WeylEndomorphism a2_noninjective_map(Prime p) {
  const AlgebraSignature sig(2, p);
  const auto z = a2_chain_element(sig);
  const auto zp = pow(z, p.value());
  const auto y1p1 = WeylElement::monomial(
      sig, PBWMonomial::generator(sig.n, Generator::y(1), p.value() - 1),
      FpScalar::one(sig.p));
  const auto u1 = z + zp * y1p1;
  const auto v1 = WeylElement::generator(sig, Generator::y(1));
  const auto u2 = WeylElement::generator(sig, Generator::y(2));
  const auto v2 = zp;
  return WeylEndomorphism(sig, {u1, u2}, {v1, v2});
}

namespace {

WeylElement chain_base(const AlgebraSignature& sig, int m) {
  // z_{0,0} = 0, z_{m,0} = x_m - y_m^{p-1} z_{m-1,0}
  WeylElement z = WeylElement::zero(sig);
  for (int t = 1; t <= m; ++t) {
    const auto ymp1 = WeylElement::monomial(
        sig, PBWMonomial::generator(sig.n, Generator::y(t), sig.p.value() - 1),
        FpScalar::one(sig.p));
    z = WeylElement::generator(sig, Generator::x(t)) - ymp1 * z;
  }
  return z;
}

std::uint64_t prime_power(Prime p, unsigned i) {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < i; ++k) v = checked_mul(v, p.value());
  return v;
}

}  // namespace

WeylElement power_chain(int n, Prime p, int m, unsigned i) {
  if (m < 0 || m > n) {
    throw UsageError("power_chain requires 0 <= m <= n");
  }
  const AlgebraSignature sig(n, p);
  return pow(chain_base(sig, m), prime_power(p, i));
}

std::vector<WeylElement> power_chain_corrections(int n, Prime p) {
  const AlgebraSignature sig(n, p);
  std::vector<WeylElement> ds;
  ds.push_back(WeylElement::zero(sig));  // d_0

  for (int m = 1; m <= n; ++m) {
    // coefficient of each pending z_{t,s}, keyed (s, t) so that rewriting
    // only ever pushes forward
    std::map<std::pair<unsigned, int>, WeylElement> work;
    work.emplace(std::make_pair(0u, m), WeylElement::one(sig));
    WeylElement central = WeylElement::zero(sig);

    while (!work.empty()) {
      auto node = work.begin();
      const unsigned s = node->first.first;
      const int t = node->first.second;
      const WeylElement coeff = node->second;
      work.erase(node);
      if (coeff.is_zero()) continue;

      if (t == n) continue;  // part of the z_{n,*} combination, not of d_m
      if (s >= static_cast<unsigned>(t)) {
        // z_{t,s} = z_{t,0}^{p^s} is central: fold its value into d_m
        central += coeff * pow(chain_base(sig, t), prime_power(p, s));
        continue;
      }
      // z_{t,s} = z_{t+1,s+1} + y_{t+1}^{p^{s+1}(p-1)} z_{t,s+1}
      //           - x_{t+1}^{p^{s+1}}
      const std::uint64_t ps1 = prime_power(p, s + 1);
      const auto ypow = WeylElement::monomial(
          sig,
          PBWMonomial::generator(sig.n, Generator::y(t + 1),
                                 checked_mul(ps1, p.value() - 1)),
          FpScalar::one(sig.p));
      const auto xpow = WeylElement::monomial(
          sig, PBWMonomial::generator(sig.n, Generator::x(t + 1), ps1),
          FpScalar::one(sig.p));

      auto push = [&](unsigned s2, int t2, const WeylElement& add) {
        auto [it, inserted] =
            work.emplace(std::make_pair(s2, t2), add);
        if (!inserted) it->second += add;
      };
      push(s + 1, t + 1, coeff);
      push(s + 1, t, coeff * ypow);
      central -= coeff * xpow;
    }
    ds.push_back(std::move(central));
  }
  return ds;
}

WeylEndomorphism power_chain_map(int n, Prime p) {
  const AlgebraSignature sig(n, p);
  const auto ds = power_chain_corrections(n, p);
  std::vector<WeylElement> u, v;
  for (int m = 1; m <= n; ++m) {
    const auto ymp1 = WeylElement::monomial(
        sig, PBWMonomial::generator(sig.n, Generator::y(m), p.value() - 1),
        FpScalar::one(sig.p));
    u.push_back(WeylElement::generator(sig, Generator::x(m)) -
                ds[static_cast<std::size_t>(m)] -
                ymp1 * ds[static_cast<std::size_t>(m - 1)]);
    v.push_back(WeylElement::generator(sig, Generator::y(m)));
  }
  return WeylEndomorphism(sig, std::move(u), std::move(v));
}

std::uint64_t commutation_defect(const WeylElement& a, const WeylElement& b) {
  if (a.is_zero() || b.is_zero()) {
    throw UsageError("commutation defect is undefined for zero elements");
  }
  const WeylElement c = commutator(a, b);
  if (c.is_zero()) {
    throw UsageError("commutation defect is undefined for a commuting pair");
  }
  const std::uint64_t da = total_degree(a).value();
  const std::uint64_t db = total_degree(b).value();
  const std::uint64_t dc = total_degree(c).value();
  return checked_add(da, db) - dc;
}

}  // namespace weylchar
