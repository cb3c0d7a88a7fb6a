#ifndef WEYLCHAR_MORPHISM_HPP
#define WEYLCHAR_MORPHISM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylchar/element.hpp"
#include "weylchar/linalg.hpp"
#include "weylchar/poisson.hpp"

namespace weylchar {

/// An endomorphism candidate of A_n (Elem = WeylElement) or PS_n
/// (Elem = PolyElement), given by the 2n images u_i of x_i and v_i of y_i.
/// Candidates violating the defining relations are representable on purpose;
/// validity is queried through check_relations.
template <class Elem>
struct Endomorphism {
  AlgebraSignature sig;
  std::vector<Elem> u;  // images of x_1 .. x_n
  std::vector<Elem> v;  // images of y_1 .. y_n

  Endomorphism(AlgebraSignature sig_, std::vector<Elem> u_,
               std::vector<Elem> v_)
      : sig(sig_), u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != static_cast<std::size_t>(sig.n) || u.size() != v.size()) {
      throw UsageError("endomorphism needs exactly n images for x and for y");
    }
    for (const auto& e : u) require_signature(e);
    for (const auto& e : v) require_signature(e);
  }

  static Endomorphism identity(const AlgebraSignature& sig) {
    std::vector<Elem> u, v;
    for (int i = 1; i <= sig.n; ++i) {
      u.push_back(Elem::generator(sig, Generator::x(i)));
      v.push_back(Elem::generator(sig, Generator::y(i)));
    }
    return Endomorphism(sig, std::move(u), std::move(v));
  }

  const Elem& image_of_x(int i) const {
    return u.at(static_cast<std::size_t>(i - 1));
  }
  const Elem& image_of_y(int i) const {
    return v.at(static_cast<std::size_t>(i - 1));
  }

 private:
  void require_signature(const Elem& e) const {
    if (e.signature() != sig) {
      throw UsageError("endomorphism image has a foreign signature");
    }
  }
};

using WeylEndomorphism = Endomorphism<WeylElement>;
using PoissonEndomorphism = Endomorphism<PolyElement>;

/// The bracket entering the defining relations of the algebra kind.
inline WeylElement relation_bracket(const WeylElement& a,
                                    const WeylElement& b) {
  return commutator(a, b);
}
inline PolyElement relation_bracket(const PolyElement& a,
                                    const PolyElement& b) {
  return poisson_bracket(a, b);
}

template <class Elem>
struct RelationViolation {
  std::string relation;  // e.g. "[u1, v2]"
  Elem actual;
  Elem expected;
};

template <class Elem>
struct RelationReport {
  std::vector<RelationViolation<Elem>> violations;
  bool valid() const { return violations.empty(); }
};

/// Evaluates all O(n^2) instances of [u_i, v_j] = delta_ij, [u_i, u_j] = 0,
/// [v_i, v_j] = 0 on the images and reports every failing pair.
template <class Elem>
RelationReport<Elem> check_relations(const Endomorphism<Elem>& phi) {
  RelationReport<Elem> report;
  const auto& sig = phi.sig;
  const Elem zero = Elem::zero(sig);
  const Elem unit = Elem::one(sig);
  auto probe = [&](const std::string& name, const Elem& a, const Elem& b,
                   const Elem& expected) {
    Elem actual = relation_bracket(a, b);
    if (actual != expected) {
      report.violations.push_back({name, std::move(actual), expected});
    }
  };
  for (int i = 1; i <= sig.n; ++i) {
    for (int j = 1; j <= sig.n; ++j) {
      probe("[u" + std::to_string(i) + ", v" + std::to_string(j) + "]",
            phi.image_of_x(i), phi.image_of_y(j), i == j ? unit : zero);
      if (i < j) {
        probe("[u" + std::to_string(i) + ", u" + std::to_string(j) + "]",
              phi.image_of_x(i), phi.image_of_x(j), zero);
        probe("[v" + std::to_string(i) + ", v" + std::to_string(j) + "]",
              phi.image_of_y(i), phi.image_of_y(j), zero);
      }
    }
  }
  return report;
}

/// Substitution on the standard basis with memoized monomial images:
///   y_1^{j_1} x_1^{i_1} ...  |->  v_1^{j_1} u_1^{i_1} ...
/// in exactly that factor order, extended linearly.  Reused across calls so
/// kernel assembly can share images of nested monomials.
template <class Elem>
class Substitution {
 public:
  explicit Substitution(const Endomorphism<Elem>& phi) : phi_(phi) {}

  const Elem& monomial_image(const PBWMonomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Elem img = Elem::one(phi_.sig);
    if (!m.is_unit()) {
      // peel the leftmost factor of the basis word
      for (int i = 1; i <= phi_.sig.n; ++i) {
        if (m.y_exponent(i) > 0) {
          img = phi_.image_of_y(i) *
                monomial_image(
                    m.with_exponent(Generator::y(i), m.y_exponent(i) - 1));
          break;
        }
        if (m.x_exponent(i) > 0) {
          img = phi_.image_of_x(i) *
                monomial_image(
                    m.with_exponent(Generator::x(i), m.x_exponent(i) - 1));
          break;
        }
      }
    }
    return memo_.emplace(m, std::move(img)).first->second;
  }

  Elem operator()(const Elem& a) {
    if (a.signature() != phi_.sig) {
      throw UsageError("elements come from different algebras");
    }
    Elem acc = Elem::zero(phi_.sig);
    for (const auto& [m, c] : a.terms()) acc += c * monomial_image(m);
    return acc;
  }

 private:
  Endomorphism<Elem> phi_;
  std::map<PBWMonomial, Elem> memo_;
};

/// Exact image of a under phi.
template <class Elem>
Elem apply(const Endomorphism<Elem>& phi, const Elem& a) {
  Substitution<Elem> subst(phi);
  return subst(a);
}

template <class Elem>
struct KernelReport {
  std::uint64_t degree_bound;
  std::vector<Elem> basis;  // reduced echelon form over the PBW coordinates
  std::size_t dimension = 0;
  std::size_t source_dimension = 0;  // # monomials of degree <= bound
  std::size_t rank = 0;              // rank of the assembled linear map
};

/// Exact nullspace of the linear map
///   span{ monomials of degree <= bound }  ->  target coordinates
/// induced by phi.  Requires phi to pass check_relations.
template <class Elem>
KernelReport<Elem> kernel_basis(const Endomorphism<Elem>& phi,
                                std::uint64_t degree_bound);

/// Is the element in the row span of the (echelon) kernel basis?
template <class Elem>
bool kernel_contains(const KernelReport<Elem>& report, const Elem& e) {
  EchelonBasis<Elem::law> basis;
  for (const auto& b : report.basis) basis.insert(b);
  return basis.contains(e);
}

/// The rank-1 map of A_1 at p = 2 with u = x, v = y^2 x - y.  It satisfies
/// the defining relation yet u^2 and v^2 are linearly dependent over
/// F(x^4, y^4), so the Frobenius-descent argument available for commutative
/// polynomials fails in A_1.
WeylEndomorphism descent_failure_map(Prime p);

/// The witness of that failure: v^2 - y^4 u^2, which is zero for the map
/// above.
WeylElement descent_failure_witness(const WeylEndomorphism& phi);

/// The A_2 endomorphism built from z = x_1 + y_1^{p-1} x_2:
///   u_1 = z + z^p y_1^{p-1},  v_1 = y_1,  u_2 = y_2,  v_2 = z^p.
/// It satisfies the defining relations of A_2 but is not injective.
WeylEndomorphism a2_noninjective_map(Prime p);

/// The element z used by a2_noninjective_map.
WeylElement a2_chain_element(const AlgebraSignature& sig);

/// The nested chain z_{0,0} = 0, z_{m,0} = x_m - y_m^{p-1} z_{m-1,0},
/// z_{m,i} = z_{m,0}^{p^i}, in standard form.  Requires 0 <= m <= n.
WeylElement power_chain(int n, Prime p, int m, unsigned i);

/// Central corrections d_0 .. d_n obtained by unrolling the chain relation
///   z_{m-1,i} = z_{m,i+1} + y_m^{p^{i+1}(p-1)} z_{m-1,i+1} - x_m^{p^{i+1}}
/// down to the central elements z_{t,t}; d_m is the central remainder of
/// z_{m,0} expressed over the z_{n,*}.
std::vector<WeylElement> power_chain_corrections(int n, Prime p);

/// The A_n endomorphism u_m = x_m - d_m - y_m^{p-1} d_{m-1}, v_m = y_m.
/// Every u_m lies in F[y_1, ..., y_n, z_{n,0}], so the image grows like a
/// polynomial ring in n + 1 variables.
WeylEndomorphism power_chain_map(int n, Prime p);

/// deg(a) + deg(b) - deg([a, b]); defined (and strictly positive) only when
/// a, b are nonzero and do not commute.
std::uint64_t commutation_defect(const WeylElement& a, const WeylElement& b);

extern template struct Endomorphism<WeylElement>;
extern template struct Endomorphism<PolyElement>;
extern template RelationReport<WeylElement> check_relations(
    const WeylEndomorphism&);
extern template RelationReport<PolyElement> check_relations(
    const PoissonEndomorphism&);
extern template class Substitution<WeylElement>;
extern template class Substitution<PolyElement>;
extern template WeylElement apply(const WeylEndomorphism&,
                                  const WeylElement&);
extern template PolyElement apply(const PoissonEndomorphism&,
                                  const PolyElement&);
extern template KernelReport<WeylElement> kernel_basis(
    const WeylEndomorphism&, std::uint64_t);
extern template KernelReport<PolyElement> kernel_basis(
    const PoissonEndomorphism&, std::uint64_t);

}  // namespace weylchar

#endif  // WEYLCHAR_MORPHISM_HPP
