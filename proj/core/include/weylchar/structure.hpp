#ifndef WEYLCHAR_STRUCTURE_HPP
#define WEYLCHAR_STRUCTURE_HPP

#include <map>
#include <optional>

#include "weylchar/element.hpp"
#include "weylchar/morphism.hpp"

namespace weylchar {

/// True iff a commutes with every generator; by the structure of the center
/// in characteristic p this holds exactly when every exponent of every term
/// is divisible by p.
bool is_central(const WeylElement& a);

/// Commutative analogue: all 2n partials vanish, i.e. all exponents are
/// divisible by p.
bool poisson_is_central(const PolyElement& f);

/// Decomposition a = sum_mu c_mu * mu where mu runs over monomials with all
/// exponents < p and each coefficient c_mu lies in E = F[x^p, y^p].
struct CentralDecomposition {
  AlgebraSignature sig;
  std::map<PBWMonomial, WeylElement> parts;  // reduced monomial -> c_mu

  /// sum c_mu * mu, which must reproduce the decomposed element exactly.
  WeylElement reassemble() const;
};

/// The unique decomposition obtained by splitting every exponent as
/// e = (e mod p) + p * floor(e / p); valid because p-th powers of the
/// generators are central.
CentralDecomposition central_decompose(const WeylElement& a);

/// Decomposition of a over the center in image monomials:
///   a = sum c_mu * v_1^{j_1} u_1^{i_1} ... v_n^{j_n} u_n^{i_n},
/// exponents < p, with every c_mu in E of total degree <= deg_bound, found
/// by one exact linear solve over F_p.  Returns nullopt (bound exceeded)
/// when no solution exists within the bound; this is a truncation artifact,
/// not a refutation of the underlying module decomposition.
std::optional<CentralDecomposition> express_over_center(
    const WeylElement& a, const WeylEndomorphism& phi,
    std::uint64_t deg_bound);

/// Reassembly of a decomposition produced by express_over_center: the keys
/// are read as image words, i.e. sum c_mu * (v_1^{j_1} u_1^{i_1} ...).
WeylElement reassemble_in_image(const CentralDecomposition& decomposition,
                                const WeylEndomorphism& phi);

}  // namespace weylchar

#endif  // WEYLCHAR_STRUCTURE_HPP
