#ifndef WEYLCHAR_REWRITE_ORACLE_HPP
#define WEYLCHAR_REWRITE_ORACLE_HPP

#include "weylchar/element.hpp"

namespace weylchar {

/// Reference normalization of the product of two basis monomials by
/// iterated single-step rewriting x_i y_i -> y_i x_i + 1 (and free swaps of
/// commuting generators).  Deliberately independent of the closed-form
/// reordering coefficients used by the element product; serves as the
/// oracle the fast path is verified against.
WeylElement rewrite_product_oracle(const AlgebraSignature& sig,
                                   const PBWMonomial& a,
                                   const PBWMonomial& b);

}  // namespace weylchar

#endif  // WEYLCHAR_REWRITE_ORACLE_HPP
