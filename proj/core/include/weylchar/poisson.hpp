#ifndef WEYLCHAR_POISSON_HPP
#define WEYLCHAR_POISSON_HPP

#include <map>

#include "weylchar/element.hpp"

namespace weylchar {

/// Formal partial derivative with coefficients reduced mod p, so that
/// d(t^p)/dt = 0.
PolyElement partial(const PolyElement& f, Generator var);

/// The symplectic bracket
///   {f, g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i).
PolyElement poisson_bracket(const PolyElement& f, const PolyElement& g);

/// Unique decomposition f = sum_mu c_mu * mu where mu runs over monomials
/// with all exponents < P = p^m and each c_mu lies in F[x^P, y^P]
/// (each exponent splits as e = e mod P + P * floor(e / P)).
std::map<PBWMonomial, PolyElement> frobenius_decompose(const PolyElement& f,
                                                       unsigned m);

}  // namespace weylchar

#endif  // WEYLCHAR_POISSON_HPP
