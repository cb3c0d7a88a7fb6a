#ifndef WEYLCHAR_GROWTH_HPP
#define WEYLCHAR_GROWTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylchar/element.hpp"
#include "weylchar/linalg.hpp"

namespace weylchar {

/// Filtration dimensions d_0, ..., d_N of the subalgebra generated by the
/// given elements: d_k = dim span{ words of length <= k in the generators }.
struct GrowthTable {
  std::vector<std::string> generators;  // canonical text, for reports
  std::vector<std::int64_t> dims;       // d_0 .. d_N; d_0 = 1

  int levels() const { return static_cast<int>(dims.size()) - 1; }
};

/// V_0 = span{1}, V_{k+1} = V_k + sum_g g * V_k, d_k = dim V_k over F_p,
/// maintained as a row-reduced basis.  Left multiplication suffices since
/// every word of length k+1 is g * (word of length k).
template <AlgebraLaw Law>
GrowthTable span_iterate(const std::vector<Element<Law>>& generators, int N);

/// True iff a lies in V_N for the given generators.
template <AlgebraLaw Law>
bool membership(const Element<Law>& a,
                const std::vector<Element<Law>>& generators, int N);

struct GkFit {
  double exponent;  // least-squares slope of ln d_k against ln k
  double residual;  // root mean squared residual of the fit
  int window_begin;
  int window_end;
};

/// Fits the growth exponent over the top tail_fraction of indices.
/// Requires at least 8 levels.
GkFit gk_fit(const GrowthTable& table, double tail_fraction = 0.5);

/// CSV export: header "N,d_N" then one row per level.
std::string growth_csv(const GrowthTable& table);

extern template GrowthTable span_iterate(const std::vector<WeylElement>&,
                                         int);
extern template GrowthTable span_iterate(const std::vector<PolyElement>&,
                                         int);
extern template bool membership(const WeylElement&,
                                const std::vector<WeylElement>&, int);
extern template bool membership(const PolyElement&,
                                const std::vector<PolyElement>&, int);

}  // namespace weylchar

#endif  // WEYLCHAR_GROWTH_HPP
