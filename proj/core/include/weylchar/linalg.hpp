#ifndef WEYLCHAR_LINALG_HPP
#define WEYLCHAR_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "weylchar/element.hpp"

namespace weylchar {

using TermMap = std::map<PBWMonomial, FpScalar>;

/// target += c * src, erasing cancelled monomials in place.
void term_axpy(TermMap& target, FpScalar c, const TermMap& src);

/// Row-echelon basis of a subspace of elements over F_p.  The pivot of each
/// row is its smallest monomial in the degree-lexicographic order and is
/// normalized to coefficient 1, which makes ranks and membership answers
/// deterministic.
template <AlgebraLaw Law>
class EchelonBasis {
 public:
  /// Eliminates every pivot present in w; w is modified in place.
  void reduce(TermMap& w) const {
    auto it = w.begin();
    while (it != w.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const PBWMonomial at = it->first;
      term_axpy(w, -it->second, row->second);
      it = w.upper_bound(at);  // only monomials above the pivot changed
    }
  }

  /// Adds the element to the basis unless it is dependent.  Returns the
  /// stored normalized row when the rank grew.
  std::optional<Element<Law>> insert(const Element<Law>& e) {
    TermMap w = e.terms();
    reduce(w);
    if (w.empty()) return std::nullopt;
    const FpScalar inv = w.begin()->second.inverse();
    for (auto& [m, c] : w) c *= inv;
    stored_terms_ += w.size();
    ensure_term_count(stored_terms_);
    Element<Law> row = Element<Law>::from_terms(e.signature(), w);
    PBWMonomial pivot = w.begin()->first;
    rows_.emplace(std::move(pivot), std::move(w));
    return row;
  }

  bool contains(const Element<Law>& e) const {
    TermMap w = e.terms();
    reduce(w);
    return w.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<PBWMonomial, TermMap> rows_;  // pivot monomial -> row
  std::size_t stored_terms_ = 0;
};

/// Incremental column-wise Gaussian elimination over F_p with combination
/// tracking.  Columns are elements presented in a fixed order; the solver
/// records, for every reduced pivot row, its expression in the original
/// columns.  Kernel vectors and particular solutions therefore come out
/// deterministically (free variables pinned to zero).
template <AlgebraLaw Law>
class LinearSolver {
 public:
  using Combination = std::vector<FpScalar>;  // indexed by column number

  /// Feeds the next column.  Returns the kernel combination discovered when
  /// the column is dependent on its predecessors, nullopt otherwise.
  std::optional<Combination> add_column(const Element<Law>& col) {
    const Prime p = col.signature().p;
    TermMap w = col.terms();
    Combination combo(ncols_ + 1, FpScalar::zero(p));
    combo[ncols_] = FpScalar::one(p);
    reduce_tracked(w, combo);
    ++ncols_;
    if (w.empty()) return combo;
    const FpScalar inv = w.begin()->second.inverse();
    for (auto& [m, c] : w) c *= inv;
    for (auto& c : combo) c *= inv;
    PBWMonomial pivot = w.begin()->first;
    rows_.emplace(std::move(pivot), Row{std::move(w), std::move(combo)});
    return std::nullopt;
  }

  /// Expresses rhs in the columns seen so far; nullopt when unreachable.
  std::optional<Combination> solve(const Element<Law>& rhs) const {
    const Prime p = rhs.signature().p;
    TermMap w = rhs.terms();
    Combination lambda(ncols_, FpScalar::zero(p));
    auto it = w.begin();
    while (it != w.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const PBWMonomial at = it->first;
      const FpScalar c = it->second;
      term_axpy(w, -c, row->second.vec);
      for (std::size_t j = 0; j < row->second.combo.size(); ++j) {
        lambda[j] += c * row->second.combo[j];
      }
      it = w.upper_bound(at);
    }
    if (!w.empty()) return std::nullopt;
    return lambda;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return ncols_; }

 private:
  struct Row {
    TermMap vec;        // reduced column, pivot coefficient 1
    Combination combo;  // vec expressed in the original columns
  };

  void reduce_tracked(TermMap& w, Combination& combo) const {
    auto it = w.begin();
    while (it != w.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const PBWMonomial at = it->first;
      const FpScalar c = it->second;
      term_axpy(w, -c, row->second.vec);
      for (std::size_t j = 0; j < row->second.combo.size(); ++j) {
        combo[j] -= c * row->second.combo[j];
      }
      it = w.upper_bound(at);
    }
  }

  std::map<PBWMonomial, Row> rows_;
  std::size_t ncols_ = 0;
};

/// All monomials of total degree <= bound in 2n variables, ascending in the
/// degree-lexicographic order.
std::vector<PBWMonomial> monomials_up_to_degree(int n, std::uint64_t bound);

extern template class EchelonBasis<AlgebraLaw::weyl>;
extern template class EchelonBasis<AlgebraLaw::poisson>;
extern template class LinearSolver<AlgebraLaw::weyl>;
extern template class LinearSolver<AlgebraLaw::poisson>;

}  // namespace weylchar

#endif  // WEYLCHAR_LINALG_HPP
