#include "weylchar/linalg.hpp"

#include <algorithm>

namespace weylchar {

void term_axpy(TermMap& target, FpScalar c, const TermMap& src) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : src) {
    auto [it, inserted] = target.emplace(m, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

namespace {

void enumerate_rec(int slot, int slots, std::uint64_t remaining,
                   std::vector<std::uint64_t>& current,
                   std::vector<PBWMonomial>& out) {
  if (slot == slots) {
    out.emplace_back(current);
    return;
  }
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    current[static_cast<std::size_t>(slot)] = e;
    enumerate_rec(slot + 1, slots, remaining - e, current, out);
  }
  current[static_cast<std::size_t>(slot)] = 0;
}

}  // namespace

std::vector<PBWMonomial> monomials_up_to_degree(int n, std::uint64_t bound) {
  std::vector<PBWMonomial> out;
  std::vector<std::uint64_t> current(2 * static_cast<std::size_t>(n), 0);
  enumerate_rec(0, 2 * n, bound, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

template class EchelonBasis<AlgebraLaw::weyl>;
template class EchelonBasis<AlgebraLaw::poisson>;
template class LinearSolver<AlgebraLaw::weyl>;
template class LinearSolver<AlgebraLaw::poisson>;

}  // namespace weylchar
