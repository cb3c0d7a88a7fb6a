#include "weylchar/growth.hpp"

#include <cmath>

namespace weylchar {

namespace {

template <AlgebraLaw Law>
class SpanBuilder {
 public:
  explicit SpanBuilder(const std::vector<Element<Law>>& generators)
      : generators_(generators) {
    if (generators_.empty()) {
      throw UsageError("span iteration needs the signature; pass at least "
                       "one generator or use the one-element table");
    }
    const auto& sig = generators_.front().signature();
    for (const auto& g : generators_) {
      if (g.signature() != sig) {
        throw UsageError("generators come from different algebras");
      }
    }
    frontier_.push_back(*basis_.insert(Element<Law>::one(sig)));
    dims_.push_back(1);  // d_0
  }

  void advance() {
    std::vector<Element<Law>> next;
    for (const auto& g : generators_) {
      for (const auto& w : frontier_) {
        if (auto row = basis_.insert(g * w)) next.push_back(std::move(*row));
      }
    }
    frontier_ = std::move(next);
    dims_.push_back(static_cast<std::int64_t>(basis_.rank()));
  }

  const std::vector<std::int64_t>& dims() const { return dims_; }
  const EchelonBasis<Law>& basis() const { return basis_; }

 private:
  std::vector<Element<Law>> generators_;
  EchelonBasis<Law> basis_;
  std::vector<Element<Law>> frontier_;  // rows added at the previous level
  std::vector<std::int64_t> dims_;
};

}  // namespace

template <AlgebraLaw Law>
GrowthTable span_iterate(const std::vector<Element<Law>>& generators, int N) {
  if (N < 0) throw UsageError("span iteration needs N >= 0");
  GrowthTable table;
  for (const auto& g : generators) table.generators.push_back(to_string(g));
  if (generators.empty()) {
    table.dims.assign(static_cast<std::size_t>(N) + 1, 1);
    return table;
  }
  SpanBuilder<Law> builder(generators);
  for (int k = 0; k < N; ++k) builder.advance();
  table.dims = builder.dims();
  return table;
}

template <AlgebraLaw Law>
bool membership(const Element<Law>& a,
                const std::vector<Element<Law>>& generators, int N) {
  if (N < 0) throw UsageError("membership needs N >= 0");
  if (generators.empty()) {
    // V_N = span{1}
    if (a.is_zero()) return true;
    return a.term_count() == 1 && a.terms().begin()->first.is_unit();
  }
  SpanBuilder<Law> builder(generators);
  for (int k = 0; k < N; ++k) {
    if (builder.basis().contains(a)) return true;
    builder.advance();
  }
  return builder.basis().contains(a);
}

template GrowthTable span_iterate(const std::vector<WeylElement>&, int);
template GrowthTable span_iterate(const std::vector<PolyElement>&, int);
template bool membership(const WeylElement&, const std::vector<WeylElement>&,
                         int);
template bool membership(const PolyElement&, const std::vector<PolyElement>&,
                         int);

GkFit gk_fit(const GrowthTable& table, double tail_fraction) {
  const int N = table.levels();
  if (N < 8) throw UsageError("growth table too short for a fit (need N >= 8)");
  if (tail_fraction <= 0.0 || tail_fraction > 1.0) {
    throw UsageError("tail_fraction must lie in (0, 1]");
  }
  int count = static_cast<int>(tail_fraction * N);
  if (count < 2) count = 2;
  int begin = N - count + 1;
  if (begin < 1) begin = 1;  // ln 0 is out

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int points = N - begin + 1;
  for (int k = begin; k <= N; ++k) {
    const double x = std::log(static_cast<double>(k));
    const double y =
        std::log(static_cast<double>(table.dims[static_cast<std::size_t>(k)]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = points * sxx - sx * sx;
  const double slope = (points * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / points;

  double ssr = 0;
  for (int k = begin; k <= N; ++k) {
    const double x = std::log(static_cast<double>(k));
    const double y =
        std::log(static_cast<double>(table.dims[static_cast<std::size_t>(k)]));
    const double r = y - (slope * x + intercept);
    ssr += r * r;
  }
  return GkFit{slope, std::sqrt(ssr / points), begin, N};
}

std::string growth_csv(const GrowthTable& table) {
  std::string out = "N,d_N\n";
  for (std::size_t k = 0; k < table.dims.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += std::to_string(table.dims[k]);
    out += '\n';
  }
  return out;
}

}  // namespace weylchar
