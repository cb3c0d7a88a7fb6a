#include "weylchar/rewrite_oracle.hpp"

#include <vector>

namespace weylchar {

namespace {

// a word is a sequence of generator slots; the sorted word
// (y1 <= x1 <= y2 <= x2 <= ...) is a basis monomial
using Word = std::vector<int>;

Word monomial_to_word(const PBWMonomial& m) {
  Word w;
  for (int i = 1; i <= m.pairs(); ++i) {
    for (std::uint64_t k = 0; k < m.y_exponent(i); ++k) {
      w.push_back(Generator::y(i).slot());
    }
    for (std::uint64_t k = 0; k < m.x_exponent(i); ++k) {
      w.push_back(Generator::x(i).slot());
    }
  }
  return w;
}

PBWMonomial word_to_monomial(int n, const Word& w) {
  std::vector<std::uint64_t> exps(2 * static_cast<std::size_t>(n), 0);
  for (int slot : w) ++exps[static_cast<std::size_t>(slot)];
  return PBWMonomial(std::move(exps));
}

}  // namespace

WeylElement rewrite_product_oracle(const AlgebraSignature& sig,
                                   const PBWMonomial& a,
                                   const PBWMonomial& b) {
  Word start = monomial_to_word(a);
  const Word tail = monomial_to_word(b);
  start.insert(start.end(), tail.begin(), tail.end());

  WeylElement::TermMap result;
  std::vector<std::pair<Word, FpScalar>> stack;
  stack.emplace_back(std::move(start), FpScalar::one(sig.p));

  while (!stack.empty()) {
    auto [word, coeff] = std::move(stack.back());
    stack.pop_back();

    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) {
      // sorted: a basis monomial
      auto [it, inserted] =
          result.emplace(word_to_monomial(sig.n, word), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) result.erase(it);
      }
      continue;
    }

    // word[i] > word[i+1]: out of order
    const bool same_pair = word[i] / 2 == word[i + 1] / 2;
    if (same_pair) {
      // x_k y_k -> y_k x_k + 1
      Word dropped = word;
      dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(i),
                    dropped.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      stack.emplace_back(std::move(dropped), coeff);
    }
    std::swap(word[i], word[i + 1]);  // commuting swap, or the y x part
    stack.emplace_back(std::move(word), coeff);
  }
  return WeylElement::from_terms(sig, std::move(result));
}

}  // namespace weylchar
