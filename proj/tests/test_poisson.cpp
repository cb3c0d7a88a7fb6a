#include <doctest.h>

#include "test_support.hpp"
#include "weylchar/poisson.hpp"

using namespace weylchar;
using namespace weylchar::testing;

TEST_CASE("partial derivatives") {
  CHECK(partial(c("x1^2", 1, 5), Generator::x(1)) == c("2*x1", 1, 5));
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    CHECK(partial(c("x1^" + std::to_string(p), 1, p), Generator::x(1))
              .is_zero());
  }
  CHECK(partial(c("x1*y1", 1, 5), Generator::y(1)) == c("x1", 1, 5));
  CHECK_THROWS_AS(partial(c("x1", 1, 5), Generator::x(3)), UsageError);
}

TEST_CASE("bracket on generators") {
  const AlgebraSignature sig(2, Prime(5));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const auto xi = PolyElement::generator(sig, Generator::x(i));
      const auto yj = PolyElement::generator(sig, Generator::y(j));
      const auto expected =
          i == j ? PolyElement::one(sig) : PolyElement::zero(sig);
      CHECK(poisson_bracket(xi, yj) == expected);
      CHECK(poisson_bracket(xi, PolyElement::generator(sig, Generator::x(j)))
                .is_zero());
      CHECK(poisson_bracket(yj, PolyElement::generator(sig, Generator::y(i)))
                .is_zero());
    }
  }
  CHECK(poisson_bracket(c("x1^2", 1, 5), c("y1", 1, 5)) == c("2*x1", 1, 5));
  const auto f = c("x1^2*y1 + 3*x1", 1, 5);
  CHECK(poisson_bracket(f, f).is_zero());
}

TEST_CASE("bracket axioms on random triples") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (int n = 1; n <= 2; ++n) {
      const AlgebraSignature sig(n, Prime(p));
      Rng rng(99 * p + static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_element<AlgebraLaw::poisson>(rng, sig, 4, 4);
        const auto g = random_element<AlgebraLaw::poisson>(rng, sig, 4, 4);
        const auto h = random_element<AlgebraLaw::poisson>(rng, sig, 4, 4);
        REQUIRE(poisson_bracket(f, g) == -poisson_bracket(g, f));
        REQUIRE((poisson_bracket(f, poisson_bracket(g, h)) +
                 poisson_bracket(g, poisson_bracket(h, f)) +
                 poisson_bracket(h, poisson_bracket(f, g)))
                    .is_zero());
        REQUIRE(poisson_bracket(f, g * h) ==
                poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
      }
    }
  }
}

TEST_CASE("p-th powers are Poisson central") {
  for (std::uint64_t p : {2ull, 3ull}) {
    const AlgebraSignature sig(2, Prime(p));
    Rng rng(7 * p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_element<AlgebraLaw::poisson>(rng, sig, 3, 3);
      for (int i = 1; i <= 2; ++i) {
        REQUIRE(poisson_bracket(pow(f, p),
                                PolyElement::generator(sig, Generator::x(i)))
                    .is_zero());
        REQUIRE(poisson_bracket(pow(f, p),
                                PolyElement::generator(sig, Generator::y(i)))
                    .is_zero());
      }
    }
  }
}

TEST_CASE("frobenius decomposition examples") {
  const AlgebraSignature sig(1, Prime(2));
  {
    // f = x^{P+1} with P = p^m = 4: coefficient of x is x^P
    const auto f = c("x1^5", 1, 2);
    const auto parts = frobenius_decompose(f, 2);
    REQUIRE(parts.size() == 1);
    const auto& [key, coeff] = *parts.begin();
    CHECK(key == PBWMonomial::generator(1, Generator::x(1), 1));
    CHECK(coeff == c("x1^4", 1, 2));
  }
  {
    const auto one = PolyElement::one(sig);
    const auto parts = frobenius_decompose(one, 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first.is_unit());
    CHECK(parts.begin()->second == one);
  }
  CHECK_THROWS_AS(frobenius_decompose(PolyElement::one(sig), 0), UsageError);
}

TEST_CASE("frobenius decomposition reassembles") {
  for (std::uint64_t p : {2ull, 3ull}) {
    for (unsigned m = 1; m <= 2; ++m) {
      const AlgebraSignature sig(2, Prime(p));
      std::uint64_t P = 1;
      for (unsigned i = 0; i < m; ++i) P *= p;
      Rng rng(55 * p + m);
      for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_element<AlgebraLaw::poisson>(rng, sig, 9, 5);
        const auto parts = frobenius_decompose(f, m);
        PolyElement acc = PolyElement::zero(sig);
        for (const auto& [key, coeff] : parts) {
          for (std::uint64_t e : key.exponents()) REQUIRE(e < P);
          for (const auto& [mono, cc] : coeff.terms()) {
            for (std::uint64_t e : mono.exponents()) REQUIRE(e % P == 0);
            (void)cc;
          }
          acc += coeff * PolyElement::monomial(sig, key, FpScalar::one(sig.p));
        }
        REQUIRE(acc == f);
      }
    }
  }
}

TEST_CASE("product of two P-th powers decomposes to a single part") {
  const AlgebraSignature sig(1, Prime(3));
  const auto f = pow(c("x1 + y1", 1, 3), 3) * pow(c("y1 + 1", 1, 3), 3);
  const auto parts = frobenius_decompose(f, 1);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first.is_unit());
}
