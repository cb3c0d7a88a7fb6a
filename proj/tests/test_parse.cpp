#include <doctest.h>

#include "test_support.hpp"
#include "weylchar/parse.hpp"

using namespace weylchar;
using namespace weylchar::testing;

TEST_CASE("grammar shapes") {
  const auto ctx = wctx(1, 5);
  {
    const auto e = parse_expression("x1*y1 - y1*x1", ctx);
    REQUIRE(e.terms.size() == 2);
    CHECK(!e.terms[0].negative);
    CHECK(e.terms[1].negative);
    CHECK(e.terms[0].factors.size() == 2);
    CHECK(e.terms[1].factors.size() == 2);
  }
  {
    const auto e = parse_expression("(y1^2*x1 - y1)^2", ctx);
    REQUIRE(e.terms.size() == 1);
    REQUIRE(e.terms[0].factors.size() == 1);
    const auto& f = e.terms[0].factors[0];
    CHECK(f.exponent == 2);
    REQUIRE(f.atom.kind == ExprAtom::Kind::subexpression);
    CHECK(f.atom.sub->terms.size() == 2);
  }
}

TEST_CASE("syntax errors carry positions") {
  const auto ctx = wctx(2, 5);
  CHECK_THROWS_AS(parse_expression("x3", ctx), ParseError);
  try {
    parse_expression("x1 +\n* y1", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_expression("", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 *", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("(x1", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("x1^y1", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 x1", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("z1", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("x0", ctx), ParseError);
}

TEST_CASE("evaluation in both algebras") {
  CHECK(to_string(w("x1*y1", 1, 5)) == "y1*x1 + 1");
  CHECK(to_string(c("x1*y1", 1, 5)) == "x1*y1");
  CHECK(to_string(w("(y1^2*x1 - y1)^2", 1, 2)) == "y1^4*x1^2");
  CHECK(w("x1 - x1", 1, 3).is_zero());
  // '-' is sugar for + (p-1) *
  CHECK(w("x1 - y1", 1, 3) == w("x1 + 2*y1", 1, 3));
  // literals reduce mod p
  CHECK(w("7", 1, 5) == w("2", 1, 5));
  // noncommutative factor order is preserved until evaluation
  CHECK(w("x1*y1", 1, 5) != w("y1*x1", 1, 5));
  CHECK(c("x1*y1", 1, 5) == c("y1*x1", 1, 5));
}

TEST_CASE("powers of atoms bind tighter than products") {
  CHECK(w("x1*y1^2", 1, 5) ==
        w("x1", 1, 5) * w("y1", 1, 5) * w("y1", 1, 5));
  CHECK(w("2^3", 1, 5) == w("3", 1, 5));  // 8 mod 5
}

TEST_CASE("round trip: parse(print(e)) evaluates to e") {
  for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
    for (int n = 1; n <= 2; ++n) {
      const AlgebraSignature sig(n, Prime(pv));
      Rng rng(10007 * pv + static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_element<AlgebraLaw::weyl>(rng, sig, 5, 5);
        CHECK(w(to_string(e), n, pv) == e);
        const auto f = random_element<AlgebraLaw::poisson>(rng, sig, 5, 5);
        CHECK(c(to_string(f), n, pv) == f);
      }
    }
  }
}

TEST_CASE("printing is deterministic") {
  const auto a = w("(x1 + y1)^3", 1, 7);
  const auto b = w("(x1 + y1)^3", 1, 7);
  CHECK(to_string(a) == to_string(b));
}

TEST_CASE("eval dispatches on the context algebra") {
  const auto expr = parse_expression("x1*y1", wctx(1, 5));
  const auto weyl_val = eval(expr, wctx(1, 5));
  const auto poly_val = eval(expr, pctx(1, 5));
  CHECK(std::holds_alternative<WeylElement>(weyl_val));
  CHECK(std::holds_alternative<PolyElement>(poly_val));
  CHECK(to_string(weyl_val) == "y1*x1 + 1");
  CHECK(to_string(poly_val) == "x1*y1");
}
