#include <doctest.h>

#include <json.hpp>

#include "test_support.hpp"
#include "weylchar/growth.hpp"
#include "weylchar/io.hpp"
#include "weylchar/morphism.hpp"
#include "weylchar/structure.hpp"

using namespace weylchar;
using namespace weylchar::testing;

TEST_CASE("relation check on the identity and on named maps") {
  const AlgebraSignature sig(2, Prime(3));
  CHECK(check_relations(WeylEndomorphism::identity(sig)).valid());
  CHECK(check_relations(PoissonEndomorphism::identity(sig)).valid());
  CHECK(check_relations(descent_failure_map(Prime(2))).valid());
}

TEST_CASE("relation check reports the failing pair with its value") {
  const AlgebraSignature sig(1, Prime(5));
  const WeylEndomorphism bad(sig, {w("x1^2", 1, 5)}, {w("y1", 1, 5)});
  const auto report = check_relations(bad);
  REQUIRE(!report.valid());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].relation == "[u1, v1]");
  CHECK(report.violations[0].actual == w("2*x1", 1, 5));
  CHECK(report.violations[0].expected == w("1", 1, 5));
}

TEST_CASE("apply substitutes in PBW factor order") {
  const AlgebraSignature sig(1, Prime(2));
  const auto phi = descent_failure_map(Prime(2));
  const auto a = w("y1^2*x1", 1, 2);
  // v^2 u = (y^4 x^2) x = y^4 x^3
  CHECK(apply(phi, a) == w("y1^4*x1^3", 1, 2));

  const auto id = WeylEndomorphism::identity(sig);
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_element<AlgebraLaw::weyl>(rng, sig, 4, 4);
    CHECK(apply(id, e) == e);
  }
}

TEST_CASE("apply is multiplicative on valid maps") {
  for (std::uint64_t p : {2ull, 3ull}) {
    const AlgebraSignature sig(1, Prime(p));
    Rng rng(88 * p);
    const auto x = WeylElement::generator(sig, Generator::x(1));
    const auto y = WeylElement::generator(sig, Generator::y(1));
    const WeylEndomorphism phi(sig, {x + pow(y, 3)}, {y});
    REQUIRE(check_relations(phi).valid());
    CHECK(apply(phi, WeylElement::one(sig)) == WeylElement::one(sig));
    for (int trial = 0; trial < 12; ++trial) {
      const auto a = random_element<AlgebraLaw::weyl>(rng, sig, 3, 3);
      const auto b = random_element<AlgebraLaw::weyl>(rng, sig, 3, 3);
      REQUIRE(apply(phi, a * b) == apply(phi, a) * apply(phi, b));
    }
  }
  {
    const auto phi = power_chain_map(2, Prime(2));
    Rng rng(4321);
    for (int trial = 0; trial < 8; ++trial) {
      const auto a = random_element<AlgebraLaw::weyl>(rng, phi.sig, 3, 3);
      const auto b = random_element<AlgebraLaw::weyl>(rng, phi.sig, 3, 3);
      REQUIRE(apply(phi, a * b) == apply(phi, a) * apply(phi, b));
    }
  }
}

TEST_CASE("kernel of injective maps is empty") {
  const AlgebraSignature sig(1, Prime(2));
  const auto id = WeylEndomorphism::identity(sig);
  CHECK(kernel_basis(id, 6).dimension == 0);
  CHECK(kernel_basis(descent_failure_map(Prime(2)), 8).dimension == 0);
}

TEST_CASE("kernel rejects invalid maps") {
  const AlgebraSignature sig(1, Prime(5));
  const WeylEndomorphism bad(sig, {w("x1^2", 1, 5)}, {w("y1", 1, 5)});
  CHECK_THROWS_AS(kernel_basis(bad, 4), UsageError);
}

TEST_CASE("descent-failure map witnesses") {
  CHECK_THROWS_AS(descent_failure_map(Prime(3)), UsageError);
  const auto phi = descent_failure_map(Prime(2));
  CHECK(pow(phi.image_of_y(1), 2) == w("y1^4*x1^2", 1, 2));
  CHECK(descent_failure_witness(phi).is_zero());
}

TEST_CASE("a2 chain element brackets") {
  for (std::uint64_t p : {2ull, 3ull}) {
    const AlgebraSignature sig(2, Prime(p));
    const auto z = a2_chain_element(sig);
    const auto y1 = WeylElement::generator(sig, Generator::y(1));
    const auto y2 = WeylElement::generator(sig, Generator::y(2));
    CHECK(commutator(z, y1) == WeylElement::one(sig));
    CHECK(commutator(z, y2) ==
          WeylElement::monomial(
              sig, PBWMonomial::generator(2, Generator::y(1), p - 1),
              FpScalar::one(sig.p)));
    CHECK(commutator(pow(z, p), y2) ==
          FpScalar::from_int(sig.p, -1) * WeylElement::one(sig));
  }
}

TEST_CASE("a2 map is valid but not injective") {
  const auto phi = a2_noninjective_map(Prime(2));
  REQUIRE(check_relations(phi).valid());

  const AlgebraSignature& sig = phi.sig;
  const auto z = a2_chain_element(sig);
  const auto y1sq = pow(WeylElement::generator(sig, Generator::y(1)), 2);
  CHECK(pow(phi.image_of_x(1), 2) == pow(z, 4) * y1sq);

  const auto witness = w("x1^2 + y1^2*y2^2", 2, 2);
  CHECK(apply(phi, witness).is_zero());

  const auto kernel = kernel_basis(phi, 4);
  CHECK(kernel.dimension >= 1);
  CHECK(kernel_contains(kernel, witness));

  // kernel soundness: every basis element maps to zero, and the dimension
  // is the rank deficiency of the assembled matrix
  for (const auto& e : kernel.basis) {
    CHECK(apply(phi, e).is_zero());
    CHECK(total_degree(e) <= Degree(4));
  }
  CHECK(kernel.dimension == kernel.source_dimension - kernel.rank);
}

TEST_CASE("a2 map validity holds for p = 3 as well") {
  const auto phi = a2_noninjective_map(Prime(3));
  CHECK(check_relations(phi).valid());
}

TEST_CASE("power chain base cases") {
  CHECK(power_chain(2, Prime(2), 0, 0).is_zero());
  CHECK(power_chain(2, Prime(2), 1, 0) == w("x1", 2, 2));
  CHECK(power_chain(2, Prime(2), 2, 0) == w("x2 + y2*x1", 2, 2));
  CHECK_THROWS_AS(power_chain(2, Prime(2), 3, 0), UsageError);
  CHECK_THROWS_AS(power_chain(2, Prime(2), -1, 0), UsageError);
}

TEST_CASE("chain identity and centrality") {
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t pv : {2ull, 3ull}) {
      const Prime p(pv);
      const AlgebraSignature sig(n, p);
      for (int m = 1; m <= n; ++m) {
        for (unsigned i = 0; i + 1 <= static_cast<unsigned>(n); ++i) {
          std::uint64_t ps1 = 1;
          for (unsigned t = 0; t <= i; ++t) ps1 *= pv;
          const auto ypow = WeylElement::monomial(
              sig, PBWMonomial::generator(n, Generator::y(m), ps1 * (pv - 1)),
              FpScalar::one(p));
          const auto xpow = WeylElement::monomial(
              sig, PBWMonomial::generator(n, Generator::x(m), ps1),
              FpScalar::one(p));
          REQUIRE(power_chain(n, p, m, i + 1) ==
                  power_chain(n, p, m - 1, i) -
                      ypow * power_chain(n, p, m - 1, i + 1) + xpow);
        }
      }
      for (int m = 0; m <= n; ++m) {
        REQUIRE(is_central(power_chain(n, p, m, static_cast<unsigned>(m))));
      }
    }
  }
}

TEST_CASE("chain brackets with the y generators") {
  // [z_{m,i}, y_j] is 0 for j > m-i, 1 for j = m-i, and a polynomial in the
  // y variables alone for j < m-i
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t pv : {2ull, 3ull}) {
      const Prime p(pv);
      const AlgebraSignature sig(n, p);
      for (int m = 0; m <= n; ++m) {
        for (unsigned i = 0; i <= static_cast<unsigned>(m); ++i) {
          const auto z = power_chain(n, p, m, i);
          for (int j = 1; j <= n; ++j) {
            const auto lie = commutator(
                z, WeylElement::generator(sig, Generator::y(j)));
            if (j > m - static_cast<int>(i)) {
              REQUIRE(lie.is_zero());
            } else if (j == m - static_cast<int>(i)) {
              REQUIRE(lie == WeylElement::one(sig));
            } else {
              for (const auto& [mono, coeff] : lie.terms()) {
                (void)coeff;
                for (int t = 1; t <= n; ++t) {
                  REQUIRE(mono.x_exponent(t) == 0);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("chain corrections are central") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t pv : {2ull, 3ull}) {
      const auto ds = power_chain_corrections(n, Prime(pv));
      REQUIRE(ds.size() == static_cast<std::size_t>(n) + 1);
      CHECK(ds[0].is_zero());
      for (const auto& d : ds) CHECK(is_central(d));
    }
  }
}

TEST_CASE("chain map at n = 1 is the identity") {
  const auto phi = power_chain_map(1, Prime(3));
  CHECK(phi.image_of_x(1) == w("x1", 1, 3));
  CHECK(phi.image_of_y(1) == w("y1", 1, 3));
}

TEST_CASE("chain map at n = 2, p = 2") {
  const auto phi = power_chain_map(2, Prime(2));
  const AlgebraSignature& sig = phi.sig;
  CHECK(phi.image_of_x(1) == pow(power_chain(2, Prime(2), 2, 0), 2));
  CHECK(commutator(phi.image_of_x(1),
                   WeylElement::generator(sig, Generator::y(1))) ==
        WeylElement::one(sig));
  CHECK(commutator(phi.image_of_x(1),
                   WeylElement::generator(sig, Generator::y(2)))
            .is_zero());
  CHECK(check_relations(phi).valid());
}

TEST_CASE("chain map relations and membership for larger ranks") {
  const std::vector<std::pair<int, std::uint64_t>> configs = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (const auto& [n, pv] : configs) {
    const Prime p(pv);
    const auto phi = power_chain_map(n, p);
    REQUIRE(check_relations(phi).valid());

    const AlgebraSignature sig(n, p);
    std::vector<WeylElement> gens;
    for (int i = 1; i <= n; ++i) {
      gens.push_back(WeylElement::generator(sig, Generator::y(i)));
    }
    gens.push_back(power_chain(n, p, n, 0));
    const int N = n == 2 ? 8 : 30;
    for (int m = 1; m <= n; ++m) {
      REQUIRE(membership(phi.image_of_x(m), gens, N));
    }
  }
}

TEST_CASE("commutation defect") {
  CHECK(commutation_defect(w("x1", 1, 5), w("y1", 1, 5)) == 2);
  CHECK(commutation_defect(w("x1", 1, 2), w("y1 + x1^3", 1, 2)) == 4);
  CHECK(commutation_defect(w("y1", 1, 2), w("y1 + x1^3", 1, 2)) == 2);
  CHECK_THROWS_AS(commutation_defect(w("0", 1, 5), w("y1", 1, 5)),
                  UsageError);
  CHECK_THROWS_AS(commutation_defect(w("x1", 1, 5), w("x1^2", 1, 5)),
                  UsageError);
  // positivity on random non-commuting pairs
  const AlgebraSignature sig(1, Prime(3));
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_nonzero<AlgebraLaw::weyl>(rng, sig, 3, 3);
    const auto b = random_nonzero<AlgebraLaw::weyl>(rng, sig, 3, 3);
    if (commutator(a, b).is_zero()) continue;
    REQUIRE(commutation_defect(a, b) > 0);
  }
}

TEST_CASE("poisson triangular maps have empty bounded kernels") {
  for (std::uint64_t pv : {2ull, 3ull}) {
    const AlgebraSignature sig(1, Prime(pv));
    const auto x = PolyElement::generator(sig, Generator::x(1));
    const auto y = PolyElement::generator(sig, Generator::y(1));
    const PoissonEndomorphism phi(sig, {x + pow(y, 4)}, {y});
    REQUIRE(check_relations(phi).valid());
    CHECK(kernel_basis(phi, 8).dimension == 0);
  }
}

TEST_CASE("endomorphism JSON round trip") {
  const auto phi = a2_noninjective_map(Prime(2));
  const auto j = endomorphism_to_json(AnyEndomorphism(phi));
  CHECK(j["kind"] == "weyl");
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 2);
  const auto back = endomorphism_from_json(j);
  const auto& back_w = std::get<WeylEndomorphism>(back);
  for (int i = 1; i <= 2; ++i) {
    CHECK(back_w.image_of_x(i) == phi.image_of_x(i));
    CHECK(back_w.image_of_y(i) == phi.image_of_y(i));
  }

  const AlgebraSignature sig(1, Prime(3));
  const auto psi = PoissonEndomorphism::identity(sig);
  const auto j2 = endomorphism_to_json(AnyEndomorphism(psi));
  CHECK(j2["kind"] == "poisson");
  const auto back2 = endomorphism_from_json(j2);
  CHECK(std::get<PoissonEndomorphism>(back2).image_of_x(1) ==
        psi.image_of_x(1));

  CHECK_THROWS_AS(endomorphism_from_json(nlohmann::json::parse(
                      R"({"kind":"spooky","n":1,"p":2,"u":[],"v":[]})")),
                  UsageError);
}
