#include <algorithm>
#include <random>

#include "aisr/algebra.hpp"
#include "aisr/construct.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aisr;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("boolean semiring is a valid ai-semiring") {
  auto report = validate_axioms(fixtures::boolean_semiring());
  CHECK(report.ok());
  CHECK(report.violations.empty());
}

TEST_CASE("broken boolean reports a mul-associativity witness") {
  auto report = validate_axioms(fixtures::broken_boolean());
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.law == Law::kMulAssociative) {
      found = true;
      // First failing triple in scan order: (1*0)*1 = 0 but 1*(0*1) = 1.
      CHECK(v.witness == std::array<int, 3>{1, 0, 1});
    }
  CHECK(found);
}

TEST_CASE("axiom report is sound and complete over the law list") {
  // Every ai-semiring law holds on the boolean semiring; each listed
  // violation of the broken table re-evaluates to an actual inequality.
  auto S = fixtures::broken_boolean();
  for (const auto& v : validate_axioms(S).violations) {
    auto [a, b, c] = v.witness;
    switch (v.law) {
      case Law::kMulAssociative:
        CHECK(S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)));
        break;
      case Law::kLeftDistributive:
        CHECK(S.mul(a, S.add(b, c)) != S.add(S.mul(a, b), S.mul(a, c)));
        break;
      case Law::kRightDistributive:
        CHECK(S.mul(S.add(b, c), a) != S.add(S.mul(b, a), S.mul(c, a)));
        break;
      default:
        FAIL("unexpected law reported");
    }
  }
}

TEST_CASE("structural errors are distinct from axiom failures") {
  CHECK_THROWS_AS(FiniteSemiring(2, {0, 1, 1}, {0, 0, 0, 1}),
                  StructuralError);
  CHECK_THROWS_AS(FiniteSemiring(2, {0, 1, 1, 2}, {0, 0, 0, 1}),
                  StructuralError);
  CHECK_THROWS_AS(FiniteSemiring(0, {}, {}), StructuralError);
}

TEST_CASE("generated subalgebras on the flat extension of Z_2") {
  auto S = fixtures::flat_z2_by_hand();
  auto closure = generated_subalgebras(S, {1});
  CHECK(closure.semigroup_closure == std::vector<int>{0, 1});
  CHECK(closure.semiring_closure == std::vector<int>{0, 1, 2});
  CHECK(closure.semiring_closure.size() <= 4);  // 2^|<A>_s|
}

TEST_CASE("full carrier and idempotent singleton closures") {
  auto S = fixtures::flat_z2_by_hand();
  auto closure = generated_subalgebras(S, {0, 1, 2});
  CHECK(closure.semigroup_closure == std::vector<int>{0, 1, 2});
  CHECK(closure.semiring_closure == std::vector<int>{0, 1, 2});

  auto B = fixtures::boolean_semiring();
  auto one = generated_subalgebras(B, {1});
  CHECK(one.semigroup_closure == std::vector<int>{1});
  CHECK(one.semiring_closure == std::vector<int>{1});
}

TEST_CASE("empty generator set is rejected") {
  CHECK_THROWS_AS(generated_subalgebras(fixtures::boolean_semiring(), {}),
                  PreconditionError);
}

TEST_CASE("generated subalgebras are monotone") {
  auto S = flat_extension(quaternion_group());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> small, large;
    for (int i = 0; i < S.order(); ++i) {
      bool in_large = rng() % 3 != 0;
      if (in_large) {
        large.push_back(i);
        if (rng() % 2) small.push_back(i);
      }
    }
    if (small.empty() || large.empty()) continue;
    auto cs = generated_subalgebras(S, small);
    auto cl = generated_subalgebras(S, large);
    CHECK(std::includes(cl.semigroup_closure.begin(),
                        cl.semigroup_closure.end(),
                        cs.semigroup_closure.begin(),
                        cs.semigroup_closure.end()));
    CHECK(std::includes(cl.semiring_closure.begin(), cl.semiring_closure.end(),
                        cs.semiring_closure.begin(),
                        cs.semiring_closure.end()));
  }
}

TEST_CASE("isomorphism finds the identity on equal tables") {
  auto B = fixtures::boolean_semiring();
  auto f = are_isomorphic(B, B);
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<int>{0, 1});
}

TEST_CASE("different orders are never isomorphic") {
  CHECK_FALSE(are_isomorphic(fixtures::flat_z2_by_hand(),
                             fixtures::boolean_semiring())
                  .has_value());
}

TEST_CASE("isomorphism recovers a relabeling permutation") {
  auto S = fixtures::flat_z2_by_hand();
  // Relabel by p: 0->1, 1->2, 2->0.
  std::vector<int> p = {1, 2, 0};
  const int k = 3;
  std::vector<int> add(k * k), mul(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      add[p[a] * k + p[b]] = p[S.add(a, b)];
      mul[p[a] * k + p[b]] = p[S.mul(a, b)];
    }
  FiniteSemiring relabeled(k, add, mul);
  auto f = are_isomorphic(S, relabeled);
  REQUIRE(f.has_value());
  // The flat extension of Z_2 is rigid, so the permutation comes back.
  CHECK(*f == p);
  auto g = are_isomorphic(relabeled, S);
  REQUIRE(g.has_value());
  CHECK(*g == std::vector<int>{2, 0, 1});  // p^{-1}
}

TEST_CASE("isomorphism is an equivalence on a small family") {
  std::vector<FiniteSemiring> family = {
      fixtures::boolean_semiring(), fixtures::flat_z2_by_hand(),
      fixtures::doubled_chain3(), fixtures::doubled_chain2()};
  for (const auto& a : family) CHECK(are_isomorphic(a, a).has_value());
  for (const auto& a : family)
    for (const auto& b : family) {
      auto f = are_isomorphic(a, b);
      auto g = are_isomorphic(b, a);
      CHECK(f.has_value() == g.has_value());
      if (f && g) {
        // The inverse mapping witnesses the converse direction.
        for (int i = 0; i < a.order(); ++i) CHECK((*g)[(*f)[i]] == i);
      }
    }
}

TEST_CASE("canonical tables agree exactly on isomorphism classes") {
  auto B = fixtures::boolean_semiring();
  auto doubled = fixtures::doubled_chain2();
  CHECK(canonical_tables(B) != canonical_tables(doubled));

  auto S = fixtures::flat_z2_by_hand();
  std::vector<int> p = {2, 0, 1};
  const int k = 3;
  std::vector<int> add(k * k), mul(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      add[p[a] * k + p[b]] = p[S.add(a, b)];
      mul[p[a] * k + p[b]] = p[S.mul(a, b)];
    }
  CHECK(canonical_tables(S) == canonical_tables(FiniteSemiring(k, add, mul)));
}

TEST_CASE("semiring direct product is componentwise") {
  auto B = fixtures::boolean_semiring();
  auto P = direct_product(B, B);
  CHECK(P.order() == 4);
  CHECK(validate_axioms(P).ok());
  // (1,0) + (0,1) = (1,1); (1,0) * (0,1) = (0,0)
  CHECK(P.add(2, 1) == 3);
  CHECK(P.mul(2, 1) == 0);
}

TEST_CASE("group helpers: cyclic group of order 4") {
  auto G = cyclic_group(4);
  CHECK(validate_group(G).ok());
  CHECK(G.exponent() == 4);
  CHECK(G.element_order(1) == 4);
  CHECK(G.element_order(2) == 2);
  CHECK(G.inverse(1) == 3);
  CHECK(G.is_abelian());
}

TEST_CASE("group validation reports failures") {
  FiniteGroup bad(2, {0, 0, 0, 0}, 0);
  auto report = validate_group(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().what == "identity");
}

TEST_CASE("power index and period") {
  auto S = fixtures::flat_z2_by_hand();
  auto [index, period] = power_index_period(S, 1);
  CHECK(index == 1);
  CHECK(period == 2);
  CHECK(idempotent_power(S, 1) == 0);  // a^2 = e
  CHECK(idempotent_power(S, 2) == 2);  // zero is idempotent
}

TEST_CASE("subgroup closure includes the identity") {
  auto G = cyclic_group(6);
  CHECK(subgroup_closure(G, {2}) == std::vector<int>{0, 2, 4});
  CHECK(subgroup_closure(G, {3}) == std::vector<int>{0, 3});
}

TEST_SUITE_END();
