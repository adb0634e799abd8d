#include "aisr/congruence.hpp"
#include "aisr/construct.hpp"
#include "aisr/structure.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aisr;

TEST_SUITE_BEGIN("structure");

TEST_CASE("idempotents of flat extensions are the identity and zero") {
  auto z2 = fixtures::flat_z2_by_hand();
  auto E = idempotents(z2);
  CHECK(E.elements == std::vector<int>{0, 2});
  CHECK(E.algebra.order() == 2);

  auto z3 = flat_extension(cyclic_group(3));
  auto E3 = idempotents(z3);
  CHECK(E3.elements == std::vector<int>{0, 3});
  // The induced subsemiring is the flat extension of the trivial group.
  CHECK(are_isomorphic(E3.algebra, flat_extension(cyclic_group(1)))
            .has_value());

  auto q8 = flat_extension(quaternion_group());
  CHECK(idempotents(q8).elements == std::vector<int>{0, 8});
}

TEST_CASE("every element of B is idempotent") {
  auto E = idempotents(fixtures::boolean_semiring());
  CHECK(E.elements == std::vector<int>{0, 1});
  CHECK(E.algebra.same_tables(fixtures::boolean_semiring()));
}

TEST_CASE("index_of maps original elements") {
  auto E = idempotents(fixtures::flat_z2_by_hand());
  CHECK(E.index_of(0) == 0);
  CHECK(E.index_of(2) == 1);
  CHECK(E.index_of(1) == -1);
}

TEST_CASE("Green relations of a flat extension of Q_8") {
  auto S = flat_extension(quaternion_group());
  auto g = green_relations(S);
  // H-classes are the group part and the zero.
  CHECK(g.h.block_count() == 2);
  CHECK(g.h.same_block(0, 7));
  CHECK_FALSE(g.h.same_block(0, 8));
  CHECK(g.d == g.h);
}

TEST_CASE("Green relations of B are trivial") {
  auto g = green_relations(fixtures::boolean_semiring());
  CHECK(g.h.is_identity());
  CHECK(g.l.is_identity());
}

TEST_CASE("commutative reducts have coinciding relations") {
  for (const auto& S :
       {fixtures::flat_z2_by_hand(),
        direct_product(fixtures::boolean_semiring(),
                       fixtures::boolean_semiring())}) {
    auto g = green_relations(S);
    CHECK(g.l == g.r);
    CHECK(g.l == g.h);
    CHECK(g.l == g.d);
  }
}

TEST_CASE("GreenData laws: H is the meet, D the join") {
  for (const auto& S :
       {fixtures::boolean_semiring(), fixtures::flat_z2_by_hand(),
        fixtures::null_mul_semiring(), flat_extension(quaternion_group())}) {
    auto g = green_relations(S);
    CHECK(g.h == Partition::meet(g.l, g.r));
    CHECK(g.d == Partition::join(g.l, g.r));
    CHECK(g.h.refines(g.l));
    CHECK(g.h.refines(g.r));
    CHECK(g.l.refines(g.d));
    CHECK(g.r.refines(g.d));
  }
}

TEST_CASE("power characterizations hold across the variety members") {
  CHECK(verify_green_characterizations(fixtures::flat_z2_by_hand(), 3)
            .ok(true));
  CHECK(verify_green_characterizations(flat_extension(quaternion_group()), 5)
            .ok(true));
  CHECK(verify_green_characterizations(fixtures::boolean_semiring(), 2)
            .ok(true));
  CHECK(
      verify_green_characterizations(fixtures::doubled_chain3(), 2).ok(true));
}

TEST_CASE("complete regularity") {
  CHECK(is_completely_regular(fixtures::boolean_semiring()));
  CHECK(is_completely_regular(fixtures::flat_z2_by_hand()));
  CHECK(is_completely_regular(flat_extension(heisenberg_group(3))));
  CHECK_FALSE(is_completely_regular(fixtures::null_mul_semiring()));
}

TEST_CASE("Clifford decomposition of B is B itself") {
  auto clifford = is_clifford(fixtures::boolean_semiring());
  REQUIRE(clifford.has_value());
  CHECK(clifford->class_count == 2);
  CHECK(clifford->classes.is_identity());
  CHECK(clifford->semilattice == fixtures::boolean_semiring().mul_table());
}

TEST_CASE("Clifford decomposition of flat extensions") {
  auto clifford = is_clifford(flat_extension(quaternion_group()));
  REQUIRE(clifford.has_value());
  CHECK(clifford->class_count == 2);
  // Classes: the group part and the zero; the semilattice is the 2-chain.
  CHECK(clifford->structure_product(0, 1) == 1);
  CHECK(clifford->structure_product(0, 0) == 0);

  CHECK_FALSE(is_clifford(fixtures::null_mul_semiring()).has_value());
}

TEST_CASE("zero-group detection") {
  auto zg = is_zero_group(flat_extension(heisenberg_group(3)));
  REQUIRE(zg.has_value());
  CHECK(zg->zero == 27);
  CHECK(zg->group.order() == 27);
  CHECK_FALSE(zg->group.is_abelian());
  CHECK(zg->group.exponent() == 3);

  auto zg3 = is_zero_group(flat_extension(cyclic_group(3)));
  REQUIRE(zg3.has_value());
  CHECK(are_isomorphic(zg3->group, cyclic_group(3)).has_value());

  // B is the flat extension of the trivial group in disguise.
  auto zb = is_zero_group(fixtures::boolean_semiring());
  REQUIRE(zb.has_value());
  CHECK(zb->zero == 0);
  CHECK(zb->group.order() == 1);

  CHECK_FALSE(is_zero_group(direct_product(fixtures::boolean_semiring(),
                                           fixtures::boolean_semiring()))
                  .has_value());
  FiniteSemiring singleton(1, {0}, {0});
  CHECK_FALSE(is_zero_group(singleton).has_value());
}

TEST_CASE("partial orders on the flat extension of Z_2") {
  auto S = fixtures::flat_z2_by_hand();
  auto report = partial_orders(S, 3);
  CHECK(report.plus_is_partial_order);
  CHECK(report.mul_is_partial_order);
  CHECK(report.duality_holds);

  auto contains = [](const std::vector<std::pair<int, int>>& v, int a, int b) {
    return std::find(v.begin(), v.end(), std::make_pair(a, b)) != v.end();
  };
  // e <=+ 0 and dually 0 <=. e.
  CHECK(contains(report.leq_plus, 0, 2));
  CHECK(contains(report.leq_mul, 2, 0));
  // Reflexive pairs are always present.
  CHECK(contains(report.leq_plus, 1, 1));
  // e and a are incomparable under <=. .
  CHECK_FALSE(contains(report.leq_mul, 0, 1));
  CHECK_FALSE(contains(report.leq_mul, 1, 0));

  // Greatest lower bounds with the top idempotent exist.
  CHECK(report.glb_checked);
  CHECK(report.top_idempotent == 0);
  CHECK(report.glb_missing.empty());
}

TEST_CASE("partial orders demand membership in M_n") {
  CHECK_THROWS_AS(partial_orders(fixtures::boolean_semiring(), 2),
                  PreconditionError);
}

TEST_CASE("duality also holds on catalog-style members") {
  auto report = partial_orders(fixtures::doubled_chain3(), 2);
  CHECK(report.duality_holds);
  CHECK(report.plus_is_partial_order);
  CHECK(report.mul_is_partial_order);
}

TEST_SUITE_END();
