#include <filesystem>
#include <set>

#include "aisr/construct.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aisr;

namespace {

// Independent oracle at order 2: scan every pair of 2x2 tables, keep the
// valid members of the variety, and deduplicate by the two relabelings.
std::set<std::pair<std::vector<int>, std::vector<int>>> order2_full_scan(
    const VarietySpec& V) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> classes;
  auto canon2 = [](std::vector<int> add, std::vector<int> mul) {
    // Relabel by the swap 0<->1.
    std::vector<int> add2(4), mul2(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        add2[(1 - a) * 2 + (1 - b)] = 1 - add[a * 2 + b];
        mul2[(1 - a) * 2 + (1 - b)] = 1 - mul[a * 2 + b];
      }
    auto original = std::make_pair(add, mul);
    auto swapped = std::make_pair(add2, mul2);
    return std::min(original, swapped);
  };
  for (int am = 0; am < 16; ++am)
    for (int mm = 0; mm < 16; ++mm) {
      std::vector<int> add(4), mul(4);
      for (int cell = 0; cell < 4; ++cell) {
        add[cell] = (am >> cell) & 1;
        mul[cell] = (mm >> cell) & 1;
      }
      FiniteSemiring S(2, add, mul);
      if (!validate_axioms(S).ok()) continue;
      if (!member_of(S, V)) continue;
      classes.insert(canon2(add, mul));
    }
  return classes;
}

// Independent oracle at order 3: every symmetric idempotent addition table
// crossed with every multiplication table, filtered by the axioms and the
// variety, deduplicated by all six relabelings.
std::set<std::pair<std::vector<int>, std::vector<int>>> order3_full_scan(
    const VarietySpec& V) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> classes;
  const int k = 3;
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int a01 = 0; a01 < 3; ++a01)
    for (int a02 = 0; a02 < 3; ++a02)
      for (int a12 = 0; a12 < 3; ++a12) {
        std::vector<int> add = {0, a01, a02, a01, 1, a12, a02, a12, 2};
        for (long long code = 0; code < 19683; ++code) {  // 3^9
          std::vector<int> mul(9);
          long long c = code;
          for (int cell = 0; cell < 9; ++cell) {
            mul[cell] = static_cast<int>(c % 3);
            c /= 3;
          }
          FiniteSemiring S(3, add, mul);
          if (!validate_axioms(S).ok()) continue;
          if (!member_of(S, V)) continue;
          std::pair<std::vector<int>, std::vector<int>> best;
          for (const auto& p : perms) {
            std::vector<int> ra(9), rm(9);
            for (int x = 0; x < k; ++x)
              for (int y = 0; y < k; ++y) {
                ra[p[x] * k + p[y]] = p[add[x * k + y]];
                rm[p[x] * k + p[y]] = p[mul[x * k + y]];
              }
            auto candidate = std::make_pair(std::move(ra), std::move(rm));
            if (best.first.empty() || candidate < best) best = candidate;
          }
          classes.insert(best);
        }
      }
  return classes;
}

}  // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("order 1 has exactly the trivial algebra") {
  for (const char* name : {"sr2", "m2", "m3"}) {
    auto members = enumerate_order(1, VarietySpec::from_name(name));
    REQUIRE(members.size() == 1);
    CHECK(members[0].order() == 1);
  }
}

TEST_CASE("order 2 catalog matches the independent full scan") {
  for (const char* name : {"sr2", "m2", "sr3", "m3"}) {
    auto V = VarietySpec::from_name(name);
    auto catalog = enumerate_order(2, V);
    auto oracle = order2_full_scan(V);
    REQUIRE_MESSAGE(catalog.size() == oracle.size(), name);
    for (const auto& S : catalog)
      CHECK(oracle.contains(canonical_tables(S)));
  }
}

TEST_CASE("order 3 catalog matches the independent full scan") {
  for (const char* name : {"m3", "sr2"}) {
    auto V = VarietySpec::from_name(name);
    auto catalog = enumerate_order(3, V);
    auto oracle = order3_full_scan(V);
    REQUIRE_MESSAGE(catalog.size() == oracle.size(), name);
    for (const auto& S : catalog)
      CHECK(oracle.contains(canonical_tables(S)));
  }
}

TEST_CASE("M_2 members double a semilattice") {
  // x+y = xy forces the two tables to coincide, so the counts are the
  // semilattice counts: 1, 1, 2 for orders 1..3.
  auto catalog = enumerate_up_to(3, VarietySpec::mn(2));
  CHECK(catalog.counts_per_order == std::vector<int>{1, 1, 2});
  for (const auto& entry : catalog.entries)
    CHECK(entry.algebra.add_table() == entry.algebra.mul_table());
}

TEST_CASE("M_3 catalog at order 3 contains the flat extension of Z_2") {
  auto members = enumerate_order(3, VarietySpec::mn(3));
  bool found = false;
  for (const auto& S : members)
    if (are_isomorphic(S, fixtures::flat_z2_by_hand()).has_value())
      found = true;
  CHECK(found);
}

TEST_CASE("catalog members are valid, inside the variety, pairwise distinct") {
  for (const char* name : {"sr2", "m3"}) {
    auto V = VarietySpec::from_name(name);
    for (int k = 1; k <= 3; ++k) {
      auto members = enumerate_order(k, V);
      for (const auto& S : members) {
        CHECK(validate_axioms(S).ok());
        CHECK(member_of(S, V));
      }
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          CHECK_FALSE(are_isomorphic(members[i], members[j]).has_value());
    }
  }
}

TEST_CASE("isomorphism is an equivalence across the catalog") {
  auto members = enumerate_order(3, VarietySpec::mn(3));
  for (const auto& a : members) {
    auto self = are_isomorphic(a, a);
    REQUIRE(self.has_value());
    for (const auto& b : members) {
      auto f = are_isomorphic(a, b);
      CHECK(f.has_value() == are_isomorphic(b, a).has_value());
      if (!f) continue;
      for (const auto& c : members) {
        auto g = are_isomorphic(b, c);
        if (!g) continue;
        // The composition witnesses transitivity.
        std::vector<int> composed(a.order());
        for (int i = 0; i < a.order(); ++i) composed[i] = (*g)[(*f)[i]];
        for (int x = 0; x < a.order(); ++x)
          for (int y = 0; y < a.order(); ++y) {
            CHECK(composed[a.add(x, y)] == c.add(composed[x], composed[y]));
            CHECK(composed[a.mul(x, y)] == c.mul(composed[x], composed[y]));
          }
      }
    }
  }
}

TEST_CASE("enumeration is guarded") {
  CHECK_THROWS_AS(enumerate_order(5, VarietySpec::mn(2)), ResourceError);
  CHECK_THROWS_AS(enumerate_order(2, VarietySpec::gn(2)), PreconditionError);
}

TEST_CASE("catalog files are stable and round trip") {
  auto catalog = enumerate_up_to(3, VarietySpec::mn(3));
  auto dir = std::filesystem::path("catalog-test-tmp");
  std::filesystem::remove_all(dir);
  write_catalog(catalog, dir.string());

  REQUIRE(std::filesystem::exists(dir / "m3_k1_000.alg"));
  for (const auto& entry : catalog.entries) {
    auto path = dir / (entry.stem + ".alg");
    REQUIRE_MESSAGE(std::filesystem::exists(path), entry.stem);
    auto back = read_algebra_file(path.string());
    CHECK(std::get<FiniteSemiring>(back).same_tables(entry.algebra));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("proposition report on small catalogs") {
  auto m2 = enumerate_up_to(3, VarietySpec::mn(2));
  auto r2 = verify_proposition(m2);
  CHECK(r2.ok());
  // The only subdirectly irreducible member of M_2 up to order 3 is the
  // flat extension of the trivial group.
  CHECK(r2.si_count == 1);

  auto m3 = enumerate_up_to(3, VarietySpec::mn(3));
  auto r3 = verify_proposition(m3);
  CHECK(r3.ok());
  // Adds the flat extension of Z_2.
  CHECK(r3.si_count == 2);
}

TEST_SUITE_END();
