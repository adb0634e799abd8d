#include <random>

#include "aisr/construct.hpp"
#include "aisr/term.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aisr;

namespace {

SemiringTerm random_term(std::mt19937& rng, int max_vars = 3) {
  std::uniform_int_distribution<int> word_count(1, 3);
  std::uniform_int_distribution<int> word_len(1, 4);
  std::uniform_int_distribution<int> var(0, max_vars - 1);
  std::vector<Word> words;
  int count = word_count(rng);
  for (int w = 0; w < count; ++w) {
    std::vector<int> letters;
    int len = word_len(rng);
    for (int i = 0; i < len; ++i) letters.push_back(var(rng));
    words.emplace_back(std::move(letters));
  }
  return SemiringTerm(std::move(words));
}

Assignment random_assignment(std::mt19937& rng, int vars, int order) {
  Assignment a(vars);
  for (int& v : a) v = static_cast<int>(rng() % order);
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("term");

TEST_CASE("sum is idempotent union") {
  auto x = SemiringTerm::single(Word::variable(0));
  CHECK(term_sum(x, x) == x);
}

TEST_CASE("product is setwise concatenation") {
  auto x = SemiringTerm::single(Word::variable(0));
  SemiringTerm yz({Word::variable(1), Word::variable(2)});
  auto prod = term_product(x, yz);
  SemiringTerm expected({Word({0, 1}), Word({0, 2})});
  CHECK(prod == expected);
}

TEST_CASE("product distributes over sum at the term level") {
  auto x = SemiringTerm::single(Word::variable(0));
  auto y = SemiringTerm::single(Word::variable(1));
  auto z = SemiringTerm::single(Word::variable(2));
  auto left = term_product(term_sum(x, y), z);
  SemiringTerm expected({Word({0, 2}), Word({1, 2})});
  CHECK(left == expected);
  CHECK(left == term_sum(term_product(x, z), term_product(y, z)));
}

TEST_CASE("term operations satisfy the ai-semiring laws") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_term(rng);
    auto b = random_term(rng);
    auto c = random_term(rng);
    CHECK(term_sum(a, b) == term_sum(b, a));
    CHECK(term_sum(term_sum(a, b), c) == term_sum(a, term_sum(b, c)));
    CHECK(term_sum(a, a) == a);
    CHECK(term_product(term_product(a, b), c) ==
          term_product(a, term_product(b, c)));
    CHECK(term_product(a, term_sum(b, c)) ==
          term_sum(term_product(a, b), term_product(a, c)));
    CHECK(term_product(term_sum(a, b), c) ==
          term_sum(term_product(a, c), term_product(b, c)));
  }
}

TEST_CASE("evaluation basics") {
  auto B = fixtures::boolean_semiring();
  auto x = SemiringTerm::single(Word::variable(0));
  CHECK(eval_term(x, B, {1}) == 1);

  // {x*y, x} at x=1, y=0 in the boolean semiring: max(min(1,0), 1) = 1.
  SemiringTerm t({Word({0, 1}), Word({0})});
  CHECK(eval_term(t, B, {1, 0}) == 1);

  // x^3 in the flat extension of Z_2 at x=a: a^2 = e, a^3 = a.
  auto S = fixtures::flat_z2_by_hand();
  auto cube = SemiringTerm::single(Word::power(0, 3));
  CHECK(eval_term(cube, S, {1}) == 1);
}

TEST_CASE("unassigned variables are rejected") {
  auto B = fixtures::boolean_semiring();
  SemiringTerm t({Word({0, 1})});
  CHECK_THROWS_AS(eval_term(t, B, {1}), PreconditionError);
  CHECK_THROWS_AS(eval_term(t, B, {1, -1}), PreconditionError);
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937 rng(1234);
  for (const auto& S :
       {fixtures::boolean_semiring(), fixtures::flat_z2_by_hand(),
        fixtures::doubled_chain3()}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto t1 = random_term(rng);
      auto t2 = random_term(rng);
      auto a = random_assignment(rng, 3, S.order());
      CHECK(eval_term(term_sum(t1, t2), S, a) ==
            S.add(eval_term(t1, S, a), eval_term(t2, S, a)));
      CHECK(eval_term(term_product(t1, t2), S, a) ==
            S.mul(eval_term(t1, S, a), eval_term(t2, S, a)));
    }
  }
}

TEST_CASE("term value does not depend on the summation order") {
  std::mt19937 rng(4321);
  for (const auto& S :
       {fixtures::boolean_semiring(), fixtures::flat_z2_by_hand(),
        fixtures::doubled_chain3()}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto t = random_term(rng);
      auto a = random_assignment(rng, 3, S.order());
      int reversed = -1;
      for (auto it = t.words().rbegin(); it != t.words().rend(); ++it) {
        int wv = eval_word(*it, S, a);
        reversed = reversed < 0 ? wv : S.add(reversed, wv);
      }
      CHECK(eval_term(t, S, a) == reversed);
    }
  }
}

TEST_CASE("satisfies with exhaustive assignments") {
  auto S = fixtures::flat_z2_by_hand();
  CHECK(satisfies(S, parse_identity("x1^3 = x1")).holds);
  CHECK(satisfies(S, parse_identity("x1^2 + x2^2 = x1^2*x2^2")).holds);

  auto B = fixtures::boolean_semiring();
  auto r = satisfies(B, parse_identity("x1 + x2 = x1*x2"));
  REQUIRE_FALSE(r.holds);
  // First failing assignment in lexicographic order: (x1,x2) = (0,1),
  // where max gives 1 and min gives 0.
  CHECK(r.counterexample ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(r.lhs_value == 1);
  CHECK(r.rhs_value == 0);
}

TEST_CASE("variety membership") {
  auto B = fixtures::boolean_semiring();
  CHECK(member_of(B, VarietySpec::sr(2)));
  CHECK_FALSE(member_of(B, VarietySpec::mn(2)));

  CHECK(member_of(flat_extension(quaternion_group()), VarietySpec::sr(5)));
  CHECK(member_of(flat_extension(quaternion_group()), VarietySpec::mn(5)));
  CHECK(member_of(flat_extension(heisenberg_group(3)), VarietySpec::sr(4)));

  auto failure = check_membership(B, VarietySpec::mn(2));
  CHECK(failure.failed_identity == "mn-law");
  CHECK_FALSE(failure.failure.holds);
}

TEST_CASE("builtin identities instantiate at each exponent") {
  auto at3 = builtin_identities(3);
  REQUIRE(at3.size() == 7);
  CHECK(at3[4].name == "sum-splitting");
  CHECK(at3[4].identity.lhs ==
        parse_identity("x1 + x2 = x1*x2^2 + x1^2*x2").lhs);
  CHECK(at3[4].identity.rhs ==
        parse_identity("x1 + x2 = x1*x2^2 + x1^2*x2").rhs);

  // n = 2: the power-sum identity collapses to x = x after deduplication.
  auto at2 = builtin_identities(2);
  CHECK(at2[5].name == "power-sum-collapse");
  CHECK(at2[5].identity.lhs == at2[5].identity.rhs);
  CHECK(render_identity(at2[5].identity) == "x1 \xE2\x89\x88 x1");

  auto at4 = builtin_identities(4);
  CHECK(at4[6].identity.lhs ==
        parse_identity("x1*x2*x1*x2*x1*x2 = x1^3*x2^3").lhs);
  CHECK(at4[6].identity.rhs ==
        parse_identity("x1*x2*x1*x2*x1*x2 = x1^3*x2^3").rhs);

  CHECK_THROWS_AS(builtin_identities(1), PreconditionError);
}

TEST_CASE("derived identities hold on the flat extension of Z_2") {
  auto S = fixtures::flat_z2_by_hand();
  for (const auto& ni : derived_identities(3))
    CHECK_MESSAGE(satisfies(S, ni.identity).holds, ni.name);
}

TEST_CASE("identity parser round trips") {
  for (const char* text :
       {"x1*x2^2 + x1 \xE2\x89\x88 x2*x1", "x1^3 = x1",
        "x1 + x2 = x1*x2^2 + x1^2*x2"}) {
    auto id = parse_identity(text);
    auto again = parse_identity(render_identity(id));
    CHECK(again.lhs == id.lhs);
    CHECK(again.rhs == id.rhs);
  }
}

TEST_CASE("identity parser rejects malformed input") {
  CHECK_THROWS_AS(parse_identity("x1 +"), StructuralError);
  CHECK_THROWS_AS(parse_identity("x1 = x10"), StructuralError);
  CHECK_THROWS_AS(parse_identity("x0 = x1"), StructuralError);
  CHECK_THROWS_AS(parse_identity("y1 = x1"), StructuralError);
  CHECK_THROWS_AS(parse_identity("x1^0 = x1"), StructuralError);
  CHECK_THROWS_AS(parse_identity("x1"), StructuralError);
}

TEST_CASE("multiplicative-only varieties ignore addition") {
  CHECK(member_of(cyclic_group(4), VarietySpec::gn(5)));
  CHECK_FALSE(member_of(cyclic_group(4), VarietySpec::gn(4)));
  CHECK(member_of(quaternion_group(), VarietySpec::gn(5)));

  // The multiplicative reduct of B lies in Sg(2,1).
  auto B = fixtures::boolean_semiring();
  CHECK(satisfies_multiplicative(B, parse_identity("x1^2 = x1")).holds);
}

TEST_CASE("multiplicative checks reject identities with sums") {
  auto B = fixtures::boolean_semiring();
  CHECK_THROWS_AS(
      satisfies_multiplicative(B, parse_identity("x1 + x2 = x1*x2")),
      PreconditionError);
  CHECK_THROWS_AS(
      satisfies(cyclic_group(2), parse_identity("x1 + x2 = x1*x2")),
      PreconditionError);
}

TEST_CASE("variety presets parse from names") {
  CHECK(VarietySpec::from_name("sr3").display_name() == "Sr(3,1)");
  CHECK(VarietySpec::from_name("m4").display_name() == "M_4");
  CHECK(VarietySpec::from_name("g5").display_name() == "G(5,1)");
  CHECK(VarietySpec::from_name("sg2").display_name() == "Sg(2,1)");
  CHECK_THROWS_AS(VarietySpec::from_name("m1"), StructuralError);
  CHECK_THROWS_AS(VarietySpec::from_name("xyz"), StructuralError);
}

TEST_CASE("assignment budget is enforced") {
  auto big = flat_extension(cyclic_group(9));  // order 10
  std::vector<int> fwd, rev;
  for (int v = 0; v < 9; ++v) fwd.push_back(v);
  for (int v = 8; v >= 0; --v) rev.push_back(v);
  Identity id{SemiringTerm::single(Word(fwd)), SemiringTerm::single(Word(rev))};
  CHECK_THROWS_AS(satisfies(big, id), ResourceError);
}

TEST_SUITE_END();
