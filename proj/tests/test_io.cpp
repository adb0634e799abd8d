#include <sstream>

#include "aisr/construct.hpp"
#include "aisr/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aisr;

TEST_SUITE_BEGIN("io");

TEST_CASE("semiring file with comments and names") {
  const char* text =
      "# flat extension of Z_2\n"
      "semiring 3\n"
      "0 2 2\n"
      "2 1 2   # add rows\n"
      "2 2 2\n"
      "mul\n"
      "0 1 2\n"
      "1 0 2\n"
      "2 2 2\n"
      "names e a 0\n";
  auto S = read_semiring_text(text);
  CHECK(S.same_tables(fixtures::flat_z2_by_hand()));
  CHECK(S.element_name(0) == "e");
  CHECK(S.element_name(2) == "0");
}

TEST_CASE("group file") {
  auto G = read_group_text("group 2 0\n0 1\n1 0\n");
  CHECK(G.order() == 2);
  CHECK(G.identity() == 0);
  CHECK(G.mul(1, 1) == 0);
}

TEST_CASE("write and read back") {
  auto S = flat_extension(quaternion_group());
  auto back = read_semiring_text(to_text(S));
  CHECK(back.same_tables(S));
  CHECK(back.names() == S.names());

  auto G = heisenberg_group(3);
  auto gback = read_group_text(to_text(G));
  CHECK(gback.same_tables(G));
}

TEST_CASE("malformed inputs fail structurally") {
  CHECK_THROWS_AS(read_algebra_text("semiring 2\n0 1\n1 0\n"),
                  StructuralError);  // missing mul
  CHECK_THROWS_AS(read_algebra_text("semiring 2\n0 1\n1 0\nmul\n0 0\n0"),
                  StructuralError);  // truncated
  CHECK_THROWS_AS(
      read_algebra_text("semiring 2\n0 1\n1 5\nmul\n0 0\n0 1\n"),
      StructuralError);  // out of range
  CHECK_THROWS_AS(read_algebra_text("ring 2\n0 1\n1 0\n"), StructuralError);
  CHECK_THROWS_AS(
      read_algebra_text("group 2 0\n0 1\n1 0\nextra\n"),
      StructuralError);  // trailing tokens
  CHECK_THROWS_AS(read_semiring_text("group 1 0\n0\n"), StructuralError);
  CHECK_THROWS_AS(read_algebra_file("/nonexistent/alg"), StructuralError);
}

TEST_SUITE_END();
