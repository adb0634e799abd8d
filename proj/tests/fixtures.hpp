#pragma once

#include <vector>

#include "aisr/algebra.hpp"

// Hand-written tables used as independent expected values; none of these go
// through the construction helpers.
namespace fixtures {

// Two-element chain: + is max, * is min.
inline aisr::FiniteSemiring boolean_semiring() {
  return aisr::FiniteSemiring(2, {0, 1, 1, 1}, {0, 0, 0, 1});
}

// Same carrier with 1*1 = 0 and 1*0 = 1: multiplication is not associative.
inline aisr::FiniteSemiring broken_boolean() {
  return aisr::FiniteSemiring(2, {0, 1, 1, 1}, {0, 0, 1, 0});
}

// Z_2 with an absorbing zero appended: carrier {e=0, a=1, 0=2},
// a*a = e, x+y = x when x=y else 2.
inline aisr::FiniteSemiring flat_z2_by_hand() {
  return aisr::FiniteSemiring(3,
                              {0, 2, 2,   //
                               2, 1, 2,   //
                               2, 2, 2},  //
                              {0, 1, 2,   //
                               1, 0, 2,   //
                               2, 2, 2});
}

// Three-element chain 0 < 1 < 2 with both operations equal to join.
inline aisr::FiniteSemiring doubled_chain3() {
  std::vector<int> join = {0, 1, 2,   //
                           1, 1, 2,   //
                           2, 2, 2};  //
  return aisr::FiniteSemiring(3, join, join);
}

// Two-element chain with both operations equal to join.
inline aisr::FiniteSemiring doubled_chain2() {
  std::vector<int> join = {0, 1, 1, 1};
  return aisr::FiniteSemiring(2, join, join);
}

// + is max, * is constantly 0. Valid ai-semiring whose multiplicative
// reduct is not completely regular.
inline aisr::FiniteSemiring null_mul_semiring() {
  return aisr::FiniteSemiring(2, {0, 1, 1, 1}, {0, 0, 0, 0});
}

}  // namespace fixtures
