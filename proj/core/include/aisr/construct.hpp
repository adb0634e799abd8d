#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aisr/algebra.hpp"

namespace aisr {

// Group G with an adjoined multiplicatively absorbing zero (placed at the
// last index) and the flat addition a+b = a when a=b, else 0. Membership of
// the result in M_{d+1}, d the group exponent, is checked on construction,
// as are the flat-addition laws; a failure is a FalsificationError.
FiniteSemiring flat_extension(const FiniteGroup& G);

FiniteGroup cyclic_group(int m);  // m >= 1; identity 0

// The 8-element quaternion group on {1,-1,i,-i,j,-j,k,-k} with
// i^2 = j^2 = k^2 = ijk = -1. Non-abelian of exponent 4.
FiniteGroup quaternion_group();

// The p^3-element group of exponent p (p an odd prime), carrier a^i b^j c^k
// indexed by (i,j,k) in [0,p)^3 with
//   a^i b^j c^k * a^m b^n c^r = a^{i+m} b^{j+km+n} c^{k+r}  (mod p).
FiniteGroup heisenberg_group(int p);

struct SylowEntry {
  int prime = 0;
  int order = 0;              // q^a, the full q-part of |G|
  std::vector<int> subgroup;  // one Sylow q-subgroup, ascending
  bool abelian = true;
};

struct SylowReport {
  std::vector<SylowEntry> entries;  // ascending prime order
  bool all_abelian = true;
};

// One Sylow subgroup per prime divisor, found by normalizer climbing.
// Guarded to |G| <= 64.
SylowReport sylow_abelian_report(const FiniteGroup& G);

// Builder expressions: zn:<m>, q8, gp:<p>, prod(<g>,<g>), flat(<g>).
Algebra build_named_algebra(std::string_view expr);

// True when the expression parses as a builder name (used to distinguish
// builder arguments from file paths).
bool looks_like_builder(std::string_view expr);

}  // namespace aisr
