#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/partition.hpp"

namespace aisr {

struct IdempotentSubsemiring {
  std::vector<int> elements;  // original indices of E(S), ascending
  FiniteSemiring algebra;     // induced tables on E(S)
  // Position of an original index inside elements, or -1.
  int index_of(int original) const;
};

// E(S) = {a : aa = a} with the induced subsemiring. Closure of E(S) under
// both operations is checked; a failure is reported as FalsificationError
// (it falsifies the claimed variety membership of S).
IdempotentSubsemiring idempotents(const FiniteSemiring& S);

// Green's relations of the multiplicative reduct, from principal ideal
// comparisons over S with a formal identity adjoined.
struct GreenData {
  Partition l, r, h, d;
};

GreenData green_relations(const FiniteSemiring& S);

struct GreenCheckReport {
  // a H b  iff  a^{n-1} = b^{n-1}
  bool h_power_match = true;
  std::pair<int, int> h_witness{-1, -1};
  // a D b  iff  a^{n-1}b^{n-1}a^{n-1} = a^{n-1} and b^{n-1}a^{n-1}b^{n-1} = b^{n-1}
  bool d_power_match = true;
  std::pair<int, int> d_witness{-1, -1};
  bool d_equals_h = true;
  std::pair<int, int> dh_witness{-1, -1};
  bool ok(bool require_dh) const {
    return h_power_match && d_power_match && (!require_dh || d_equals_h);
  }
};

// Cross-checks the ideal-computed relations against the power
// characterizations valid in Sr(n,1); d_equals_h is informational and is
// expected only for members of M_n.
GreenCheckReport verify_green_characterizations(const FiniteSemiring& S,
                                                int n);

// Every element lies in a subgroup: each element is H-related to its
// idempotent power.
bool is_completely_regular(const FiniteSemiring& S);

struct CliffordDecomposition {
  Partition classes;           // maximal subgroups G_alpha (the H-classes)
  std::vector<int> semilattice;  // class_count x class_count product table
  int class_count = 0;
  int structure_product(int alpha, int beta) const {
    return semilattice[alpha * class_count + beta];
  }
};

// Completely regular with central idempotents; returns the semilattice-of-
// groups decomposition when it applies.
std::optional<CliffordDecomposition> is_clifford(const FiniteSemiring& S);

struct ZeroGroup {
  int zero = -1;                    // the multiplicatively absorbing element
  std::vector<int> group_elements;  // remaining carrier, ascending
  FiniteGroup group;                // induced group on those elements
};

// Detects a group-with-adjoined-zero multiplicative reduct (order >= 2).
std::optional<ZeroGroup> is_zero_group(const FiniteSemiring& S);

struct OrderReport {
  // All pairs of each relation, lexicographic: a <=+ b iff a+b=b;
  // a <=. b iff a = eb for some idempotent e.
  std::vector<std::pair<int, int>> leq_plus;
  std::vector<std::pair<int, int>> leq_mul;
  bool plus_is_partial_order = false;
  bool mul_is_partial_order = false;
  std::string order_violation;  // empty when both are partial orders
  // <=+ must be the converse of <=. ; failures are listed, not repaired.
  bool duality_holds = false;
  std::vector<std::pair<int, int>> duality_violations;
  // When E(S) = {z, u} with z <=. u, the greatest lower bound of {a, u}
  // under <=. is checked to exist for every a.
  bool glb_checked = false;
  int top_idempotent = -1;
  std::vector<int> glb_missing;
};

// Requires membership in M_n (PreconditionError otherwise).
OrderReport partial_orders(const FiniteSemiring& S, int n);

}  // namespace aisr
