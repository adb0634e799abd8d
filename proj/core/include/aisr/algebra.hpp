#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aisr/errors.hpp"

namespace aisr {

// Finite semiring on the carrier {0, ..., k-1}, given by two k-by-k operation
// tables stored row-major. Element names are display-only; every algorithm
// works on indices. Values are immutable after construction.
class FiniteSemiring {
 public:
  // Throws StructuralError on wrong dimensions, out-of-range entries, or a
  // names list whose length differs from the order.
  FiniteSemiring(int order, std::vector<int> add, std::vector<int> mul,
                 std::vector<std::string> names = {});

  int order() const { return order_; }
  int add(int a, int b) const { return add_[a * order_ + b]; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }

  // a^e under multiplication, e >= 1.
  int power(int a, int e) const;

  bool has_names() const { return !names_.empty(); }
  // The declared name, or the decimal index when no names were given.
  std::string element_name(int a) const;
  const std::vector<std::string>& names() const { return names_; }

  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& mul_table() const { return mul_; }

  // Table equality; names are ignored.
  bool same_tables(const FiniteSemiring& other) const;

 private:
  int order_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<std::string> names_;
};

// Finite group as one operation table plus a distinguished identity element.
// Construction checks shape only; validate_group decides the group axioms.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> mul, int identity,
              std::vector<std::string> names = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int identity() const { return identity_; }

  int power(int a, int e) const;  // e >= 0; a^0 is the identity
  // Two-sided inverse, or -1 when none exists (invalid table).
  int inverse(int a) const;
  // Least t >= 1 with a^t = identity, or 0 when the powers never reach it.
  int element_order(int a) const;
  // lcm of the element orders; 0 when some element has no order.
  int exponent() const;
  bool is_abelian() const;

  bool has_names() const { return !names_.empty(); }
  std::string element_name(int a) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& mul_table() const { return mul_; }

  bool same_tables(const FiniteGroup& other) const;

 private:
  int order_;
  std::vector<int> mul_;
  int identity_;
  std::vector<std::string> names_;
};

using Algebra = std::variant<FiniteSemiring, FiniteGroup>;

// The fixed list of laws validate_axioms decides, in report order.
enum class Law {
  kAddCommutative,
  kAddAssociative,
  kAddIdempotent,
  kMulAssociative,
  kLeftDistributive,
  kRightDistributive,
};

std::string law_name(Law law);

struct LawViolation {
  Law law;
  // First failing tuple in lexicographic scan order; unused slots are -1.
  std::array<int, 3> witness;
};

struct AxiomReport {
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
  // One line per violated law, with evaluated values on both sides.
  std::string describe(const FiniteSemiring& S) const;
};

// Exhaustive check of the ai-semiring laws. The report is empty iff (S,+) is
// a commutative idempotent semigroup, (S,*) a semigroup, and both
// distributive laws hold.
AxiomReport validate_axioms(const FiniteSemiring& S);

struct GroupViolation {
  std::string what;  // "associativity", "identity", "inverses"
  std::array<int, 3> witness;
};

struct GroupReport {
  std::vector<GroupViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe(const FiniteGroup& G) const;
};

GroupReport validate_group(const FiniteGroup& G);

struct SubsetClosure {
  std::vector<int> generators;         // sorted, deduplicated
  std::vector<int> semigroup_closure;  // least mul-closed superset, sorted
  std::vector<int> semiring_closure;   // least (+,*)-closed superset, sorted
};

// Closes the generator set under the operations. Also recomputes the semiring
// closure as the additive closure of the semigroup closure and checks
// |<A>| <= 2^|<A>_s|; a failure of either throws FalsificationError with a
// witness (possible only on tables that are not semirings).
SubsetClosure generated_subalgebras(const FiniteSemiring& S,
                                    const std::vector<int>& generators);

// Searches for a bijection f with f(a+b)=f(a)+f(b) and f(ab)=f(a)f(b),
// backtracking over images in increasing order with invariant pruning
// (idempotency, power index/period, row profiles). Returns the
// lexicographically least isomorphism, or nothing.
std::optional<std::vector<int>> are_isomorphic(const FiniteSemiring& S1,
                                               const FiniteSemiring& S2);

std::optional<std::vector<int>> are_isomorphic(const FiniteGroup& G1,
                                               const FiniteGroup& G2);

// Lexicographically least (add, mul) table pair over all relabelings.
// Guarded to order <= 8.
std::pair<std::vector<int>, std::vector<int>> canonical_tables(
    const FiniteSemiring& S);

// Componentwise direct products.
FiniteSemiring direct_product(const FiniteSemiring& S1,
                              const FiniteSemiring& S2);
FiniteGroup direct_product(const FiniteGroup& G1, const FiniteGroup& G2);

// Index and period of the power sequence a, a^2, a^3, ... : the least (i, p)
// with a^(i+p) = a^i, i >= 1, p >= 1.
std::pair<int, int> power_index_period(const FiniteSemiring& S, int a);

// The unique idempotent among the powers of a.
int idempotent_power(const FiniteSemiring& S, int a);

// Subgroup generated by a subset (closure under mul; finiteness supplies
// inverses). Sorted. The identity is always included.
std::vector<int> subgroup_closure(const FiniteGroup& G,
                                  const std::vector<int>& generators);

}  // namespace aisr
