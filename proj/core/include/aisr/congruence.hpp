#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/partition.hpp"

namespace aisr {

struct CompatibilityWitness {
  int a = -1, b = -1, c = -1;
  char op = '+';  // '+', 'l' (left factor), 'r' (right factor)
  std::string describe(const FiniteSemiring& S) const;
};

// First compatibility violation of the equivalence, or nothing when it is a
// congruence. Scans pairs and translations in lexicographic order.
std::optional<CompatibilityWitness> compatibility_violation(
    const FiniteSemiring& S, const Partition& p);

// A partition compatible with both operations. Compatibility is checked on
// construction; an incompatible partition is rejected with the witness.
class Congruence {
 public:
  static Congruence checked(const FiniteSemiring& S, Partition p);

  const Partition& partition() const { return partition_; }
  int block_count() const { return partition_.block_count(); }
  bool is_identity() const { return partition_.is_identity(); }
  bool is_total() const { return partition_.is_total(); }

  bool operator==(const Congruence& o) const {
    return partition_ == o.partition_;
  }

 private:
  explicit Congruence(Partition p) : partition_(std::move(p)) {}
  Partition partition_;
};

// Least congruence identifying a and b: the seeded pair is closed under the
// unary translations x -> x+c, x -> xc, x -> cx interleaved with union-find
// equivalence closure, to fixpoint.
Congruence principal_congruence(const FiniteSemiring& S, int a, int b);

// Congruence generated by an arbitrary pair list (same engine).
Partition congruence_closure(const FiniteSemiring& S,
                             const std::vector<std::pair<int, int>>& pairs);

// Every congruence of S: the closure of {identity} and all principal
// congruences under pairwise join. Sorted finest first (descending block
// count, then lexicographic). Guarded to order <= 64.
std::vector<Congruence> all_congruences(const FiniteSemiring& S);

// Intersection of all non-identity congruences (equivalently of all
// principal congruences on distinct pairs), when it is itself non-identity.
// Requires order >= 2.
std::optional<Congruence> monolith(const FiniteSemiring& S);

bool is_subdirectly_irreducible(const FiniteSemiring& S);
bool is_congruence_simple(const FiniteSemiring& S);

// Independent oracle: scans every set partition of the carrier (restricted
// growth strings) and keeps the compatible ones. Shares no code with the
// closure engine. Guarded to order <= 8. Sorted finest first.
std::vector<Partition> congruences_by_exhaustive_scan(const FiniteSemiring& S);

// Extends a congruence rho on the idempotent subsemiring E(S) of a member
// of M_n to the whole carrier:
//   (a,b) in tau  iff  some e in E(S) has ea = eb, (e, a^{n-1}) in rho and
//   (a^{n-1}, b^{n-1}) in rho,
// where rho is given over E(S) positions (ascending idempotent order).
// The constructed relation is verified to be reflexive, symmetric,
// transitive and compatible, and to restrict to exactly rho; any failure is
// reported as FalsificationError rather than repaired.
Congruence extend_idempotent_congruence(const FiniteSemiring& S, int n,
                                        const Partition& rho);

// Upper covers in the congruence lattice, as indices into the input list
// (which must be the full congruence list).
std::vector<std::vector<int>> lattice_covers(
    const std::vector<Congruence>& lattice);

}  // namespace aisr
