#pragma once

#include <string>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/term.hpp"

namespace aisr {

struct CatalogEntry {
  FiniteSemiring algebra;  // stored in canonical (lex-least) form
  std::string stem;        // e.g. "m3_k3_004"
};

struct Catalog {
  VarietySpec variety;
  int max_order = 0;
  std::vector<CatalogEntry> entries;  // ascending order, then canonical form
  std::vector<int> counts_per_order;  // counts_per_order[k-1]
};

// All members of the variety with exactly k elements, one per isomorphism
// class. Addition tables are enumerated as semilattices up to relabeling;
// multiplications are filled in by backtracking under associativity,
// distributivity and the exponent law; survivors are filtered by full
// membership and deduplicated by canonical form. Guarded to k <= 4.
std::vector<FiniteSemiring> enumerate_order(int k, const VarietySpec& V);

Catalog enumerate_up_to(int max_order, const VarietySpec& V);

// Writes one file per entry, "<stem>.alg", into dir (created if needed).
void write_catalog(const Catalog& catalog, const std::string& dir);

struct PropositionReport {
  int checked = 0;
  int si_count = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For every catalog member of order >= 2: subdirect irreducibility,
// congruence simplicity and a 0-group multiplicative reduct must coincide,
// and every subdirectly irreducible member must be isomorphic to the flat
// extension of its group part.
PropositionReport verify_proposition(const Catalog& catalog);

}  // namespace aisr
