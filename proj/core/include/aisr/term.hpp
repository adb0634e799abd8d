#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/errors.hpp"

namespace aisr {

// A nonempty word over the variables x1..x9 (stored as indices 0..8).
class Word {
 public:
  explicit Word(std::vector<int> letters);
  static Word variable(int v);
  // v repeated e times, e >= 1.
  static Word power(int v, int e);

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  Word concat(const Word& other) const;

  auto operator<=>(const Word& o) const { return letters_ <=> o.letters_; }
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  std::vector<int> letters_;
};

// A finite nonempty set of words: sum of its words. Kept sorted and
// deduplicated, so equal terms compare equal.
class SemiringTerm {
 public:
  explicit SemiringTerm(std::vector<Word> words);
  static SemiringTerm single(Word w);

  const std::vector<Word>& words() const { return words_; }
  // Distinct variables, ascending.
  std::vector<int> variables() const;

  bool operator==(const SemiringTerm& o) const { return words_ == o.words_; }

 private:
  std::vector<Word> words_;
};

// Sum is set union; product is the set of all pairwise concatenations.
SemiringTerm term_sum(const SemiringTerm& t1, const SemiringTerm& t2);
SemiringTerm term_product(const SemiringTerm& t1, const SemiringTerm& t2);

struct Identity {
  SemiringTerm lhs;
  SemiringTerm rhs;
  std::vector<int> variables() const;  // union of both sides, ascending
};

struct NamedIdentity {
  std::string name;
  Identity identity;
};

// Variable assignment as a dense vector indexed by variable id; -1 means
// unassigned.
using Assignment = std::vector<int>;

// Word value: left-to-right products. Throws PreconditionError when a
// variable is unassigned.
int eval_word(const Word& w, const FiniteSemiring& S, const Assignment& a);
// Term value: word values combined by add in ascending word order.
int eval_term(const SemiringTerm& t, const FiniteSemiring& S,
              const Assignment& a);

struct SatisfactionResult {
  bool holds = false;
  // First failing assignment in lexicographic order (lowest variable is the
  // most significant position), as (variable, element) pairs.
  std::vector<std::pair<int, int>> counterexample;
  int lhs_value = -1;
  int rhs_value = -1;
};

// Exhaustive check over all assignments; cost order^#variables.
SatisfactionResult satisfies(const FiniteSemiring& S, const Identity& id);

// Same check on a bare multiplication table (both sides must be single
// words). Used for semigroup and group varieties.
SatisfactionResult satisfies_multiplicative(const FiniteSemiring& S,
                                            const Identity& id);
SatisfactionResult satisfies(const FiniteGroup& G, const Identity& id);

struct VarietySpec {
  std::string name;          // machine name: "sr3", "m3", "g5", "sg4"
  int exponent = 2;          // the n of x^n = x
  std::vector<NamedIdentity> identities;
  bool multiplicative_only = false;

  static VarietySpec sr(int n);   // x^n = x
  static VarietySpec mn(int n);   // sr(n) plus x^{n-1}+y^{n-1} = x^{n-1}y^{n-1}
  static VarietySpec gn(int n);   // group variety of x^n = x
  static VarietySpec sgn(int n);  // semigroup variety of x^n = x
  // Parses "sr<k>", "m<k>", "g<k>", "sg<k>" with k >= 2.
  static VarietySpec from_name(std::string_view name);

  // "Sr(3,1)", "M_3", "G(5,1)", "Sg(4,1)"
  std::string display_name() const;
};

struct MembershipResult {
  bool member = true;
  std::string failed_identity;     // name of the first failing identity
  std::string failed_rendering;    // its text form
  SatisfactionResult failure;
};

MembershipResult check_membership(const FiniteSemiring& S,
                                  const VarietySpec& V);
MembershipResult check_membership(const FiniteGroup& G, const VarietySpec& V);
bool member_of(const FiniteSemiring& S, const VarietySpec& V);
bool member_of(const FiniteGroup& G, const VarietySpec& V);

// The identity battery at exponent n >= 2, in fixed order:
//   exponent-law        x^n = x
//   mn-law              x^{n-1} + y^{n-1} = x^{n-1}*y^{n-1}
//   power-commutation   x^{n-1}*y^{n-1} = y^{n-1}*x^{n-1}
//   power-centrality    x*y^{n-1} = y^{n-1}*x
//   sum-splitting       x + y = x*y^{n-1} + x^{n-1}*y
//   power-sum-collapse  x + x^{n-1} = x + x^2 + ... + x^{n-1}
//   product-power       (x*y)^{n-1} = x^{n-1}*y^{n-1}
std::vector<NamedIdentity> builtin_identities(int n);

// The five consequences of the mn-law (the battery minus the two defining
// identities).
std::vector<NamedIdentity> derived_identities(int n);

// Identity text syntax: "x1*x2^2 + x1 ≈ x2*x1". Variables x1..x9, '^' for
// powers, '*' between factors, '+' between words, '≈' or '=' in the middle.
Identity parse_identity(std::string_view text);

std::string render_word(const Word& w);
std::string render_term(const SemiringTerm& t);
std::string render_identity(const Identity& id);

// "x1=0, x2=2" with element names when available.
std::string render_assignment(const std::vector<std::pair<int, int>>& a,
                              const FiniteSemiring* S);

}  // namespace aisr
