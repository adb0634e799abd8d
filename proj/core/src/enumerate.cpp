#include "aisr/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "aisr/congruence.hpp"
#include "aisr/construct.hpp"
#include "aisr/io.hpp"
#include "aisr/structure.hpp"

namespace aisr {

namespace {

// Commutative idempotent associative tables on k elements, one per
// relabeling class, as flat row-major tables in canonical (lex-least) form.
std::vector<std::vector<int>> semilattice_representatives(int k) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) cells.emplace_back(i, j);

  std::vector<int> perm(k);
  std::set<std::vector<int>> canon;
  std::vector<int> table(k * k, 0);
  for (int i = 0; i < k; ++i) table[i * k + i] = i;

  std::vector<int> choice(cells.size(), 0);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      table[i * k + j] = choice[c];
      table[j * k + i] = choice[c];
    }
    bool assoc = true;
    for (int a = 0; a < k && assoc; ++a)
      for (int b = 0; b < k && assoc; ++b)
        for (int c = 0; c < k; ++c)
          if (table[table[a * k + b] * k + c] !=
              table[a * k + table[b * k + c]]) {
            assoc = false;
            break;
          }
    if (assoc) {
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<int> best;
      std::vector<int> relabeled(k * k);
      do {
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            relabeled[perm[a] * k + perm[b]] = perm[table[a * k + b]];
        if (best.empty() || relabeled < best) best = relabeled;
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon.insert(best);
    }

    int c = static_cast<int>(cells.size()) - 1;
    for (; c >= 0; --c) {
      if (++choice[c] < k) break;
      choice[c] = 0;
    }
    if (c < 0) break;  // odometer exhausted; k == 1 has one empty pass
  }
  return {canon.begin(), canon.end()};
}

// Backtracking search over multiplication tables compatible with a fixed
// addition table. Partial cells hold -1; constraints are pruned as soon as
// all of their support cells are known.
class MulSearch {
 public:
  MulSearch(int k, const std::vector<int>& add, int exponent)
      : k_(k), add_(add), exponent_(exponent), mul_(k * k, -1) {
    for (int i = 0; i < k_; ++i) cells_.emplace_back(i, i);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (i != j) cells_.emplace_back(i, j);
  }

  template <class Sink>
  void run(Sink&& sink) {
    search(0, sink);
  }

 private:
  int at(int a, int b) const { return mul_[a * k_ + b]; }

  bool feasible() const {
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b) {
        int ab = at(a, b);
        for (int c = 0; c < k_; ++c) {
          // Associativity where decidable.
          if (ab >= 0) {
            int abc = at(ab, c);
            int bc = at(b, c);
            if (abc >= 0 && bc >= 0) {
              int a_bc = at(a, bc);
              if (a_bc >= 0 && abc != a_bc) return false;
            }
          }
          // Distributivity against the fixed addition.
          int s = add_[b * k_ + c];
          int as = at(a, s);
          int ac = at(a, c);
          if (as >= 0 && ab >= 0 && ac >= 0 &&
              add_[at(a, b) * k_ + ac] != as)
            return false;
          int sa = at(s, a);
          int ba = at(b, a);
          int ca = at(c, a);
          if (sa >= 0 && ba >= 0 && ca >= 0 && add_[ba * k_ + ca] != sa)
            return false;
        }
      }
    // Exponent law x^n = x along decided power chains.
    for (int x = 0; x < k_; ++x) {
      int p = x;
      bool decided = true;
      for (int e = 2; e <= exponent_; ++e) {
        p = at(p, x);
        if (p < 0) {
          decided = false;
          break;
        }
      }
      if (decided && p != x) return false;
    }
    return true;
  }

  template <class Sink>
  void search(std::size_t next, Sink& sink) {
    if (next == cells_.size()) {
      sink(mul_);
      return;
    }
    auto [i, j] = cells_[next];
    for (int v = 0; v < k_; ++v) {
      mul_[i * k_ + j] = v;
      if (feasible()) search(next + 1, sink);
    }
    mul_[i * k_ + j] = -1;
  }

  int k_;
  const std::vector<int>& add_;
  int exponent_;
  std::vector<int> mul_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace

std::vector<FiniteSemiring> enumerate_order(int k, const VarietySpec& V) {
  if (k < 1) throw PreconditionError("order must be >= 1");
  if (k > 4) throw ResourceError("enumeration is guarded to order <= 4");
  if (V.multiplicative_only)
    throw PreconditionError("enumeration needs a semiring variety preset");

  std::set<std::pair<std::vector<int>, std::vector<int>>> canon;
  for (const auto& add : semilattice_representatives(k)) {
    MulSearch search(k, add, V.exponent);
    search.run([&](const std::vector<int>& mul) {
      FiniteSemiring S(k, add, mul);
      if (!validate_axioms(S).ok()) return;
      if (!member_of(S, V)) return;
      canon.insert(canonical_tables(S));
    });
  }

  std::vector<FiniteSemiring> out;
  out.reserve(canon.size());
  for (const auto& [add, mul] : canon) out.emplace_back(k, add, mul);
  return out;
}

Catalog enumerate_up_to(int max_order, const VarietySpec& V) {
  Catalog catalog;
  catalog.variety = V;
  catalog.max_order = max_order;
  for (int k = 1; k <= max_order; ++k) {
    auto members = enumerate_order(k, V);
    catalog.counts_per_order.push_back(static_cast<int>(members.size()));
    int index = 0;
    for (auto& S : members) {
      std::ostringstream stem;
      stem << V.name << "_k" << k << "_";
      stem.width(3);
      stem.fill('0');
      stem << index++;
      catalog.entries.push_back({std::move(S), stem.str()});
    }
  }
  return catalog;
}

void write_catalog(const Catalog& catalog, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& entry : catalog.entries) {
    std::ofstream out(std::filesystem::path(dir) / (entry.stem + ".alg"));
    if (!out) throw StructuralError("cannot write catalog file " + entry.stem);
    out << "# " << entry.stem << "\n";
    write_semiring(out, entry.algebra);
  }
}

PropositionReport verify_proposition(const Catalog& catalog) {
  PropositionReport report;
  for (const auto& entry : catalog.entries) {
    const FiniteSemiring& S = entry.algebra;
    if (S.order() < 2) continue;  // no monolith on a singleton
    ++report.checked;
    bool si = is_subdirectly_irreducible(S);
    bool simple = is_congruence_simple(S);
    auto zg = is_zero_group(S);
    if (si != simple || si != zg.has_value()) {
      std::ostringstream v;
      v << entry.stem << ": si=" << si << " simple=" << simple
        << " zero-group=" << zg.has_value();
      report.violations.push_back(v.str());
      continue;
    }
    if (si) {
      ++report.si_count;
      FiniteSemiring flat = flat_extension(zg->group);
      if (!are_isomorphic(S, flat))
        report.violations.push_back(
            entry.stem + ": subdirectly irreducible but not isomorphic to "
                         "the flat extension of its group part");
    }
  }
  return report;
}

}  // namespace aisr
