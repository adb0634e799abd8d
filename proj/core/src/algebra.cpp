#include "aisr/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace aisr {

namespace {

void check_table(int order, const std::vector<int>& table, const char* which) {
  if (order < 1) throw StructuralError("algebra order must be positive");
  if (static_cast<int>(table.size()) != order * order) {
    std::ostringstream msg;
    msg << which << " table has " << table.size() << " entries, expected "
        << order * order;
    throw StructuralError(msg.str());
  }
  for (int v : table) {
    if (v < 0 || v >= order) {
      std::ostringstream msg;
      msg << which << " table entry " << v << " out of range [0, " << order
          << ")";
      throw StructuralError(msg.str());
    }
  }
}

void check_names(int order, const std::vector<std::string>& names) {
  if (names.empty()) return;
  if (static_cast<int>(names.size()) != order)
    throw StructuralError("names list length differs from order");
  for (const auto& n : names) {
    if (n.empty() || n.find_first_of(" \t\n#") != std::string::npos)
      throw StructuralError("element name '" + n + "' is not a single token");
  }
}

}  // namespace

FiniteSemiring::FiniteSemiring(int order, std::vector<int> add,
                               std::vector<int> mul,
                               std::vector<std::string> names)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      names_(std::move(names)) {
  check_table(order_, add_, "add");
  check_table(order_, mul_, "mul");
  check_names(order_, names_);
}

int FiniteSemiring::power(int a, int e) const {
  int r = a;
  for (int i = 1; i < e; ++i) r = mul(r, a);
  return r;
}

std::string FiniteSemiring::element_name(int a) const {
  if (has_names()) return names_[a];
  return std::to_string(a);
}

bool FiniteSemiring::same_tables(const FiniteSemiring& other) const {
  return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
}

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, int identity,
                         std::vector<std::string> names)
    : order_(order),
      mul_(std::move(mul)),
      identity_(identity),
      names_(std::move(names)) {
  check_table(order_, mul_, "group");
  if (identity_ < 0 || identity_ >= order_)
    throw StructuralError("identity index out of range");
  check_names(order_, names_);
}

int FiniteGroup::power(int a, int e) const {
  int r = identity_;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) == identity_ && mul(b, a) == identity_) return b;
  return -1;
}

int FiniteGroup::element_order(int a) const {
  int r = a;
  for (int t = 1; t <= order_; ++t) {
    if (r == identity_) return t;
    r = mul(r, a);
  }
  return 0;
}

int FiniteGroup::exponent() const {
  long long l = 1;
  for (int a = 0; a < order_; ++a) {
    int o = element_order(a);
    if (o == 0) return 0;
    l = std::lcm(l, static_cast<long long>(o));
  }
  return static_cast<int>(l);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::element_name(int a) const {
  if (has_names()) return names_[a];
  return std::to_string(a);
}

bool FiniteGroup::same_tables(const FiniteGroup& other) const {
  return order_ == other.order_ && identity_ == other.identity_ &&
         mul_ == other.mul_;
}

std::string law_name(Law law) {
  switch (law) {
    case Law::kAddCommutative: return "add-commutativity";
    case Law::kAddAssociative: return "add-associativity";
    case Law::kAddIdempotent: return "add-idempotence";
    case Law::kMulAssociative: return "mul-associativity";
    case Law::kLeftDistributive: return "left-distributivity";
    case Law::kRightDistributive: return "right-distributivity";
  }
  return "?";
}

std::string AxiomReport::describe(const FiniteSemiring& S) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    first = false;
    auto nm = [&](int i) { return S.element_name(i); };
    const auto& w = v.witness;
    out << law_name(v.law) << " fails at (";
    switch (v.law) {
      case Law::kAddIdempotent:
        out << nm(w[0]) << "): " << nm(w[0]) << "+" << nm(w[0]) << "="
            << nm(S.add(w[0], w[0]));
        break;
      case Law::kAddCommutative:
        out << nm(w[0]) << "," << nm(w[1]) << "): " << nm(S.add(w[0], w[1]))
            << " vs " << nm(S.add(w[1], w[0]));
        break;
      case Law::kAddAssociative:
        out << nm(w[0]) << "," << nm(w[1]) << "," << nm(w[2])
            << "): " << nm(S.add(S.add(w[0], w[1]), w[2])) << " vs "
            << nm(S.add(w[0], S.add(w[1], w[2])));
        break;
      case Law::kMulAssociative:
        out << nm(w[0]) << "," << nm(w[1]) << "," << nm(w[2])
            << "): " << nm(S.mul(S.mul(w[0], w[1]), w[2])) << " vs "
            << nm(S.mul(w[0], S.mul(w[1], w[2])));
        break;
      case Law::kLeftDistributive:
        out << nm(w[0]) << "," << nm(w[1]) << "," << nm(w[2])
            << "): " << nm(S.mul(w[0], S.add(w[1], w[2]))) << " vs "
            << nm(S.add(S.mul(w[0], w[1]), S.mul(w[0], w[2])));
        break;
      case Law::kRightDistributive:
        out << nm(w[0]) << "," << nm(w[1]) << "," << nm(w[2])
            << "): " << nm(S.mul(S.add(w[1], w[2]), w[0])) << " vs "
            << nm(S.add(S.mul(w[1], w[0]), S.mul(w[2], w[0])));
        break;
    }
  }
  return out.str();
}

AxiomReport validate_axioms(const FiniteSemiring& S) {
  const int k = S.order();
  AxiomReport report;
  auto record = [&](Law law, int a, int b, int c) {
    report.violations.push_back({law, {a, b, c}});
  };

  for (int a = 0; a < k; ++a) {
    bool done = false;
    for (int b = 0; b < k && !done; ++b)
      if (S.add(a, b) != S.add(b, a)) {
        record(Law::kAddCommutative, a, b, -1);
        done = true;
      }
    if (done) break;
  }
  [&] {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (S.add(S.add(a, b), c) != S.add(a, S.add(b, c))) {
            record(Law::kAddAssociative, a, b, c);
            return;
          }
  }();
  for (int a = 0; a < k; ++a)
    if (S.add(a, a) != a) {
      record(Law::kAddIdempotent, a, -1, -1);
      break;
    }
  [&] {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c))) {
            record(Law::kMulAssociative, a, b, c);
            return;
          }
  }();
  [&] {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (S.mul(a, S.add(b, c)) != S.add(S.mul(a, b), S.mul(a, c))) {
            record(Law::kLeftDistributive, a, b, c);
            return;
          }
  }();
  [&] {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (S.mul(S.add(b, c), a) != S.add(S.mul(b, a), S.mul(c, a))) {
            record(Law::kRightDistributive, a, b, c);
            return;
          }
  }();
  return report;
}

std::string GroupReport::describe(const FiniteGroup& G) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    first = false;
    out << v.what << " fails at (";
    bool inner = true;
    for (int w : v.witness) {
      if (w < 0) continue;
      if (!inner) out << ",";
      inner = false;
      out << G.element_name(w);
    }
    out << ")";
  }
  return out.str();
}

GroupReport validate_group(const FiniteGroup& G) {
  const int k = G.order();
  const int e = G.identity();
  GroupReport report;
  [&] {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
            report.violations.push_back({"associativity", {a, b, c}});
            return;
          }
  }();
  for (int a = 0; a < k; ++a)
    if (G.mul(e, a) != a || G.mul(a, e) != a) {
      report.violations.push_back({"identity", {a, -1, -1}});
      break;
    }
  for (int a = 0; a < k; ++a)
    if (G.inverse(a) < 0) {
      report.violations.push_back({"inverses", {a, -1, -1}});
      break;
    }
  return report;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Fixpoint closure of a subset under mul, optionally add as well.
std::vector<char> close_under(int k, std::vector<char> in,
                              const FiniteSemiring& S, bool use_add) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < k; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < k; ++b) {
        if (!in[b]) continue;
        int m = S.mul(a, b);
        if (!in[m]) {
          in[m] = 1;
          grew = true;
        }
        if (use_add) {
          int s = S.add(a, b);
          if (!in[s]) {
            in[s] = 1;
            grew = true;
          }
        }
      }
    }
  }
  return in;
}

std::vector<int> members(const std::vector<char>& in) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(in.size()); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace

SubsetClosure generated_subalgebras(const FiniteSemiring& S,
                                    const std::vector<int>& generators) {
  const int k = S.order();
  if (generators.empty())
    throw PreconditionError("generator set must be nonempty");
  std::vector<char> seed(k, 0);
  for (int g : generators) {
    if (g < 0 || g >= k)
      throw StructuralError("generator index " + std::to_string(g) +
                            " out of range");
    seed[g] = 1;
  }

  SubsetClosure result;
  result.generators = sorted_unique(generators);
  auto sg = close_under(k, seed, S, /*use_add=*/false);
  result.semigroup_closure = members(sg);

  auto sr = close_under(k, seed, S, /*use_add=*/true);
  result.semiring_closure = members(sr);

  // Independent route: <A> must equal the additive closure of <A>_s, i.e.
  // the set of all finite sums of semigroup-closure elements.
  std::vector<char> sums = sg;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < k; ++a) {
      if (!sums[a]) continue;
      for (int b = 0; b < k; ++b) {
        if (!sums[b]) continue;
        int s = S.add(a, b);
        if (!sums[s]) {
          sums[s] = 1;
          grew = true;
        }
      }
    }
  }
  if (members(sums) != result.semiring_closure) {
    throw FalsificationError(
        "semiring closure differs from the sums over the semigroup closure "
        "(input tables are not a semiring)");
  }
  auto s_size = result.semigroup_closure.size();
  if (s_size < 20 &&
      result.semiring_closure.size() > (std::size_t{1} << s_size)) {
    throw FalsificationError("closure bound |<A>| <= 2^|<A>_s| violated");
  }
  return result;
}

std::pair<int, int> power_index_period(const FiniteSemiring& S, int a) {
  std::vector<int> seen_at(S.order(), 0);
  int r = a;
  for (int t = 1;; ++t) {
    if (seen_at[r] != 0) return {seen_at[r], t - seen_at[r]};
    seen_at[r] = t;
    r = S.mul(r, a);
  }
}

int idempotent_power(const FiniteSemiring& S, int a) {
  auto [index, period] = power_index_period(S, a);
  // The cycle part of the power sequence is a group; a^e is its identity
  // for the least multiple e of the period with e >= index.
  int e = index;
  while (e % period != 0) ++e;
  return S.power(a, e);
}

namespace {

struct ElementSignature {
  bool mul_idem = false;
  bool add_idem = false;
  int mul_index = 0;
  int mul_period = 0;
  int mul_row_distinct = 0;
  int mul_col_distinct = 0;
  int add_row_distinct = 0;

  auto tie() const {
    return std::tie(mul_idem, add_idem, mul_index, mul_period,
                    mul_row_distinct, mul_col_distinct, add_row_distinct);
  }
  bool operator==(const ElementSignature& o) const { return tie() == o.tie(); }
  bool operator<(const ElementSignature& o) const { return tie() < o.tie(); }
};

std::vector<ElementSignature> signatures(const FiniteSemiring& S) {
  const int k = S.order();
  std::vector<ElementSignature> sig(k);
  for (int a = 0; a < k; ++a) {
    sig[a].mul_idem = S.mul(a, a) == a;
    sig[a].add_idem = S.add(a, a) == a;
    auto [i, p] = power_index_period(S, a);
    sig[a].mul_index = i;
    sig[a].mul_period = p;
    std::set<int> row, col, arow;
    for (int b = 0; b < k; ++b) {
      row.insert(S.mul(a, b));
      col.insert(S.mul(b, a));
      arow.insert(S.add(a, b));
    }
    sig[a].mul_row_distinct = static_cast<int>(row.size());
    sig[a].mul_col_distinct = static_cast<int>(col.size());
    sig[a].add_row_distinct = static_cast<int>(arow.size());
  }
  return sig;
}

bool iso_search(const FiniteSemiring& S1, const FiniteSemiring& S2,
                const std::vector<ElementSignature>& sig1,
                const std::vector<ElementSignature>& sig2, int next,
                std::vector<int>& f, std::vector<char>& used) {
  const int k = S1.order();
  if (next == k) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (f[S1.add(a, b)] != S2.add(f[a], f[b])) return false;
        if (f[S1.mul(a, b)] != S2.mul(f[a], f[b])) return false;
      }
    return true;
  }
  for (int image = 0; image < k; ++image) {
    if (used[image] || !(sig1[next] == sig2[image])) continue;
    f[next] = image;
    used[image] = 1;
    bool consistent = true;
    for (int j = 0; j <= next && consistent; ++j) {
      int s = S1.add(next, j);
      if (f[s] >= 0 && S2.add(image, f[j]) != f[s]) consistent = false;
      s = S1.add(j, next);
      if (consistent && f[s] >= 0 && S2.add(f[j], image) != f[s])
        consistent = false;
      s = S1.mul(next, j);
      if (consistent && f[s] >= 0 && S2.mul(image, f[j]) != f[s])
        consistent = false;
      s = S1.mul(j, next);
      if (consistent && f[s] >= 0 && S2.mul(f[j], image) != f[s])
        consistent = false;
    }
    if (consistent && iso_search(S1, S2, sig1, sig2, next + 1, f, used))
      return true;
    f[next] = -1;
    used[image] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteSemiring& S1,
                                               const FiniteSemiring& S2) {
  if (S1.order() != S2.order()) return std::nullopt;
  auto sig1 = signatures(S1);
  auto sig2 = signatures(S2);
  auto sorted1 = sig1;
  auto sorted2 = sig2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (!(sorted1 == sorted2)) return std::nullopt;

  std::vector<int> f(S1.order(), -1);
  std::vector<char> used(S1.order(), 0);
  if (iso_search(S1, S2, sig1, sig2, 0, f, used)) return f;
  return std::nullopt;
}

namespace {

bool group_iso_search(const FiniteGroup& G1, const FiniteGroup& G2,
                      const std::vector<int>& ord1, const std::vector<int>& ord2,
                      int next, std::vector<int>& f, std::vector<char>& used) {
  const int k = G1.order();
  if (next == k) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (f[G1.mul(a, b)] != G2.mul(f[a], f[b])) return false;
    return true;
  }
  for (int image = 0; image < k; ++image) {
    if (used[image] || ord1[next] != ord2[image]) continue;
    f[next] = image;
    used[image] = 1;
    bool consistent = true;
    for (int j = 0; j <= next && consistent; ++j) {
      int s = G1.mul(next, j);
      if (f[s] >= 0 && G2.mul(image, f[j]) != f[s]) consistent = false;
      s = G1.mul(j, next);
      if (consistent && f[s] >= 0 && G2.mul(f[j], image) != f[s])
        consistent = false;
    }
    if (consistent && group_iso_search(G1, G2, ord1, ord2, next + 1, f, used))
      return true;
    f[next] = -1;
    used[image] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteGroup& G1,
                                               const FiniteGroup& G2) {
  if (G1.order() != G2.order()) return std::nullopt;
  const int k = G1.order();
  std::vector<int> ord1(k), ord2(k);
  for (int a = 0; a < k; ++a) {
    ord1[a] = G1.element_order(a);
    ord2[a] = G2.element_order(a);
  }
  auto s1 = ord1;
  auto s2 = ord2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  std::vector<int> f(k, -1);
  std::vector<char> used(k, 0);
  if (group_iso_search(G1, G2, ord1, ord2, 0, f, used)) return f;
  return std::nullopt;
}

std::pair<std::vector<int>, std::vector<int>> canonical_tables(
    const FiniteSemiring& S) {
  const int k = S.order();
  if (k > 8) throw ResourceError("canonical_tables is guarded to order <= 8");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_add, best_mul;
  std::vector<int> add(k * k), mul(k * k);
  do {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        add[perm[a] * k + perm[b]] = perm[S.add(a, b)];
        mul[perm[a] * k + perm[b]] = perm[S.mul(a, b)];
      }
    if (best_add.empty() || std::tie(add, mul) < std::tie(best_add, best_mul)) {
      best_add = add;
      best_mul = mul;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_add, best_mul};
}

FiniteSemiring direct_product(const FiniteSemiring& S1,
                              const FiniteSemiring& S2) {
  const int k1 = S1.order();
  const int k2 = S2.order();
  const int k = k1 * k2;
  std::vector<int> add(k * k), mul(k * k);
  for (int a1 = 0; a1 < k1; ++a1)
    for (int a2 = 0; a2 < k2; ++a2)
      for (int b1 = 0; b1 < k1; ++b1)
        for (int b2 = 0; b2 < k2; ++b2) {
          int a = a1 * k2 + a2;
          int b = b1 * k2 + b2;
          add[a * k + b] = S1.add(a1, b1) * k2 + S2.add(a2, b2);
          mul[a * k + b] = S1.mul(a1, b1) * k2 + S2.mul(a2, b2);
        }
  return FiniteSemiring(k, std::move(add), std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& G1, const FiniteGroup& G2) {
  const int k1 = G1.order();
  const int k2 = G2.order();
  const int k = k1 * k2;
  std::vector<int> mul(k * k);
  for (int a1 = 0; a1 < k1; ++a1)
    for (int a2 = 0; a2 < k2; ++a2)
      for (int b1 = 0; b1 < k1; ++b1)
        for (int b2 = 0; b2 < k2; ++b2) {
          int a = a1 * k2 + a2;
          int b = b1 * k2 + b2;
          mul[a * k + b] = G1.mul(a1, b1) * k2 + G2.mul(a2, b2);
        }
  return FiniteGroup(k, std::move(mul),
                     G1.identity() * k2 + G2.identity());
}

std::vector<int> subgroup_closure(const FiniteGroup& G,
                                  const std::vector<int>& generators) {
  std::vector<char> in(G.order(), 0);
  in[G.identity()] = 1;
  for (int g : generators) {
    if (g < 0 || g >= G.order())
      throw StructuralError("generator index out of range");
    in[g] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < G.order(); ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < G.order(); ++b) {
        if (!in[b]) continue;
        int m = G.mul(a, b);
        if (!in[m]) {
          in[m] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < G.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace aisr
