#include "aisr/structure.hpp"

#include <algorithm>
#include <numeric>

#include "aisr/term.hpp"

namespace aisr {

int IdempotentSubsemiring::index_of(int original) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), original);
  if (it == elements.end() || *it != original) return -1;
  return static_cast<int>(it - elements.begin());
}

IdempotentSubsemiring idempotents(const FiniteSemiring& S) {
  const int k = S.order();
  std::vector<int> elements;
  for (int a = 0; a < k; ++a)
    if (S.mul(a, a) == a) elements.push_back(a);

  auto position = [&](int x) {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    return (it != elements.end() && *it == x)
               ? static_cast<int>(it - elements.begin())
               : -1;
  };

  const int m = static_cast<int>(elements.size());
  std::vector<int> add(m * m), mul(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int s = S.add(elements[i], elements[j]);
      int p = S.mul(elements[i], elements[j]);
      int si = position(s);
      int pi = position(p);
      if (si < 0)
        throw FalsificationError(
            "E(S) is not closed under +: " + S.element_name(elements[i]) +
            "+" + S.element_name(elements[j]) + "=" + S.element_name(s) +
            " is not idempotent (variety membership falsified)");
      if (pi < 0)
        throw FalsificationError(
            "E(S) is not closed under *: " + S.element_name(elements[i]) +
            "*" + S.element_name(elements[j]) + "=" + S.element_name(p) +
            " is not idempotent (variety membership falsified)");
      add[i * m + j] = si;
      mul[i * m + j] = pi;
    }

  std::vector<std::string> names;
  if (S.has_names())
    for (int e : elements) names.push_back(S.element_name(e));
  return IdempotentSubsemiring{
      std::move(elements),
      FiniteSemiring(m, std::move(add), std::move(mul), std::move(names))};
}

namespace {

// Principal one-sided ideals of the multiplicative reduct, with a formal
// identity adjoined (the element itself is always in its own ideal).
std::vector<std::vector<char>> left_ideals(const FiniteSemiring& S) {
  const int k = S.order();
  std::vector<std::vector<char>> ideal(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a) {
    ideal[a][a] = 1;
    for (int s = 0; s < k; ++s) ideal[a][S.mul(s, a)] = 1;
  }
  return ideal;
}

std::vector<std::vector<char>> right_ideals(const FiniteSemiring& S) {
  const int k = S.order();
  std::vector<std::vector<char>> ideal(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a) {
    ideal[a][a] = 1;
    for (int s = 0; s < k; ++s) ideal[a][S.mul(a, s)] = 1;
  }
  return ideal;
}

Partition partition_by_equal_rows(const std::vector<std::vector<char>>& rows) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> ids(k, -1);
  int next = 0;
  for (int a = 0; a < k; ++a) {
    if (ids[a] >= 0) continue;
    ids[a] = next;
    for (int b = a + 1; b < k; ++b)
      if (ids[b] < 0 && rows[a] == rows[b]) ids[b] = next;
    ++next;
  }
  return Partition(std::move(ids));
}

}  // namespace

GreenData green_relations(const FiniteSemiring& S) {
  Partition l = partition_by_equal_rows(left_ideals(S));
  Partition r = partition_by_equal_rows(right_ideals(S));
  Partition h = Partition::meet(l, r);
  Partition d = Partition::join(l, r);
  return GreenData{std::move(l), std::move(r), std::move(h), std::move(d)};
}

GreenCheckReport verify_green_characterizations(const FiniteSemiring& S,
                                                int n) {
  GreenData g = green_relations(S);
  GreenCheckReport report;
  const int k = S.order();
  std::vector<int> pw(k);
  for (int a = 0; a < k; ++a) pw[a] = S.power(a, n - 1);

  for (int a = 0; a < k && report.h_power_match; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.h.same_block(a, b) != (pw[a] == pw[b])) {
        report.h_power_match = false;
        report.h_witness = {a, b};
        break;
      }
  for (int a = 0; a < k && report.d_power_match; ++a)
    for (int b = a + 1; b < k; ++b) {
      bool characterized = S.mul(S.mul(pw[a], pw[b]), pw[a]) == pw[a] &&
                           S.mul(S.mul(pw[b], pw[a]), pw[b]) == pw[b];
      if (g.d.same_block(a, b) != characterized) {
        report.d_power_match = false;
        report.d_witness = {a, b};
        break;
      }
    }
  for (int a = 0; a < k && report.d_equals_h; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.d.same_block(a, b) != g.h.same_block(a, b)) {
        report.d_equals_h = false;
        report.dh_witness = {a, b};
        break;
      }
  return report;
}

bool is_completely_regular(const FiniteSemiring& S) {
  GreenData g = green_relations(S);
  for (int a = 0; a < S.order(); ++a)
    if (!g.h.same_block(a, idempotent_power(S, a))) return false;
  return true;
}

std::optional<CliffordDecomposition> is_clifford(const FiniteSemiring& S) {
  if (!is_completely_regular(S)) return std::nullopt;
  const int k = S.order();
  // Idempotents must be central.
  for (int e = 0; e < k; ++e) {
    if (S.mul(e, e) != e) continue;
    for (int x = 0; x < k; ++x)
      if (S.mul(e, x) != S.mul(x, e)) return std::nullopt;
  }

  GreenData g = green_relations(S);
  const Partition& classes = g.h;
  const int m = classes.block_count();

  // Each class must be a group: closed, with identity and inverses.
  auto blocks = classes.blocks();
  for (const auto& block : blocks) {
    int idem = -1;
    for (int a : block) {
      for (int b : block)
        if (!classes.same_block(S.mul(a, b), block[0])) return std::nullopt;
      if (S.mul(a, a) == a) idem = a;
    }
    if (idem < 0) return std::nullopt;
    for (int a : block) {
      if (S.mul(idem, a) != a || S.mul(a, idem) != a) return std::nullopt;
      bool inverse = false;
      for (int b : block)
        if (S.mul(a, b) == idem && S.mul(b, a) == idem) inverse = true;
      if (!inverse) return std::nullopt;
    }
  }

  // The product class must not depend on the representatives.
  std::vector<int> table(m * m, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int cell = classes.block(a) * m + classes.block(b);
      int value = classes.block(S.mul(a, b));
      if (table[cell] == -1)
        table[cell] = value;
      else if (table[cell] != value)
        return std::nullopt;
    }
  // And it must be a semilattice on the classes.
  for (int x = 0; x < m; ++x) {
    if (table[x * m + x] != x) return std::nullopt;
    for (int y = 0; y < m; ++y) {
      if (table[x * m + y] != table[y * m + x]) return std::nullopt;
      for (int z = 0; z < m; ++z)
        if (table[table[x * m + y] * m + z] != table[x * m + table[y * m + z]])
          return std::nullopt;
    }
  }

  CliffordDecomposition out{classes, std::move(table), m};
  return out;
}

std::optional<ZeroGroup> is_zero_group(const FiniteSemiring& S) {
  const int k = S.order();
  if (k < 2) return std::nullopt;
  int zero = -1;
  for (int z = 0; z < k && zero < 0; ++z) {
    bool absorbing = true;
    for (int x = 0; x < k && absorbing; ++x)
      absorbing = S.mul(z, x) == z && S.mul(x, z) == z;
    if (absorbing) zero = z;
  }
  if (zero < 0) return std::nullopt;

  std::vector<int> elements;
  for (int a = 0; a < k; ++a)
    if (a != zero) elements.push_back(a);
  auto position = [&](int x) {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    return (it != elements.end() && *it == x)
               ? static_cast<int>(it - elements.begin())
               : -1;
  };

  const int m = k - 1;
  std::vector<int> mul(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = position(S.mul(elements[i], elements[j]));
      if (p < 0) return std::nullopt;  // product fell onto the zero
      mul[i * m + j] = p;
    }

  int identity = -1;
  for (int i = 0; i < m && identity < 0; ++i) {
    bool two_sided = true;
    for (int j = 0; j < m && two_sided; ++j)
      two_sided = mul[i * m + j] == j && mul[j * m + i] == j;
    if (two_sided) identity = i;
  }
  if (identity < 0) return std::nullopt;

  std::vector<std::string> names;
  if (S.has_names())
    for (int e : elements) names.push_back(S.element_name(e));
  FiniteGroup group(m, std::move(mul), identity, std::move(names));
  if (!validate_group(group).ok()) return std::nullopt;
  return ZeroGroup{zero, std::move(elements), std::move(group)};
}

OrderReport partial_orders(const FiniteSemiring& S, int n) {
  auto membership = check_membership(S, VarietySpec::mn(n));
  if (!membership.member)
    throw PreconditionError("algebra is not in " +
                            VarietySpec::mn(n).display_name() + ": " +
                            membership.failed_rendering + " fails");

  const int k = S.order();
  IdempotentSubsemiring E = idempotents(S);

  std::vector<char> plus(k * k, 0), mulr(k * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      plus[a * k + b] = S.add(a, b) == b;
      for (int e : E.elements)
        if (S.mul(e, b) == a) {
          mulr[a * k + b] = 1;
          break;
        }
    }

  OrderReport report;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (plus[a * k + b]) report.leq_plus.emplace_back(a, b);
      if (mulr[a * k + b]) report.leq_mul.emplace_back(a, b);
    }

  auto check_order = [&](const std::vector<char>& rel, const char* label) {
    for (int a = 0; a < k; ++a)
      if (!rel[a * k + a])
        return std::string(label) + " is not reflexive at " +
               S.element_name(a);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (a != b && rel[a * k + b] && rel[b * k + a])
          return std::string(label) + " is not antisymmetric at (" +
                 S.element_name(a) + "," + S.element_name(b) + ")";
        if (!rel[a * k + b]) continue;
        for (int c = 0; c < k; ++c)
          if (rel[b * k + c] && !rel[a * k + c])
            return std::string(label) + " is not transitive at (" +
                   S.element_name(a) + "," + S.element_name(b) + "," +
                   S.element_name(c) + ")";
      }
    return std::string();
  };
  std::string v = check_order(plus, "<=+");
  report.plus_is_partial_order = v.empty();
  if (v.empty()) {
    v = check_order(mulr, "<=.");
    report.mul_is_partial_order = v.empty();
  }
  report.order_violation = v;

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (plus[a * k + b] != mulr[b * k + a])
        report.duality_violations.emplace_back(a, b);
  report.duality_holds = report.duality_violations.empty();

  // Greatest lower bounds a /\ u under <=. in the two-idempotent case.
  if (E.elements.size() == 2 && report.mul_is_partial_order) {
    int e0 = E.elements[0];
    int e1 = E.elements[1];
    int top = -1;
    if (mulr[e0 * k + e1]) top = e1;
    if (mulr[e1 * k + e0]) top = e0;
    if (top >= 0) {
      report.glb_checked = true;
      report.top_idempotent = top;
      for (int a = 0; a < k; ++a) {
        std::vector<int> lower;
        for (int x = 0; x < k; ++x)
          if (mulr[x * k + a] && mulr[x * k + top]) lower.push_back(x);
        bool has_greatest = false;
        for (int g : lower) {
          bool greatest = true;
          for (int x : lower)
            if (!mulr[x * k + g]) {
              greatest = false;
              break;
            }
          if (greatest) {
            has_greatest = true;
            break;
          }
        }
        if (!has_greatest) report.glb_missing.push_back(a);
      }
    }
  }
  return report;
}

}  // namespace aisr
