#include "aisr/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "aisr/structure.hpp"
#include "aisr/term.hpp"

namespace aisr {

std::string CompatibilityWitness::describe(const FiniteSemiring& S) const {
  std::ostringstream out;
  auto nm = [&](int i) { return S.element_name(i); };
  out << nm(a) << "~" << nm(b) << " but ";
  switch (op) {
    case '+':
      out << nm(a) << "+" << nm(c) << "=" << nm(S.add(a, c)) << " !~ "
          << nm(b) << "+" << nm(c) << "=" << nm(S.add(b, c));
      break;
    case 'r':
      out << nm(a) << "*" << nm(c) << "=" << nm(S.mul(a, c)) << " !~ "
          << nm(b) << "*" << nm(c) << "=" << nm(S.mul(b, c));
      break;
    case 'l':
      out << nm(c) << "*" << nm(a) << "=" << nm(S.mul(c, a)) << " !~ "
          << nm(c) << "*" << nm(b) << "=" << nm(S.mul(c, b));
      break;
  }
  return out.str();
}

std::optional<CompatibilityWitness> compatibility_violation(
    const FiniteSemiring& S, const Partition& p) {
  const int k = S.order();
  if (p.size() != k)
    throw StructuralError("partition carrier differs from semiring order");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (!p.same_block(a, b)) continue;
      for (int c = 0; c < k; ++c) {
        if (!p.same_block(S.add(a, c), S.add(b, c)))
          return CompatibilityWitness{a, b, c, '+'};
        if (!p.same_block(S.mul(a, c), S.mul(b, c)))
          return CompatibilityWitness{a, b, c, 'r'};
        if (!p.same_block(S.mul(c, a), S.mul(c, b)))
          return CompatibilityWitness{a, b, c, 'l'};
      }
    }
  return std::nullopt;
}

Congruence Congruence::checked(const FiniteSemiring& S, Partition p) {
  if (auto w = compatibility_violation(S, p))
    throw PreconditionError("partition is not a congruence: " +
                            w->describe(S));
  return Congruence(std::move(p));
}

Partition congruence_closure(const FiniteSemiring& S,
                             const std::vector<std::pair<int, int>>& pairs) {
  const int k = S.order();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::deque<std::pair<int, int>> pending(pairs.begin(), pairs.end());
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) continue;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    // The merged pair seeds one translated pair per unary polynomial.
    for (int c = 0; c < k; ++c) {
      pending.emplace_back(S.add(x, c), S.add(y, c));
      pending.emplace_back(S.mul(x, c), S.mul(y, c));
      pending.emplace_back(S.mul(c, x), S.mul(c, y));
    }
  }
  std::vector<int> ids(k);
  for (int a = 0; a < k; ++a) ids[a] = find(a);
  return Partition(std::move(ids));
}

Congruence principal_congruence(const FiniteSemiring& S, int a, int b) {
  const int k = S.order();
  if (a < 0 || a >= k || b < 0 || b >= k)
    throw StructuralError("principal pair out of range");
  return Congruence::checked(S, congruence_closure(S, {{a, b}}));
}

namespace {

bool finer_first(const Partition& p, const Partition& q) {
  if (p.block_count() != q.block_count())
    return p.block_count() > q.block_count();
  return p < q;
}

}  // namespace

std::vector<Congruence> all_congruences(const FiniteSemiring& S) {
  const int k = S.order();
  if (k > 64)
    throw ResourceError("congruence lattice is guarded to order <= 64");

  std::set<Partition> seen;
  std::vector<Partition> list;
  auto push = [&](Partition p) {
    if (seen.insert(p).second) list.push_back(std::move(p));
  };

  push(Partition::identity(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      push(congruence_closure(S, {{a, b}}));

  // Close under pairwise join; the list only grows, so index pairs are
  // processed in a fixed insertion order.
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Partition joined = Partition::join(list[i], list[j]);
      // The equivalence join of two congruences is already compatible; the
      // closure pass keeps that a checked fact rather than an assumption.
      if (!seen.contains(joined)) {
        std::vector<std::pair<int, int>> seed;
        for (const auto& block : joined.blocks())
          for (std::size_t t = 1; t < block.size(); ++t)
            seed.emplace_back(block[0], block[t]);
        push(congruence_closure(S, seed));
      }
    }
  }

  std::sort(list.begin(), list.end(), finer_first);
  std::vector<Congruence> out;
  out.reserve(list.size());
  for (auto& p : list) out.push_back(Congruence::checked(S, std::move(p)));
  return out;
}

std::optional<Congruence> monolith(const FiniteSemiring& S) {
  const int k = S.order();
  if (k < 2)
    throw PreconditionError(
        "monolith needs order >= 2 (no non-identity congruence exists)");
  std::optional<Partition> meet;
  for (int a = 0; a < k && (!meet || !meet->is_identity()); ++a)
    for (int b = a + 1; b < k; ++b) {
      Partition p = congruence_closure(S, {{a, b}});
      meet = meet ? Partition::meet(*meet, p) : std::move(p);
      if (meet->is_identity()) break;
    }
  if (!meet || meet->is_identity()) return std::nullopt;
  return Congruence::checked(S, std::move(*meet));
}

bool is_subdirectly_irreducible(const FiniteSemiring& S) {
  return monolith(S).has_value();
}

bool is_congruence_simple(const FiniteSemiring& S) {
  if (S.order() < 2)
    throw PreconditionError("congruence simplicity needs order >= 2");
  return all_congruences(S).size() == 2;
}

std::vector<Partition> congruences_by_exhaustive_scan(
    const FiniteSemiring& S) {
  const int k = S.order();
  if (k > 8)
    throw ResourceError("exhaustive partition scan is guarded to order <= 8");

  std::vector<Partition> found;
  std::vector<int> rgs(k, 0);  // restricted growth string
  while (true) {
    // Direct compatibility test, written against the block-id vector only.
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b) {
        if (rgs[a] != rgs[b]) continue;
        for (int c = 0; c < k; ++c) {
          if (rgs[S.add(a, c)] != rgs[S.add(b, c)] ||
              rgs[S.mul(a, c)] != rgs[S.mul(b, c)] ||
              rgs[S.mul(c, a)] != rgs[S.mul(c, b)]) {
            ok = false;
            break;
          }
        }
      }
    if (ok) found.emplace_back(rgs);

    // Next restricted growth string.
    int i = k - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[j]);
      if (rgs[i] <= max_prefix) {
        ++rgs[i];
        for (int j = i + 1; j < k; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  std::sort(found.begin(), found.end(), finer_first);
  return found;
}

Congruence extend_idempotent_congruence(const FiniteSemiring& S, int n,
                                        const Partition& rho) {
  auto membership = check_membership(S, VarietySpec::mn(n));
  if (!membership.member)
    throw PreconditionError("algebra is not in " +
                            VarietySpec::mn(n).display_name() + ": " +
                            membership.failed_rendering + " fails");

  IdempotentSubsemiring E = idempotents(S);
  const int ecount = static_cast<int>(E.elements.size());
  if (rho.size() != ecount)
    throw StructuralError("rho is a partition of " +
                          std::to_string(rho.size()) + " elements but E(S) has " +
                          std::to_string(ecount));
  if (auto w = compatibility_violation(E.algebra, rho))
    throw PreconditionError("rho is not a congruence on E(S): " +
                            w->describe(E.algebra));

  const int k = S.order();
  // Position of each carrier element's (n-1)-th power inside E(S).
  std::vector<int> power_pos(k);
  for (int a = 0; a < k; ++a) {
    int p = S.power(a, n - 1);
    int pos = E.index_of(p);
    if (pos < 0)
      throw FalsificationError("power " + S.element_name(p) +
                               " escaped E(S)");
    power_pos[a] = pos;
  }

  std::vector<char> related(k * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool rel = false;
      if (rho.same_block(power_pos[a], power_pos[b])) {
        for (int ei = 0; ei < ecount && !rel; ++ei) {
          int e = E.elements[ei];
          rel = S.mul(e, a) == S.mul(e, b) &&
                rho.same_block(ei, power_pos[a]);
        }
      }
      related[a * k + b] = rel;
    }

  // The defining formula is not transitively closed by fiat: violations are
  // reported as falsifications of the construction.
  for (int a = 0; a < k; ++a)
    if (!related[a * k + a])
      throw FalsificationError("constructed relation is not reflexive at " +
                               S.element_name(a));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (related[a * k + b] != related[b * k + a])
        throw FalsificationError("constructed relation is not symmetric at (" +
                                 S.element_name(a) + "," + S.element_name(b) +
                                 ")");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (!related[a * k + b]) continue;
      for (int c = 0; c < k; ++c)
        if (related[b * k + c] && !related[a * k + c])
          throw FalsificationError(
              "constructed relation is not transitive at (" +
              S.element_name(a) + "," + S.element_name(b) + "," +
              S.element_name(c) + ")");
    }

  std::vector<int> ids(k, -1);
  int next = 0;
  for (int a = 0; a < k; ++a) {
    if (ids[a] >= 0) continue;
    ids[a] = next;
    for (int b = a + 1; b < k; ++b)
      if (related[a * k + b]) ids[b] = next;
    ++next;
  }
  Partition tau(std::move(ids));

  if (auto w = compatibility_violation(S, tau))
    throw FalsificationError("constructed relation is not compatible: " +
                             w->describe(S));
  if (!(tau.restrict_to(E.elements) == rho))
    throw FalsificationError(
        "constructed congruence does not restrict to rho on E(S)");
  return Congruence::checked(S, std::move(tau));
}

std::vector<std::vector<int>> lattice_covers(
    const std::vector<Congruence>& lattice) {
  const int n = static_cast<int>(lattice.size());
  std::vector<std::vector<int>> covers(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& p = lattice[i].partition();
      const auto& q = lattice[j].partition();
      if (!(p.refines(q)) || p == q) continue;
      bool gap = false;
      for (int t = 0; t < n && !gap; ++t) {
        if (t == i || t == j) continue;
        const auto& r = lattice[t].partition();
        gap = p.refines(r) && r.refines(q) && !(r == p) && !(r == q);
      }
      if (!gap) covers[i].push_back(j);
    }
  for (auto& c : covers) std::sort(c.begin(), c.end());
  return covers;
}

}  // namespace aisr
