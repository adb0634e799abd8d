#include "aisr/construct.hpp"

#include <algorithm>
#include <cctype>

#include "aisr/term.hpp"

namespace aisr {

FiniteSemiring flat_extension(const FiniteGroup& G) {
  auto gr = validate_group(G);
  if (!gr.ok())
    throw PreconditionError("flat extension needs a valid group: " +
                            gr.describe(G));

  const int m = G.order();
  const int k = m + 1;
  const int zero = m;
  std::vector<int> add(k * k), mul(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      add[a * k + b] = a == b ? a : zero;
      mul[a * k + b] = (a < m && b < m) ? G.mul(a, b) : zero;
    }
  std::vector<std::string> names;
  if (G.has_names()) {
    names = G.names();
    names.push_back("0");
  }
  FiniteSemiring S(k, std::move(add), std::move(mul), std::move(names));

  const int n = G.exponent() + 1;
  auto membership = check_membership(S, VarietySpec::mn(n));
  if (!membership.member)
    throw FalsificationError("flat extension escaped " +
                             VarietySpec::mn(n).display_name() + ": " +
                             membership.failed_rendering + " fails at " +
                             render_assignment(membership.failure.counterexample,
                                               &S));
  // Flat laws: distinct elements sum to zero, and a + a^{n-1} = 0 away from
  // the group identity.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (S.add(a, b) != (a == b ? a : zero))
        throw FalsificationError("flat addition law violated");
  for (int a = 0; a < m; ++a)
    if (a != G.identity() && S.add(a, S.power(a, n - 1)) != zero)
      throw FalsificationError("flat power-sum law violated at " +
                               S.element_name(a));
  return S;
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw PreconditionError("cyclic group order must be >= 1");
  std::vector<int> mul(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[a * m + b] = (a + b) % m;
  return FiniteGroup(m, std::move(mul), 0);
}

namespace {

// Quaternion units as (sign, axis) with axes 1=i, 2=j, 3=k.
struct Unit {
  int sign;  // +1 or -1
  int axis;  // 0 = scalar
};

Unit unit_mul(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  // i*j=k, j*k=i, k*i=j and the reversed products are negative.
  if ((a == 1 && b == 2)) return {1, 3};
  if ((a == 2 && b == 3)) return {1, 1};
  if ((a == 3 && b == 1)) return {1, 2};
  if ((a == 2 && b == 1)) return {-1, 3};
  if ((a == 3 && b == 2)) return {-1, 1};
  return {-1, 2};  // a == 1, b == 3
}

}  // namespace

FiniteGroup quaternion_group() {
  // Index 2*axis + (1 for the negative element).
  const int k = 8;
  std::vector<int> mul(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int sa = a % 2 ? -1 : 1;
      int sb = b % 2 ? -1 : 1;
      Unit u = unit_mul(a / 2, b / 2);
      int sign = sa * sb * u.sign;
      mul[a * k + b] = 2 * u.axis + (sign < 0 ? 1 : 0);
    }
  FiniteGroup G(k, std::move(mul), 0,
                {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  if (!validate_group(G).ok() || G.is_abelian() || G.exponent() != 4)
    throw FalsificationError("quaternion table failed its structure checks");
  return G;
}

FiniteGroup heisenberg_group(int p) {
  if (p < 3 || p % 2 == 0)
    throw PreconditionError("the parameter must be an odd prime");
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      throw PreconditionError("the parameter must be an odd prime");
  if (p > 7)
    throw ResourceError("p^3-element tables are built for p <= 7 only");

  const int k = p * p * p;
  std::vector<int> mul(k * k);
  auto index = [&](int i, int j, int kk) { return (i * p + j) * p + kk; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int kk = 0; kk < p; ++kk)
        for (int m = 0; m < p; ++m)
          for (int n = 0; n < p; ++n)
            for (int r = 0; r < p; ++r)
              mul[index(i, j, kk) * k + index(m, n, r)] =
                  index((i + m) % p, (j + kk * m + n) % p, (kk + r) % p);
  FiniteGroup G(k, std::move(mul), 0);
  if (!validate_group(G).ok() || G.is_abelian() || G.exponent() != p)
    throw FalsificationError(
        "extraspecial group table failed its structure checks");
  return G;
}

namespace {

std::vector<int> prime_factor_powers(int n, std::vector<int>* primes) {
  std::vector<int> powers;
  for (int q = 2; q <= n; ++q) {
    if (n % q) continue;
    int power = 1;
    while (n % q == 0) {
      n /= q;
      power *= q;
    }
    primes->push_back(q);
    powers.push_back(power);
  }
  return powers;
}

}  // namespace

SylowReport sylow_abelian_report(const FiniteGroup& G) {
  if (G.order() > 64)
    throw ResourceError("Sylow search is guarded to |G| <= 64");
  auto gr = validate_group(G);
  if (!gr.ok())
    throw PreconditionError("Sylow search needs a valid group: " +
                            gr.describe(G));

  std::vector<int> primes;
  std::vector<int> targets = prime_factor_powers(G.order(), &primes);

  SylowReport report;
  for (std::size_t t = 0; t < primes.size(); ++t) {
    const int q = primes[t];
    const int target = targets[t];
    std::vector<int> P{G.identity()};

    while (static_cast<int>(P.size()) < target) {
      std::vector<char> in_p(G.order(), 0);
      for (int x : P) in_p[x] = 1;
      // Normalizer of P.
      std::vector<int> normalizer;
      for (int g = 0; g < G.order(); ++g) {
        int gi = G.inverse(g);
        bool normalizes = true;
        for (int x : P)
          if (!in_p[G.mul(G.mul(g, x), gi)]) {
            normalizes = false;
            break;
          }
        if (normalizes) normalizer.push_back(g);
      }
      // A q-power-order element outside P whose q-th power falls in P
      // extends P to a q-subgroup of index q below it.
      int found = -1;
      for (int y : normalizer) {
        if (in_p[y]) continue;
        int order = G.element_order(y);
        int coprime_part = order;
        while (coprime_part % q == 0) coprime_part /= q;
        int x = G.power(y, coprime_part);
        if (!in_p[x] && in_p[G.power(x, q)]) {
          found = x;
          break;
        }
      }
      if (found < 0)
        throw FalsificationError("Sylow climb stalled below the full " +
                                 std::to_string(q) + "-part");
      std::vector<int> gens = P;
      gens.push_back(found);
      P = subgroup_closure(G, gens);
    }

    SylowEntry entry;
    entry.prime = q;
    entry.order = target;
    entry.subgroup = P;
    for (std::size_t i = 0; i < P.size() && entry.abelian; ++i)
      for (std::size_t j = i + 1; j < P.size(); ++j)
        if (G.mul(P[i], P[j]) != G.mul(P[j], P[i])) {
          entry.abelian = false;
          break;
        }
    report.all_abelian = report.all_abelian && entry.abelian;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

class BuilderParser {
 public:
  // Built groups are capped so tables stay desk-sized.
  static constexpr long kOrderLimit = 512;

  explicit BuilderParser(std::string_view text) : text_(text) {}

  Algebra parse() {
    skip_space();
    Algebra result = keyword_is("flat") ? Algebra(parse_flat())
                                        : Algebra(parse_group());
    skip_space();
    if (pos_ != text_.size())
      throw StructuralError("trailing characters in builder expression");
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool keyword_is(std::string_view kw) {
    skip_space();
    return text_.substr(pos_, kw.size()) == kw;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw StructuralError(std::string("expected '") + c +
                            "' in builder expression");
    ++pos_;
  }

  int parse_int() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw StructuralError("expected a number");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (v < 1 || v > kOrderLimit)
      throw StructuralError("number out of range");
    return static_cast<int>(v);
  }

  FiniteSemiring parse_flat() {
    pos_ += 4;  // "flat"
    expect('(');
    FiniteGroup g = parse_group();
    expect(')');
    return flat_extension(g);
  }

  FiniteGroup parse_group() {
    skip_space();
    if (keyword_is("zn")) {
      pos_ += 2;
      expect(':');
      return cyclic_group(parse_int());
    }
    if (keyword_is("q8")) {
      pos_ += 2;
      return quaternion_group();
    }
    if (keyword_is("gp")) {
      pos_ += 2;
      expect(':');
      return heisenberg_group(parse_int());
    }
    if (keyword_is("prod")) {
      pos_ += 4;
      expect('(');
      FiniteGroup g1 = parse_group();
      expect(',');
      FiniteGroup g2 = parse_group();
      expect(')');
      if (static_cast<long>(g1.order()) * g2.order() > kOrderLimit)
        throw StructuralError("product order above the builder limit");
      return direct_product(g1, g2);
    }
    throw StructuralError(
        "expected zn:<m>, q8, gp:<p>, prod(...) or flat(...)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Algebra build_named_algebra(std::string_view expr) {
  return BuilderParser(expr).parse();
}

bool looks_like_builder(std::string_view expr) {
  for (std::string_view prefix : {"zn:", "q8", "gp:", "prod(", "flat("}) {
    if (expr.substr(0, prefix.size()) == prefix) return true;
  }
  return false;
}

}  // namespace aisr
