#include "aisr/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aisr {

namespace {
constexpr int kMaxVariables = 9;
constexpr long long kAssignmentBudget = 50'000'000;
}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw StructuralError("empty word");
  for (int v : letters_)
    if (v < 0 || v >= kMaxVariables)
      throw StructuralError("variable index out of range");
}

Word Word::variable(int v) { return Word(std::vector<int>{v}); }

Word Word::power(int v, int e) {
  if (e < 1) throw StructuralError("word power must be >= 1");
  return Word(std::vector<int>(e, v));
}

Word Word::concat(const Word& other) const {
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(letters));
}

SemiringTerm::SemiringTerm(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw StructuralError("empty term");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

SemiringTerm SemiringTerm::single(Word w) {
  return SemiringTerm(std::vector<Word>{std::move(w)});
}

std::vector<int> SemiringTerm::variables() const {
  std::vector<int> vars;
  for (const auto& w : words_)
    vars.insert(vars.end(), w.letters().begin(), w.letters().end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

SemiringTerm term_sum(const SemiringTerm& t1, const SemiringTerm& t2) {
  std::vector<Word> words = t1.words();
  words.insert(words.end(), t2.words().begin(), t2.words().end());
  return SemiringTerm(std::move(words));
}

SemiringTerm term_product(const SemiringTerm& t1, const SemiringTerm& t2) {
  std::vector<Word> words;
  for (const auto& u : t1.words())
    for (const auto& v : t2.words()) words.push_back(u.concat(v));
  return SemiringTerm(std::move(words));
}

std::vector<int> Identity::variables() const {
  std::vector<int> vars = lhs.variables();
  auto rv = rhs.variables();
  vars.insert(vars.end(), rv.begin(), rv.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

int eval_word(const Word& w, const FiniteSemiring& S, const Assignment& a) {
  int value = -1;
  for (int v : w.letters()) {
    if (v >= static_cast<int>(a.size()) || a[v] < 0)
      throw PreconditionError("variable x" + std::to_string(v + 1) +
                              " is unassigned");
    value = value < 0 ? a[v] : S.mul(value, a[v]);
  }
  return value;
}

int eval_term(const SemiringTerm& t, const FiniteSemiring& S,
              const Assignment& a) {
  int value = -1;
  for (const auto& w : t.words()) {
    int wv = eval_word(w, S, a);
    value = value < 0 ? wv : S.add(value, wv);
  }
  return value;
}

namespace {

SatisfactionResult satisfies_impl(const FiniteSemiring& S, const Identity& id,
                                  bool multiplicative) {
  if (multiplicative &&
      (id.lhs.words().size() != 1 || id.rhs.words().size() != 1))
    throw PreconditionError(
        "multiplicative-reduct check needs single-word identity sides");

  const int k = S.order();
  auto vars = id.variables();
  long long count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    count *= k;
    if (count > kAssignmentBudget)
      throw ResourceError("assignment space exceeds the evaluation budget");
  }

  Assignment assign(vars.empty() ? 0 : vars.back() + 1, -1);
  std::vector<int> digits(vars.size(), 0);
  SatisfactionResult result;
  for (long long step = 0; step < count; ++step) {
    for (std::size_t i = 0; i < vars.size(); ++i) assign[vars[i]] = digits[i];
    int lv, rv;
    if (multiplicative) {
      lv = eval_word(id.lhs.words()[0], S, assign);
      rv = eval_word(id.rhs.words()[0], S, assign);
    } else {
      lv = eval_term(id.lhs, S, assign);
      rv = eval_term(id.rhs, S, assign);
    }
    if (lv != rv) {
      result.holds = false;
      result.lhs_value = lv;
      result.rhs_value = rv;
      for (std::size_t i = 0; i < vars.size(); ++i)
        result.counterexample.emplace_back(vars[i], digits[i]);
      return result;
    }
    // Advance the odometer; the first variable is the most significant
    // digit, so assignments are visited in lexicographic order.
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
  result.holds = true;
  return result;
}

}  // namespace

SatisfactionResult satisfies(const FiniteSemiring& S, const Identity& id) {
  return satisfies_impl(S, id, /*multiplicative=*/false);
}

SatisfactionResult satisfies_multiplicative(const FiniteSemiring& S,
                                            const Identity& id) {
  return satisfies_impl(S, id, /*multiplicative=*/true);
}

SatisfactionResult satisfies(const FiniteGroup& G, const Identity& id) {
  // Reuse the word evaluator by viewing the group as a semiring whose add
  // table is never consulted.
  std::vector<int> dummy_add(G.order() * G.order(), 0);
  FiniteSemiring view(G.order(), std::move(dummy_add), G.mul_table());
  return satisfies_impl(view, id, /*multiplicative=*/true);
}

VarietySpec VarietySpec::sr(int n) {
  if (n < 2) throw PreconditionError("variety exponent must be >= 2");
  VarietySpec v;
  v.name = "sr" + std::to_string(n);
  v.exponent = n;
  auto all = builtin_identities(n);
  v.identities = {all[0]};
  return v;
}

VarietySpec VarietySpec::mn(int n) {
  if (n < 2) throw PreconditionError("variety exponent must be >= 2");
  VarietySpec v;
  v.name = "m" + std::to_string(n);
  v.exponent = n;
  auto all = builtin_identities(n);
  v.identities = {all[0], all[1]};
  return v;
}

VarietySpec VarietySpec::gn(int n) {
  if (n < 2) throw PreconditionError("variety exponent must be >= 2");
  VarietySpec v;
  v.name = "g" + std::to_string(n);
  v.exponent = n;
  auto all = builtin_identities(n);
  v.identities = {all[0]};
  v.multiplicative_only = true;
  return v;
}

VarietySpec VarietySpec::sgn(int n) {
  VarietySpec v = gn(n);
  v.name = "sg" + std::to_string(n);
  return v;
}

VarietySpec VarietySpec::from_name(std::string_view name) {
  auto parse_n = [&](std::string_view rest) {
    if (rest.empty()) throw StructuralError("missing variety exponent");
    int n = 0;
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw StructuralError("bad variety name");
      n = n * 10 + (c - '0');
      if (n > 99) throw StructuralError("variety exponent too large");
    }
    if (n < 2) throw StructuralError("variety exponent must be >= 2");
    return n;
  };
  if (name.rfind("sr", 0) == 0) return sr(parse_n(name.substr(2)));
  if (name.rfind("sg", 0) == 0) return sgn(parse_n(name.substr(2)));
  if (name.rfind("m", 0) == 0) return mn(parse_n(name.substr(1)));
  if (name.rfind("g", 0) == 0) return gn(parse_n(name.substr(1)));
  throw StructuralError("unknown variety '" + std::string(name) +
                        "' (expected sr<n>, m<n>, g<n> or sg<n>)");
}

std::string VarietySpec::display_name() const {
  std::string n = std::to_string(exponent);
  if (name.rfind("sr", 0) == 0) return "Sr(" + n + ",1)";
  if (name.rfind("sg", 0) == 0) return "Sg(" + n + ",1)";
  if (name.rfind("m", 0) == 0) return "M_" + n;
  if (name.rfind("g", 0) == 0) return "G(" + n + ",1)";
  return name;
}

namespace {

MembershipResult membership_impl(const FiniteSemiring& S, const VarietySpec& V,
                                 bool multiplicative) {
  MembershipResult result;
  for (const auto& ni : V.identities) {
    SatisfactionResult r = multiplicative
                               ? satisfies_multiplicative(S, ni.identity)
                               : satisfies(S, ni.identity);
    if (!r.holds) {
      result.member = false;
      result.failed_identity = ni.name;
      result.failed_rendering = render_identity(ni.identity);
      result.failure = r;
      return result;
    }
  }
  return result;
}

}  // namespace

MembershipResult check_membership(const FiniteSemiring& S,
                                  const VarietySpec& V) {
  return membership_impl(S, V, V.multiplicative_only);
}

MembershipResult check_membership(const FiniteGroup& G, const VarietySpec& V) {
  MembershipResult result;
  for (const auto& ni : V.identities) {
    SatisfactionResult r = satisfies(G, ni.identity);
    if (!r.holds) {
      result.member = false;
      result.failed_identity = ni.name;
      result.failed_rendering = render_identity(ni.identity);
      result.failure = r;
      return result;
    }
  }
  return result;
}

bool member_of(const FiniteSemiring& S, const VarietySpec& V) {
  return check_membership(S, V).member;
}

bool member_of(const FiniteGroup& G, const VarietySpec& V) {
  return check_membership(G, V).member;
}

std::vector<NamedIdentity> builtin_identities(int n) {
  if (n < 2) throw PreconditionError("exponent must be >= 2");
  const int x = 0;
  const int y = 1;
  auto xw = [&](int e) { return Word::power(x, e); };
  auto yw = [&](int e) { return Word::power(y, e); };
  auto single = [](Word w) { return SemiringTerm::single(std::move(w)); };

  std::vector<NamedIdentity> out;
  // x^n = x
  out.push_back({"exponent-law", {single(xw(n)), single(xw(1))}});
  // x^{n-1} + y^{n-1} = x^{n-1} y^{n-1}
  out.push_back({"mn-law",
                 {SemiringTerm({xw(n - 1), yw(n - 1)}),
                  single(xw(n - 1).concat(yw(n - 1)))}});
  // x^{n-1} y^{n-1} = y^{n-1} x^{n-1}
  out.push_back({"power-commutation",
                 {single(xw(n - 1).concat(yw(n - 1))),
                  single(yw(n - 1).concat(xw(n - 1)))}});
  // x y^{n-1} = y^{n-1} x
  out.push_back({"power-centrality",
                 {single(xw(1).concat(yw(n - 1))),
                  single(yw(n - 1).concat(xw(1)))}});
  // x + y = x y^{n-1} + x^{n-1} y
  out.push_back({"sum-splitting",
                 {SemiringTerm({xw(1), yw(1)}),
                  SemiringTerm({xw(1).concat(yw(n - 1)),
                                xw(n - 1).concat(yw(1))})}});
  // x + x^{n-1} = x + x^2 + ... + x^{n-1}
  {
    std::vector<Word> rhs;
    for (int e = 1; e <= n - 1; ++e) rhs.push_back(xw(e));
    out.push_back({"power-sum-collapse",
                   {SemiringTerm({xw(1), xw(n - 1)}),
                    SemiringTerm(std::move(rhs))}});
  }
  // (xy)^{n-1} = x^{n-1} y^{n-1}
  {
    Word xy = xw(1).concat(yw(1));
    Word lhs = xy;
    for (int i = 1; i < n - 1; ++i) lhs = lhs.concat(xy);
    out.push_back({"product-power",
                   {single(std::move(lhs)),
                    single(xw(n - 1).concat(yw(n - 1)))}});
  }
  return out;
}

std::vector<NamedIdentity> derived_identities(int n) {
  auto all = builtin_identities(n);
  return {all.begin() + 2, all.end()};
}

namespace {

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  Identity parse() {
    SemiringTerm lhs = parse_term();
    skip_space();
    if (!consume_equals())
      throw StructuralError("expected '≈' or '=' between identity sides");
    SemiringTerm rhs = parse_term();
    skip_space();
    if (pos_ != text_.size())
      throw StructuralError("trailing characters in identity");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume_equals() {
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      return true;
    }
    static const std::string approx = "\xE2\x89\x88";  // ≈
    if (text_.substr(pos_, 3) == approx) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  SemiringTerm parse_term() {
    std::vector<Word> words;
    words.push_back(parse_word());
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        words.push_back(parse_word());
      } else {
        break;
      }
    }
    return SemiringTerm(std::move(words));
  }

  Word parse_word() {
    std::vector<int> letters;
    append_factor(letters);
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        append_factor(letters);
      } else {
        break;
      }
    }
    return Word(std::move(letters));
  }

  void append_factor(std::vector<int>& letters) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'x')
      throw StructuralError("expected a variable x1..x9");
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9')
      throw StructuralError("variables are x1..x9");
    int var = text_[pos_] - '1';
    ++pos_;
    int exponent = 1;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) throw StructuralError("expected exponent after '^'");
      exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (exponent < 1 || exponent > 64)
        throw StructuralError("exponent out of range 1..64");
    }
    for (int i = 0; i < exponent; ++i) letters.push_back(var);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text) {
  return IdentityParser(text).parse();
}

std::string render_word(const Word& w) {
  std::ostringstream out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!first) out << "*";
    first = false;
    out << "x" << (ls[i] + 1);
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

std::string render_term(const SemiringTerm& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& w : t.words()) {
    if (!first) out << " + ";
    first = false;
    out << render_word(w);
  }
  return out.str();
}

std::string render_identity(const Identity& id) {
  return render_term(id.lhs) + " \xE2\x89\x88 " + render_term(id.rhs);
}

std::string render_assignment(const std::vector<std::pair<int, int>>& a,
                              const FiniteSemiring* S) {
  std::ostringstream out;
  bool first = true;
  for (auto [var, value] : a) {
    if (!first) out << ", ";
    first = false;
    out << "x" << (var + 1) << "=";
    if (S)
      out << S->element_name(value);
    else
      out << value;
  }
  return out.str();
}

}  // namespace aisr
