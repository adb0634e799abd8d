#include "aisr/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace aisr {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<std::string> tokens)
      : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ == tokens_.size(); }

  std::string next(const char* what) {
    if (done())
      throw StructuralError(std::string("unexpected end of input, expected ") +
                            what);
    return tokens_[pos_++];
  }

  int next_int(const char* what) {
    std::string tok = next(what);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw StructuralError("expected integer for " + std::string(what) +
                            ", got '" + tok + "'");
    }
  }

  std::string peek() const { return done() ? std::string() : tokens_[pos_]; }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

std::vector<int> read_table(TokenReader& r, int k, const char* which) {
  std::vector<int> table(k * k);
  for (int i = 0; i < k * k; ++i) table[i] = r.next_int(which);
  return table;
}

std::vector<std::string> read_names(TokenReader& r, int k) {
  std::vector<std::string> names;
  if (!r.done() && r.peek() == "names") {
    r.next("names");
    for (int i = 0; i < k; ++i) names.push_back(r.next("element name"));
  }
  return names;
}

}  // namespace

Algebra read_algebra(std::istream& in) {
  TokenReader r(tokenize(in));
  std::string kind = r.next("'semiring' or 'group'");
  if (kind == "semiring") {
    int k = r.next_int("order");
    if (k < 1) throw StructuralError("semiring order must be positive");
    auto add = read_table(r, k, "add entry");
    if (r.next("'mul'") != "mul")
      throw StructuralError("expected 'mul' between the tables");
    auto mul = read_table(r, k, "mul entry");
    auto names = read_names(r, k);
    if (!r.done()) throw StructuralError("trailing tokens after semiring");
    return FiniteSemiring(k, std::move(add), std::move(mul), std::move(names));
  }
  if (kind == "group") {
    int m = r.next_int("order");
    if (m < 1) throw StructuralError("group order must be positive");
    int e = r.next_int("identity index");
    auto mul = read_table(r, m, "group entry");
    auto names = read_names(r, m);
    if (!r.done()) throw StructuralError("trailing tokens after group");
    return FiniteGroup(m, std::move(mul), e, std::move(names));
  }
  throw StructuralError("file must start with 'semiring' or 'group', got '" +
                        kind + "'");
}

Algebra read_algebra_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_algebra(in);
}

Algebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  return read_algebra(in);
}

FiniteSemiring read_semiring_text(std::string_view text) {
  auto a = read_algebra_text(text);
  if (auto* s = std::get_if<FiniteSemiring>(&a)) return *s;
  throw StructuralError("expected a semiring, found a group");
}

FiniteGroup read_group_text(std::string_view text) {
  auto a = read_algebra_text(text);
  if (auto* g = std::get_if<FiniteGroup>(&a)) return *g;
  throw StructuralError("expected a group, found a semiring");
}

namespace {

void write_rows(std::ostream& out, int k, const std::vector<int>& table) {
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j) out << ' ';
      out << table[i * k + j];
    }
    out << '\n';
  }
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
  if (names.empty()) return;
  out << "names";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
}

}  // namespace

void write_semiring(std::ostream& out, const FiniteSemiring& S) {
  out << "semiring " << S.order() << '\n';
  write_rows(out, S.order(), S.add_table());
  out << "mul\n";
  write_rows(out, S.order(), S.mul_table());
  write_names(out, S.names());
}

void write_group(std::ostream& out, const FiniteGroup& G) {
  out << "group " << G.order() << ' ' << G.identity() << '\n';
  write_rows(out, G.order(), G.mul_table());
  write_names(out, G.names());
}

void write_algebra(std::ostream& out, const Algebra& a) {
  if (const auto* s = std::get_if<FiniteSemiring>(&a))
    write_semiring(out, *s);
  else
    write_group(out, std::get<FiniteGroup>(a));
}

std::string to_text(const FiniteSemiring& S) {
  std::ostringstream out;
  write_semiring(out, S);
  return out.str();
}

std::string to_text(const FiniteGroup& G) {
  std::ostringstream out;
  write_group(out, G);
  return out.str();
}

}  // namespace aisr
