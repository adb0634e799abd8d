// Command line front end for the finite ai-semiring workbench.
//
// Exit codes: 0 clean, 1 a verified claim was falsified on the input,
// 2 usage, parse or resource errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aisr/congruence.hpp"
#include "aisr/construct.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/io.hpp"
#include "aisr/structure.hpp"
#include "aisr/term.hpp"
#include "aisr/util.hpp"
#include "aisr/verify.hpp"
#include "json.hpp"

using namespace aisr;
using nlohmann::json;

namespace {

struct Output {
  bool json_lines = false;

  void line(const std::string& text, const json& object) const {
    if (json_lines)
      std::cout << object.dump() << '\n';
    else
      std::cout << text << '\n';
  }
};

Algebra load_algebra(const std::string& arg) {
  if (arg == "-") return read_algebra(std::cin);
  if (std::filesystem::exists(arg)) return read_algebra_file(arg);
  if (looks_like_builder(arg)) return build_named_algebra(arg);
  throw StructuralError("'" + arg +
                        "' is neither a file nor a builder expression");
}

FiniteSemiring load_semiring(const std::string& arg) {
  auto a = load_algebra(arg);
  if (auto* s = std::get_if<FiniteSemiring>(&a)) return *s;
  throw StructuralError("'" + arg + "' holds a group; a semiring is needed");
}

FiniteGroup load_group(const std::string& arg) {
  auto a = load_algebra(arg);
  if (auto* g = std::get_if<FiniteGroup>(&a)) return *g;
  throw StructuralError("'" + arg + "' holds a semiring; a group is needed");
}

std::string element_set(const FiniteSemiring& S, const std::vector<int>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << S.element_name(xs[i]);
  }
  out << '}';
  return out.str();
}

int run_check(const Output& out, const std::string& arg,
              std::optional<int> n) {
  auto algebra = load_algebra(arg);
  std::vector<std::string> segments;
  std::vector<json> records;
  bool clean = true;

  if (const auto* S = std::get_if<FiniteSemiring>(&algebra)) {
    auto report = validate_axioms(*S);
    segments.push_back(report.ok() ? "valid ai-semiring"
                                   : "invalid ai-semiring: " +
                                         report.describe(*S));
    clean = report.ok();
    records.push_back(json{{"record", "axioms"},
                           {"kind", "semiring"},
                           {"order", S->order()},
                           {"pass", report.ok()},
                           {"detail", segments.back()}});
    if (n && report.ok()) {
      for (auto V : {VarietySpec::sr(*n), VarietySpec::mn(*n)}) {
        auto m = check_membership(*S, V);
        std::string segment =
            m.member ? "member of " + V.display_name()
                     : "not a member of " + V.display_name() + ": " +
                           m.failed_rendering + " fails at " +
                           render_assignment(m.failure.counterexample, S);
        clean = clean && m.member;
        records.push_back(json{{"record", "membership"},
                               {"variety", V.display_name()},
                               {"pass", m.member},
                               {"detail", segment}});
        segments.push_back(segment);
      }
    }
  } else {
    const auto& G = std::get<FiniteGroup>(algebra);
    auto report = validate_group(G);
    segments.push_back(report.ok() ? "valid group"
                                   : "invalid group: " + report.describe(G));
    clean = report.ok();
    records.push_back(json{{"record", "axioms"},
                           {"kind", "group"},
                           {"order", G.order()},
                           {"pass", report.ok()},
                           {"detail", segments.back()}});
    if (n && report.ok()) {
      auto V = VarietySpec::gn(*n);
      auto m = check_membership(G, V);
      std::string segment = m.member
                                ? "member of " + V.display_name()
                                : "not a member of " + V.display_name() +
                                      ": " + m.failed_rendering + " fails";
      clean = clean && m.member;
      records.push_back(json{{"record", "membership"},
                             {"variety", V.display_name()},
                             {"pass", m.member},
                             {"detail", segment}});
      segments.push_back(segment);
    }
  }

  if (out.json_lines) {
    for (const auto& record : records) out.line("", record);
  } else {
    std::ostringstream joined;
    for (std::size_t i = 0; i < segments.size(); ++i)
      joined << (i ? "; " : "") << segments[i];
    std::cout << joined.str() << '\n';
  }
  return clean ? 0 : 1;
}

std::vector<NamedIdentity> custom_identities(
    const std::vector<std::string>& inline_texts, const std::string& path) {
  std::vector<NamedIdentity> battery;
  int index = 1;
  for (const auto& text : inline_texts)
    battery.push_back({"inline-" + std::to_string(index++),
                       parse_identity(text)});
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      battery.push_back({path + ":" + std::to_string(lineno),
                         parse_identity(line)});
    }
  }
  return battery;
}

int run_identities(const Output& out, const std::string& arg,
                   std::optional<int> n,
                   const std::vector<std::string>& inline_texts,
                   const std::string& file) {
  auto S = load_semiring(arg);
  std::vector<NamedIdentity> battery;
  if (!inline_texts.empty() || !file.empty()) {
    battery = custom_identities(inline_texts, file);
  } else {
    if (!n)
      throw StructuralError("--n is required to run the built-in battery");
    battery = builtin_identities(*n);
  }
  bool clean = true;
  for (const auto& ni : battery) {
    auto r = satisfies(S, ni.identity);
    std::ostringstream text;
    if (r.holds) {
      text << "ok   " << ni.name << ": " << render_identity(ni.identity);
    } else {
      clean = false;
      text << "FAIL " << ni.name << ": " << render_identity(ni.identity)
           << " at " << render_assignment(r.counterexample, &S) << " (lhs="
           << S.element_name(r.lhs_value)
           << ", rhs=" << S.element_name(r.rhs_value) << ")";
    }
    json object{{"record", "identity"},
                {"name", ni.name},
                {"identity", render_identity(ni.identity)},
                {"pass", r.holds}};
    if (!r.holds) object["witness"] = render_assignment(r.counterexample, &S);
    out.line(text.str(), object);
  }
  return clean ? 0 : 1;
}

int run_congruences(const Output& out, const std::string& arg, bool lattice) {
  auto S = load_semiring(arg);
  if (S.order() < 2)
    throw PreconditionError("congruence analysis needs order >= 2");
  auto all = all_congruences(S);
  auto mono = monolith(S);

  if (lattice) {
    auto covers = lattice_covers(all);
    out.line("lattice:", json{{"record", "lattice-header"},
                              {"count", all.size()}});
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::ostringstream text;
      text << "  " << i << ": " << render_partition(all[i].partition())
           << " covers";
      if (covers[i].empty()) text << " -";
      for (std::size_t j = 0; j < covers[i].size(); ++j)
        text << (j ? "," : " ") << covers[i][j];
      out.line(text.str(), json{{"record", "congruence"},
                                {"index", i},
                                {"partition",
                                 render_partition(all[i].partition())},
                                {"covers", covers[i]}});
    }
  }

  std::string mono_text =
      mono ? render_partition(mono->partition()) : std::string("none");
  bool si = mono.has_value();
  bool simple = all.size() == 2;
  out.line("congruences: " + std::to_string(all.size()),
           json{{"record", "congruence-count"}, {"count", all.size()}});
  out.line("monolith: " + mono_text,
           json{{"record", "monolith"},
                {"partition", mono ? json(mono_text) : json(nullptr)}});
  out.line(std::string("subdirectly irreducible: ") + (si ? "yes" : "no"),
           json{{"record", "subdirectly-irreducible"}, {"value", si}});
  out.line(std::string("congruence simple: ") + (simple ? "yes" : "no"),
           json{{"record", "congruence-simple"}, {"value", simple}});
  return 0;
}

int run_green(const Output& out, const std::string& arg,
              std::optional<int> n) {
  auto S = load_semiring(arg);
  auto g = green_relations(S);

  auto blocks_of = [&](const Partition& p, int d_block) {
    // Blocks of p inside one D-class, ordered by least element.
    std::vector<std::vector<int>> result;
    for (const auto& block : p.blocks()) {
      if (g.d.block(block.front()) != d_block) continue;
      result.push_back(block);
    }
    return result;
  };

  for (const auto& d_class : g.d.blocks()) {
    int d_block = g.d.block(d_class.front());
    out.line("D-class " + element_set(S, d_class) + ":",
             json{{"record", "d-class"}, {"elements", d_class}});
    auto rows = blocks_of(g.r, d_block);
    auto cols = blocks_of(g.l, d_block);
    for (const auto& row : rows) {
      std::ostringstream text;
      text << "  [";
      json cells = json::array();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) text << " |";
        std::vector<int> cell;
        for (int x : row)
          if (g.l.block(x) == g.l.block(cols[c].front())) cell.push_back(x);
        json cell_names = json::array();
        for (int x : cell) {
          bool idem = S.mul(x, x) == x;
          text << ' ' << S.element_name(x) << (idem ? "*" : "");
          cell_names.push_back(S.element_name(x) + (idem ? "*" : ""));
        }
        if (cell.empty()) text << " -";
        cells.push_back(cell_names);
      }
      text << " ]";
      out.line(text.str(), json{{"record", "r-class-row"}, {"cells", cells}});
    }
  }

  if (n) {
    auto report = verify_green_characterizations(S, *n);
    auto pair_text = [&](std::pair<int, int> p) {
      return "(" + S.element_name(p.first) + "," + S.element_name(p.second) +
             ")";
    };
    out.line(std::string("H power characterization: ") +
                 (report.h_power_match
                      ? "ok"
                      : "FALSIFIED at " + pair_text(report.h_witness)),
             json{{"record", "h-characterization"},
                  {"pass", report.h_power_match}});
    out.line(std::string("D power characterization: ") +
                 (report.d_power_match
                      ? "ok"
                      : "FALSIFIED at " + pair_text(report.d_witness)),
             json{{"record", "d-characterization"},
                  {"pass", report.d_power_match}});
    out.line(std::string("D equals H: ") +
                 (report.d_equals_h ? "yes"
                                    : "no, e.g. " + pair_text(report.dh_witness)),
             json{{"record", "d-equals-h"}, {"value", report.d_equals_h}});
    if (!report.h_power_match || !report.d_power_match) return 1;
  }
  return 0;
}

int run_orders(const Output& out, const std::string& arg, int n) {
  auto S = load_semiring(arg);
  auto report = partial_orders(S, n);

  auto pairs_text = [&](const std::vector<std::pair<int, int>>& pairs) {
    std::ostringstream text;
    bool first = true;
    for (auto [a, b] : pairs) {
      if (a == b) continue;
      if (!first) text << ", ";
      first = false;
      text << S.element_name(a) << "<=" << S.element_name(b);
    }
    if (first) text << "(only reflexive pairs)";
    return text.str();
  };
  out.line("leq+ : " + pairs_text(report.leq_plus),
           json{{"record", "leq-plus"}, {"pairs", report.leq_plus}});
  out.line("leq. : " + pairs_text(report.leq_mul),
           json{{"record", "leq-mul"}, {"pairs", report.leq_mul}});

  bool orders_ok =
      report.plus_is_partial_order && report.mul_is_partial_order;
  out.line(std::string("partial orders: ") +
               (orders_ok ? "ok" : report.order_violation),
           json{{"record", "partial-orders"},
                {"pass", orders_ok},
                {"detail", report.order_violation}});
  out.line(std::string("duality: ") +
               (report.duality_holds ? "ok (<=+ is the converse of <=.)"
                                     : "FALSIFIED"),
           json{{"record", "duality"}, {"pass", report.duality_holds}});
  if (!report.duality_holds)
    for (auto [a, b] : report.duality_violations)
      out.line("  violating pair: (" + S.element_name(a) + "," +
                   S.element_name(b) + ")",
               json{{"record", "duality-violation"}, {"a", a}, {"b", b}});
  if (report.glb_checked) {
    bool ok = report.glb_missing.empty();
    out.line("glb with top idempotent " +
                 S.element_name(report.top_idempotent) + ": " +
                 (ok ? "ok" : "missing for " +
                                  S.element_name(report.glb_missing.front())),
             json{{"record", "glb"},
                  {"top", report.top_idempotent},
                  {"pass", ok},
                  {"missing", report.glb_missing}});
    if (!ok) return 1;
  }
  return orders_ok && report.duality_holds ? 0 : 1;
}

int run_extend(const Output& out, const std::string& arg,
               const std::string& rho_text, int n) {
  auto S = load_semiring(arg);
  auto E = idempotents(S);

  // rho is written over the original element indices of E(S).
  auto raw_blocks = parse_blocks(rho_text);
  std::vector<std::vector<int>> mapped;
  for (const auto& block : raw_blocks) {
    std::vector<int> positions;
    for (int original : block) {
      int pos = original >= 0 && original < S.order() ? E.index_of(original)
                                                      : -1;
      if (pos < 0)
        throw StructuralError("element " + std::to_string(original) +
                              " is not an idempotent of the algebra");
      positions.push_back(pos);
    }
    mapped.push_back(std::move(positions));
  }
  auto rho = partition_from_blocks(mapped, static_cast<int>(E.elements.size()));

  out.line("E(S) = " + element_set(S, E.elements),
           json{{"record", "idempotents"}, {"elements", E.elements}});
  auto tau = extend_idempotent_congruence(S, n, rho);
  bool exact = tau.partition().restrict_to(E.elements) == rho;
  out.line("tau = " + render_partition(tau.partition()),
           json{{"record", "extension"},
                {"tau", render_partition(tau.partition())},
                {"restriction_equals_rho", exact}});
  out.line(std::string("restriction equals rho: ") + (exact ? "yes" : "NO"),
           json{{"record", "restriction"}, {"pass", exact}});
  return exact ? 0 : 1;
}

int run_build(const Output& out, const std::string& expr) {
  auto algebra = build_named_algebra(expr);
  std::ostringstream text;
  write_algebra(text, algebra);
  if (out.json_lines) {
    out.line("", json{{"record", "algebra"}, {"text", text.str()}});
  } else {
    std::cout << text.str();
  }
  return 0;
}

int run_sylow(const Output& out, const std::string& arg) {
  auto G = load_group(arg);
  auto report = sylow_abelian_report(G);
  out.line("|G| = " + std::to_string(G.order()),
           json{{"record", "group-order"}, {"order", G.order()}});
  for (const auto& e : report.entries) {
    std::ostringstream text;
    text << "Sylow-" << e.prime << ": order " << e.order << ", elements {";
    for (std::size_t i = 0; i < e.subgroup.size(); ++i) {
      if (i) text << ',';
      text << G.element_name(e.subgroup[i]);
    }
    text << "}, " << (e.abelian ? "abelian" : "non-abelian");
    out.line(text.str(), json{{"record", "sylow"},
                              {"prime", e.prime},
                              {"order", e.order},
                              {"subgroup", e.subgroup},
                              {"abelian", e.abelian}});
  }
  if (!report.all_abelian)
    out.line(
        "prediction: flat extension is not finitely based (non-abelian "
        "Sylow subgroup)",
        json{{"record", "prediction"},
             {"flat_extension_finitely_based", false}});
  return 0;
}

int run_enumerate(const Output& out, int order, const std::string& variety,
                  const std::string& out_dir) {
  auto V = VarietySpec::from_name(variety);
  if (V.multiplicative_only)
    throw StructuralError("enumeration needs a semiring variety (sr<n>, m<n>)");
  auto catalog = enumerate_up_to(order, V);
  for (int k = 1; k <= order; ++k) {
    out.line("order " + std::to_string(k) + ": " +
                 std::to_string(catalog.counts_per_order[k - 1]),
             json{{"record", "order-count"},
                  {"order", k},
                  {"count", catalog.counts_per_order[k - 1]}});
  }
  out.line("total: " + std::to_string(catalog.entries.size()),
           json{{"record", "total"}, {"count", catalog.entries.size()}});

  std::ostringstream counts;
  for (std::size_t i = 0; i < catalog.counts_per_order.size(); ++i)
    counts << (i ? "," : "") << catalog.counts_per_order[i];
  out.line("summary variety=" + V.name + " max-order=" +
               std::to_string(order) + " counts=" + counts.str(),
           json{{"record", "summary"},
                {"variety", V.name},
                {"max_order", order},
                {"counts", catalog.counts_per_order}});

  if (!out_dir.empty()) {
    write_catalog(catalog, out_dir);
    out.line("wrote " + std::to_string(catalog.entries.size()) + " files to " +
                 out_dir,
             json{{"record", "written"},
                  {"directory", out_dir},
                  {"files", catalog.entries.size()}});
  }
  return 0;
}

int run_verify(const Output& out, int n, int max_order) {
  BatteryOptions options;
  options.n = n;
  options.max_catalog_order = max_order;
  options.workers = env_worker_count();
  auto report = run_battery(options);
  for (const auto& r : report.results) {
    std::ostringstream text;
    text << (r.pass ? "[pass] " : "[FAIL] ") << r.check << ": " << r.subject
         << " -- " << r.detail;
    out.line(text.str(), json{{"record", "check"},
                              {"check", r.check},
                              {"subject", r.subject},
                              {"pass", r.pass},
                              {"detail", r.detail}});
  }
  out.line("checks: " + std::to_string(report.results.size()) +
               ", failures: " + std::to_string(report.failures),
           json{{"record", "battery-summary"},
                {"checks", report.results.size()},
                {"failures", report.failures}});
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ai-semiring workbench"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  std::string alg = "-";
  std::optional<int> check_n;
  auto* check = app.add_subcommand(
      "check", "validate axioms and variety membership");
  check->add_option("algebra", alg, "file, '-' for stdin, or builder");
  check->add_option("--n", check_n, "exponent of the variety pair");

  std::string id_alg = "-";
  std::optional<int> id_n;
  std::vector<std::string> id_inline;
  std::string id_file;
  auto* identities = app.add_subcommand(
      "identities",
      "run the built-in identity battery at exponent n, or custom ones");
  identities->add_option("algebra", id_alg, "file, '-' or builder");
  identities->add_option("--n", id_n, "exponent for the built-in battery");
  identities->add_option("--identity", id_inline,
                         "inline identity such as 'x1*x2^2 + x1 = x2*x1'");
  identities->add_option("--identities-file", id_file,
                         "file with one identity per line");

  std::string cong_alg = "-";
  bool lattice = false;
  auto* congruences = app.add_subcommand(
      "congruences", "congruence lattice, monolith, irreducibility");
  congruences->add_option("algebra", cong_alg, "file, '-' or builder");
  congruences->add_flag("--lattice", lattice, "print every congruence");

  std::string green_alg = "-";
  std::optional<int> green_n;
  auto* green = app.add_subcommand(
      "green", "eggbox view of the multiplicative reduct");
  green->add_option("algebra", green_alg, "file, '-' or builder");
  green->add_option("--n", green_n,
                    "also cross-check the power characterizations");

  std::string orders_alg = "-";
  int orders_n = 3;
  auto* orders = app.add_subcommand(
      "orders", "the two partial orders and their duality");
  orders->add_option("algebra", orders_alg, "file, '-' or builder");
  orders->add_option("--n", orders_n, "exponent")->required();

  std::string ext_alg = "-";
  std::string rho_text;
  int ext_n = 3;
  auto* extend = app.add_subcommand(
      "extend-congruence",
      "extend a congruence on E(S), written over original element indices");
  extend->add_option("algebra", ext_alg, "file, '-' or builder");
  extend->add_option("rho", rho_text, "partition such as [{0,2},{1}]")
      ->required();
  extend->add_option("--n", ext_n, "exponent")->required();

  std::string build_expr;
  auto* build = app.add_subcommand("build", "print a named algebra table");
  build->add_option("name", build_expr,
                    "zn:<m>, q8, gp:<p>, prod(g,g), flat(g)")
      ->required();

  std::string sylow_arg = "-";
  auto* sylow = app.add_subcommand("sylow", "Sylow subgroup report");
  sylow->add_option("group", sylow_arg, "file, '-' or builder");

  int enum_order = 3;
  std::string enum_variety = "m3";
  std::string enum_out;
  auto* enumerate = app.add_subcommand(
      "enumerate", "catalog all members up to isomorphism");
  enumerate->add_option("--order", enum_order, "maximum order (<= 4)")
      ->required();
  enumerate->add_option("--variety", enum_variety, "sr<n> or m<n>")
      ->required();
  enumerate->add_option("--out", enum_out, "directory for .alg files");

  int verify_n = 3;
  int verify_max_order = 4;
  auto* verify = app.add_subcommand(
      "verify-paper", "run the full verification battery at exponent n");
  verify->add_option("--n", verify_n, "exponent")->required();
  verify->add_option("--max-order", verify_max_order,
                     "catalog order bound (<= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out{format == "json-lines"};
  try {
    if (*check) return run_check(out, alg, check_n);
    if (*identities)
      return run_identities(out, id_alg, id_n, id_inline, id_file);
    if (*congruences) return run_congruences(out, cong_alg, lattice);
    if (*green) return run_green(out, green_alg, green_n);
    if (*orders) return run_orders(out, orders_alg, orders_n);
    if (*extend) return run_extend(out, ext_alg, rho_text, ext_n);
    if (*build) return run_build(out, build_expr);
    if (*sylow) return run_sylow(out, sylow_arg);
    if (*enumerate) return run_enumerate(out, enum_order, enum_variety,
                                         enum_out);
    if (*verify) return run_verify(out, verify_n, verify_max_order);
  } catch (const FalsificationError& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
