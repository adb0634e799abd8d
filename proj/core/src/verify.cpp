#include "aisr/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "aisr/congruence.hpp"
#include "aisr/construct.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/structure.hpp"
#include "aisr/util.hpp"

namespace aisr {

namespace {

struct GroupSubject {
  std::string label;
  FiniteGroup group;
  bool abelian_sylows_expected;
};

std::vector<GroupSubject> builtin_groups() {
  std::vector<GroupSubject> out;
  out.push_back({"zn:1", cyclic_group(1), true});
  out.push_back({"zn:2", cyclic_group(2), true});
  out.push_back({"zn:3", cyclic_group(3), true});
  out.push_back({"zn:4", cyclic_group(4), true});
  out.push_back(
      {"prod(zn:2,zn:2)", direct_product(cyclic_group(2), cyclic_group(2)),
       true});
  out.push_back({"q8", quaternion_group(), false});
  out.push_back({"gp:3", heisenberg_group(3), false});
  return out;
}

class SubjectChecker {
 public:
  SubjectChecker(std::string subject, int n)
      : subject_(std::move(subject)), n_(n) {}

  std::vector<CheckResult> take() { return std::move(results_); }

  void record(const std::string& check, bool pass, std::string detail) {
    results_.push_back({check, subject_, pass, std::move(detail)});
  }

  template <class Fn>
  void guarded(const std::string& check, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      record(check, false, e.what());
    }
  }

  void check_semiring(const FiniteSemiring& S, bool is_flat) {
    guarded("axioms", [&] {
      auto report = validate_axioms(S);
      record("axioms", report.ok(),
             report.ok() ? "valid ai-semiring" : report.describe(S));
    });

    guarded("variety-membership", [&] {
      auto sr = check_membership(S, VarietySpec::sr(n_));
      auto mn = check_membership(S, VarietySpec::mn(n_));
      bool pass = sr.member && mn.member;
      std::string detail =
          pass ? "member of " + VarietySpec::sr(n_).display_name() + " and " +
                     VarietySpec::mn(n_).display_name()
               : (sr.member ? mn : sr).failed_rendering + " fails at " +
                     render_assignment(
                         (sr.member ? mn : sr).failure.counterexample, &S);
      record("variety-membership", pass, detail);
    });

    guarded("derived-identities", [&] {
      for (const auto& ni : derived_identities(n_)) {
        auto r = satisfies(S, ni.identity);
        if (!r.holds) {
          record("derived-identities", false,
                 ni.name + ": " + render_identity(ni.identity) + " fails at " +
                     render_assignment(r.counterexample, &S));
          return;
        }
      }
      record("derived-identities", true, "all five hold");
    });

    guarded("idempotent-subsemiring", [&] {
      auto E = idempotents(S);
      record("idempotent-subsemiring", true,
             "|E(S)| = " + std::to_string(E.elements.size()));
    });

    guarded("diagonal-restriction", [&] {
      auto E = idempotents(S);
      for (const auto& theta : all_congruences(S)) {
        bool identity_on_s = theta.is_identity();
        bool identity_on_e =
            theta.partition().restrict_to(E.elements).is_identity();
        if (identity_on_s != identity_on_e) {
          record("diagonal-restriction", false,
                 "congruence " + render_partition(theta.partition()) +
                     " breaks the restriction criterion");
          return;
        }
      }
      record("diagonal-restriction", true,
             "identity iff identity on E(S), all congruences");
    });

    guarded("congruence-extension", [&] {
      auto E = idempotents(S);
      std::vector<Partition> rhos;
      if (E.algebra.order() <= 8) {
        rhos = congruences_by_exhaustive_scan(E.algebra);
      } else {
        for (const auto& c : all_congruences(E.algebra))
          rhos.push_back(c.partition());
      }
      for (const auto& rho : rhos) {
        auto tau = extend_idempotent_congruence(S, n_, rho);
        if (!(tau.partition().restrict_to(E.elements) == rho)) {
          record("congruence-extension", false,
                 "restriction mismatch for rho = " + render_partition(rho));
          return;
        }
      }
      record("congruence-extension", true,
             std::to_string(rhos.size()) + " congruences on E(S) extended");
    });

    guarded("order-duality", [&] {
      auto report = partial_orders(S, n_);
      if (!report.plus_is_partial_order || !report.mul_is_partial_order) {
        record("order-duality", false, report.order_violation);
        return;
      }
      if (!report.duality_holds) {
        auto [a, b] = report.duality_violations.front();
        record("order-duality", false,
               "pair (" + S.element_name(a) + "," + S.element_name(b) +
                   ") breaks the duality");
        return;
      }
      if (report.glb_checked && !report.glb_missing.empty()) {
        record("order-duality", false,
               "greatest lower bound with " +
                   S.element_name(report.top_idempotent) + " missing for " +
                   S.element_name(report.glb_missing.front()));
        return;
      }
      record("order-duality", true, "<=+ is the converse of <=.");
    });

    if (S.order() >= 2) {
      guarded("si-equivalence", [&] {
        bool si = is_subdirectly_irreducible(S);
        bool simple = is_congruence_simple(S);
        bool zg = is_zero_group(S).has_value();
        bool pass = si == simple && si == zg;
        std::ostringstream detail;
        detail << "si=" << (si ? "yes" : "no")
               << " simple=" << (simple ? "yes" : "no")
               << " zero-group=" << (zg ? "yes" : "no");
        record("si-equivalence", pass, detail.str());
      });

      guarded("si-flat-representation", [&] {
        bool si = is_subdirectly_irreducible(S);
        if (is_flat && !si) {
          record("si-flat-representation", false,
                 "flat extension is not subdirectly irreducible");
          return;
        }
        if (si) {
          auto zg = is_zero_group(S);
          if (!zg) {
            record("si-flat-representation", false,
                   "subdirectly irreducible without a 0-group reduct");
            return;
          }
          auto flat = flat_extension(zg->group);
          if (!are_isomorphic(S, flat)) {
            record("si-flat-representation", false,
                   "not isomorphic to the flat extension of its group part");
            return;
          }
          record("si-flat-representation", true,
                 "isomorphic to the flat extension of its group part");
        } else {
          record("si-flat-representation", true,
                 "not subdirectly irreducible; nothing to represent");
        }
      });
    }

    if (is_flat) {
      guarded("flat-addition-laws", [&] {
        auto zg = is_zero_group(S);
        if (!zg) {
          record("flat-addition-laws", false, "no 0-group reduct");
          return;
        }
        const int zero = zg->zero;
        for (int c = 0; c < S.order(); ++c)
          for (int d = 0; d < S.order(); ++d) {
            int expected = c == d ? c : zero;
            if (S.add(c, d) != expected) {
              record("flat-addition-laws", false,
                     S.element_name(c) + "+" + S.element_name(d) + " = " +
                         S.element_name(S.add(c, d)));
              return;
            }
          }
        for (int a : zg->group_elements) {
          int e = zg->group_elements[zg->group.identity()];
          if (a == e) continue;
          if (S.add(a, S.power(a, n_ - 1)) != zero) {
            record("flat-addition-laws", false,
                   S.element_name(a) + " + " + S.element_name(a) + "^" +
                       std::to_string(n_ - 1) + " != 0");
            return;
          }
        }
        record("flat-addition-laws", true,
               "c+d = 0 off the diagonal and a + a^{n-1} = 0 off the "
               "identity");
      });
    }

    guarded("green-characterizations", [&] {
      auto report = verify_green_characterizations(S, n_);
      if (!report.h_power_match) {
        auto [a, b] = report.h_witness;
        record("green-characterizations", false,
               "H differs from the power characterization at (" +
                   S.element_name(a) + "," + S.element_name(b) + ")");
        return;
      }
      if (!report.d_power_match) {
        auto [a, b] = report.d_witness;
        record("green-characterizations", false,
               "D differs from the power characterization at (" +
                   S.element_name(a) + "," + S.element_name(b) + ")");
        return;
      }
      if (!report.d_equals_h) {
        auto [a, b] = report.dh_witness;
        record("green-characterizations", false,
               "D differs from H at (" + S.element_name(a) + "," +
                   S.element_name(b) + ")");
        return;
      }
      record("green-characterizations", true,
             "H and D match their power characterizations and coincide");
    });

    guarded("clifford-reduct", [&] {
      auto clifford = is_clifford(S);
      record("clifford-reduct", clifford.has_value(),
             clifford ? "semilattice of " +
                            std::to_string(clifford->class_count) + " groups"
                      : "multiplicative reduct is not a Clifford semigroup");
    });

    guarded("closure-bound", [&] {
      std::mt19937 rng(20260809);
      std::vector<std::vector<int>> samples;
      samples.push_back({0});
      samples.push_back({S.order() - 1});
      std::vector<int> all(S.order());
      for (int i = 0; i < S.order(); ++i) all[i] = i;
      samples.push_back(all);
      for (int t = 0; t < 2; ++t) {
        std::vector<int> subset;
        for (int i = 0; i < S.order(); ++i)
          if (rng() % 2) subset.push_back(i);
        if (subset.empty()) subset.push_back(static_cast<int>(rng() % S.order()));
        samples.push_back(std::move(subset));
      }
      for (const auto& sample : samples) {
        auto closure = generated_subalgebras(S, sample);
        if (closure.semiring_closure.size() < closure.semigroup_closure.size()) {
          record("closure-bound", false, "closures out of order");
          return;
        }
      }
      record("closure-bound", true,
             std::to_string(samples.size()) + " generator sets closed");
    });
  }

  void check_group(const GroupSubject& gs, int n) {
    guarded("group-axioms", [&] {
      auto report = validate_group(gs.group);
      record("group-axioms", report.ok(),
             report.ok() ? "valid group" : report.describe(gs.group));
    });

    guarded("group-variety", [&] {
      auto r = check_membership(gs.group, VarietySpec::gn(n));
      record("group-variety", r.member,
             r.member ? "member of " + VarietySpec::gn(n).display_name()
                      : r.failed_rendering + " fails");
    });

    guarded("sylow-abelian", [&] {
      auto report = sylow_abelian_report(gs.group);
      std::ostringstream detail;
      for (const auto& e : report.entries) {
        if (&e != &report.entries.front()) detail << "; ";
        detail << "Sylow-" << e.prime << " order " << e.order << " "
               << (e.abelian ? "abelian" : "non-abelian");
      }
      if (!report.all_abelian)
        detail << "; flat extension predicted not finitely based";
      record("sylow-abelian", report.all_abelian == gs.abelian_sylows_expected,
             detail.str());
    });

    if (gs.label == "q8") {
      guarded("q8-facts", [&] {
        const FiniteGroup& G = gs.group;
        bool pass = G.order() == 8 && G.exponent() == 4 && !G.is_abelian();
        // i*j = k and j*i = -k witness the non-commutativity.
        pass = pass && G.mul(2, 4) == 6 && G.mul(4, 2) == 7;
        record("q8-facts", pass,
               "order 8, exponent 4, i*j=k, j*i=-k");
      });
    }
    if (gs.label == "gp:3") {
      guarded("gp-facts", [&] {
        const FiniteGroup& G = gs.group;
        bool pass = G.order() == 27 && G.exponent() == 3 && !G.is_abelian();
        int center = 0;
        for (int a = 0; a < G.order() && pass; ++a) {
          bool central = true;
          for (int b = 0; b < G.order(); ++b)
            if (G.mul(a, b) != G.mul(b, a)) {
              central = false;
              break;
            }
          if (central) ++center;
        }
        pass = pass && center == 3;
        record("gp-facts", pass, "order 27, exponent 3, center of order 3");
      });
    }
  }

 private:
  std::string subject_;
  int n_;
  std::vector<CheckResult> results_;
};

}  // namespace

BatteryReport run_battery(const BatteryOptions& options) {
  const int n = options.n;
  if (n < 2) throw PreconditionError("battery exponent must be >= 2");

  struct Task {
    std::string label;
    enum { kGroup, kFlat, kCatalog } kind;
    int group_index = -1;
    int catalog_index = -1;
  };

  auto groups = builtin_groups();
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if ((n - 1) % groups[i].group.exponent() != 0) continue;
    tasks.push_back({groups[i].label, Task::kGroup, static_cast<int>(i), -1});
    tasks.push_back(
        {"flat(" + groups[i].label + ")", Task::kFlat, static_cast<int>(i), -1});
  }
  Catalog catalog = enumerate_up_to(options.max_catalog_order,
                                    VarietySpec::mn(n));
  for (std::size_t i = 0; i < catalog.entries.size(); ++i)
    tasks.push_back({catalog.entries[i].stem, Task::kCatalog, -1,
                     static_cast<int>(i)});

  auto run_task = [&](std::size_t index) {
    const Task& task = tasks[index];
    SubjectChecker checker(task.label, n);
    switch (task.kind) {
      case Task::kGroup:
        checker.check_group(groups[task.group_index], n);
        break;
      case Task::kFlat:
        checker.check_semiring(flat_extension(groups[task.group_index].group),
                               /*is_flat=*/true);
        break;
      case Task::kCatalog:
        checker.check_semiring(catalog.entries[task.catalog_index].algebra,
                               /*is_flat=*/false);
        break;
    }
    return checker.take();
  };

  auto chunks = parallel_map<std::vector<CheckResult>>(
      tasks.size(), options.workers, run_task);

  BatteryReport report;
  for (auto& chunk : chunks)
    for (auto& result : chunk) {
      if (!result.pass) ++report.failures;
      report.results.push_back(std::move(result));
    }
  return report;
}

}  // namespace aisr
