// Acceptance suite: one PASS or FAIL line per criterion, exit status 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mtopos/catalog.hpp"
#include "mtopos/enumerate.hpp"
#include "mtopos/flatness.hpp"
#include "mtopos/harness.hpp"
#include "mtopos/topos.hpp"

#include "oracles.hpp"

using namespace mtopos;

namespace {

  using Clock = std::chrono::steady_clock;

  //! Outcome of one criterion: an empty `failure` means it passed.
  struct Outcome {
    std::string failure;
    std::string detail;
  };

  std::vector<Monoid> monoids_up_to(std::size_t max_order) {
    std::vector<Monoid> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ms = enumerate_monoids(n);
      out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
  }

  std::vector<RightMSet> msets_up_to(Monoid const& m, std::size_t max_size) {
    std::vector<RightMSet> out;
    for (std::size_t k = 0; k <= max_size; ++k) {
      auto xs = enumerate_msets(m, k);
      out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
  }

  // The suite run shared by criteria 2 to 6 and 11.
  struct SuiteRun {
    SuiteReport report;
    double      seconds = 0;
  };

  SuiteRun const& suite() {
    static SuiteRun const run = [] {
      auto const start = Clock::now();
      SuiteRun   r;
      r.report  = run_suite(4);
      r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return r;
    }();
    return run;
  }

  // Every listed condition of the theorem is evaluated and equals the
  // verdict, on every monoid of the suite.
  Outcome theorem_agrees(std::string const&              theorem,
                         std::vector<std::string> const& ids) {
    std::size_t checked = 0;
    for (auto const& e : suite().report.entries) {
      for (auto const& t : e.theorems) {
        if (t.id != theorem) {
          continue;
        }
        for (auto const& id : ids) {
          auto it = std::find_if(t.conditions.begin(), t.conditions.end(),
                                 [&](auto const& c) { return c.id == id; });
          if (it == t.conditions.end()) {
            return {"condition " + id + " missing from " + theorem, ""};
          }
          if (it->skipped) {
            return {e.canonical_hex + ": " + id + " skipped (" + it->note + ")", ""};
          }
          if (it->value != t.verdict) {
            return {e.canonical_hex + ": " + id + " differs from the verdict", ""};
          }
          ++checked;
        }
      }
    }
    return {"", std::to_string(checked) + " condition evaluations"};
  }

  Outcome all_of(std::vector<Outcome> const& parts) {
    Outcome out;
    for (auto const& p : parts) {
      if (!p.failure.empty()) {
        return p;
      }
      out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
    }
    return out;
  }

  Outcome two_valued() {
    std::size_t count = 0;
    for (auto const& m : monoids_up_to(4)) {
      auto const om = omega(m);
      if (fixed_points(om.omega).size() != 2) {
        return {canonical_form(m).hex() + ": |Gamma(Omega)| = "
                    + std::to_string(fixed_points(om.omega).size()),
                ""};
      }
      ++count;
    }
    return {"", std::to_string(count) + " monoids"};
  }

  Outcome boolean_theorem() {
    return theorem_agrees("boolean",
                          {"group", "omega_two_elements", "sub_msets_complemented"});
  }

  Outcome de_morgan_theorem() {
    return theorem_agrees("de_morgan", {"right_ore", "omega_two_components",
                                        "alpha_monic", "c_preserves_monos"});
  }

  Outcome local_theorem() {
    return theorem_agrees("local", {"right_absorbing_element",
                                    "nonempty_msets_have_fixed_points",
                                    "terminal_projective", "alpha_epic",
                                    "initial_point"});
  }

  Outcome totally_connected_theorem() {
    return theorem_agrees("totally_connected",
                          {"right_collapsible", "terminal_left_flat",
                           "c_preserves_equalizers",
                           "de_morgan_and_strongly_connected"});
  }

  // The power condition is checked in the form right Ore and M^|M|
  // indecomposable. The bare power condition is evaluated as well, and
  // every monoid where it differs from the verdict must fail right Ore.
  Outcome colocal_bilocal_theorems() {
    auto result = all_of(
        {theorem_agrees("colocal", {"left_absorbing_element",
                                    "right_ore_and_power_indecomposable",
                                    "components_are_Al"}),
         theorem_agrees("bilocal", {"zero_element", "alpha_iso"})});
    if (!result.failure.empty()) {
      return result;
    }
    std::size_t bare_mismatches = 0;
    for (auto const& m : monoids_up_to(4)) {
      bool const colocal = !element_classes(m).left_absorbing.empty();
      bool const bare    = is_indecomposable(power(regular(m), m.order(), 256));
      if (bare != colocal) {
        ++bare_mismatches;
        if (is_right_ore(m)) {
          return {canonical_form(m).hex()
                      + ": M^|M| indecomposability differs on a right Ore monoid",
                  ""};
        }
      }
    }
    result.detail += "; bare M^|M| form differs on " + std::to_string(bare_mismatches)
                     + " monoids, none right Ore";
    return result;
  }

  Outcome named_instances() {
    auto const rz3 = profile(catalog::with_right_absorbing(2));
    if (!rz3.strongly_connected || rz3.de_morgan) {
      return {"RZ3 profile", ""};
    }
    auto const rz3_dm = check_de_morgan(catalog::with_right_absorbing(2));
    auto const rz3_sc = check_strongly_connected(catalog::with_right_absorbing(2));
    if (rz3_dm.verdict || rz3_dm.agreement != Agreement::agree || !rz3_sc.verdict
        || rz3_sc.agreement != Agreement::agree) {
      return {"RZ3 theorem reports", ""};
    }
    std::size_t groups = 0;
    for (auto const& m : monoids_up_to(4)) {
      if (!is_group(m)) {
        continue;
      }
      ++groups;
      auto const p = profile(m);
      auto const b = check_boolean(m);
      if (!p.boolean_atomic || !b.verdict || b.agreement != Agreement::agree) {
        return {canonical_form(m).hex() + ": group not Boolean", ""};
      }
      if (m.order() > 1 && p.strongly_connected) {
        return {canonical_form(m).hex() + ": group strongly connected", ""};
      }
    }
    auto const end2 = catalog::full_transformation(2);
    auto const pe   = profile(end2);
    if (!pe.local || !pe.sufficiently_cohesive || pe.de_morgan) {
      return {"End(2) profile", ""};
    }
    auto const le = check_local(end2);
    if (!le.verdict || le.agreement != Agreement::agree) {
      return {"End(2) local theorem", ""};
    }
    return {"", "RZ3, " + std::to_string(groups) + " groups, End(2)"};
  }

  // The least right-factorable submonoid containing S, by intersecting all
  // qualifying subsets.
  std::uint64_t closure_oracle(Monoid const& m, ElementSet const& s) {
    std::size_t const n    = m.order();
    std::uint64_t     best = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t t = 0; t < (std::uint64_t(1) << n); ++t) {
      auto in = [&](index_type x) { return (t >> x & 1) != 0; };
      bool ok = in(m.identity());
      for (auto x : s) {
        ok = ok && in(x);
      }
      for (index_type x = 0; x < n && ok; ++x) {
        for (index_type y = 0; y < n && ok; ++y) {
          if (in(x) && in(y)) {
            ok = in(m.mul(x, y));
          }
          if (in(x) && in(m.mul(x, y))) {
            ok = ok && in(y);
          }
        }
      }
      if (ok) {
        best &= t;
      }
    }
    return best;
  }

  Outcome closure_identity() {
    std::size_t seeds = 0;
    for (auto const& m : monoids_up_to(4)) {
      std::size_t const         n = m.order();
      std::vector<ElementSet>   all;
      for (index_type a = 0; a < n; ++a) {
        all.push_back({a});
        for (index_type b = a + 1; b < n; ++b) {
          all.push_back({a, b});
        }
      }
      for (auto const& s : all) {
        std::vector<std::pair<index_type, index_type>> pairs;
        for (auto x : s) {
          pairs.emplace_back(x, m.identity());
        }
        auto const cls     = congruence_from_pairs(m, pairs).class_members(m.identity());
        auto const closure = right_factorable_closure(m, s);
        std::uint64_t mask = 0;
        for (auto x : closure) {
          mask |= std::uint64_t(1) << x;
        }
        if (closure != cls || mask != closure_oracle(m, s)) {
          return {canonical_form(m).hex() + ": closure differs from the class of 1",
                  ""};
        }
        ++seeds;
      }
    }
    return {"", std::to_string(seeds) + " seeds"};
  }

  Outcome adjunction_roundtrips() {
    std::mt19937_64 rng(20261018);
    auto const      monoids = monoids_up_to(3);
    auto pick = [&](auto const& v) -> auto const& {
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    std::size_t maps = 0;
    for (int instance = 0; instance < 100; ++instance) {
      auto const& m  = pick(monoids);
      auto const  xs = msets_up_to(m, 4);
      if (instance % 2 == 0) {
        // exponential transpose on X x P -> Q
        auto const& p = pick(xs);
        auto const& q = pick(xs);
        auto const& x = pick(xs);
        auto const  e = exponential(p, q);
        for (auto const& f : hom_set(product(x, p).object, q)) {
          if (exp_untranspose(e, exp_transpose(e, x, f)).map() != f.map()) {
            return {"instance " + std::to_string(instance) + ": transpose", ""};
          }
          ++maps;
        }
        for (auto const& g : hom_set(x, e.object)) {
          if (exp_transpose(e, x, exp_untranspose(e, g)).map() != g.map()) {
            return {"instance " + std::to_string(instance) + ": untranspose", ""};
          }
          ++maps;
        }
      } else {
        // tensor-hom over a product biset L x R with |L| |R| <= 4
        auto const& nm = pick(monoids);
        std::vector<LeftMSet> ls;
        for (std::size_t k = 1; k <= 2; ++k) {
          auto more = enumerate_left_msets(m, k);
          ls.insert(ls.end(), more.begin(), more.end());
        }
        auto const  rs = msets_up_to(nm, 2);
        auto const& l  = pick(ls);
        auto const& r  = pick(rs);
        std::size_t const lk = l.size(), rk = r.size();
        std::vector<std::vector<std::int64_t>> lrows(m.order()), rrows(lk * rk);
        for (index_type a = 0; a < lk; ++a) {
          for (index_type b = 0; b < rk; ++b) {
            for (index_type s = 0; s < m.order(); ++s) {
              lrows[s].push_back(l.act(s, a) * rk + b);
            }
            for (index_type t = 0; t < nm.order(); ++t) {
              rrows[a * rk + b].push_back(a * rk + r.act(b, t));
            }
          }
        }
        BiSet const bi(LeftMSet(m, lrows), RightMSet(nm, rrows));
        auto const  targets = msets_up_to(nm, 3);
        auto const& y       = pick(xs);
        auto const& x       = pick(targets);
        auto const  res = tensor_hom_adjunction_check(bi, y, x);
        if (!res.ok) {
          return {"instance " + std::to_string(instance) + ": " + res.failure, ""};
        }
        maps += res.left_count;
      }
    }
    return {"", "100 instances, " + std::to_string(maps) + " maps round-tripped"};
  }

  Outcome enumeration_soundness() {
    std::size_t classes = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::vector<std::uint8_t>> got;
      auto const                          ms = enumerate_monoids(n);
      for (auto const& m : ms) {
        got.insert(oracle::canonical_monoid(oracle::monoid_table(m), n));
      }
      if (got.size() != ms.size() || got != oracle::monoids(n)) {
        return {"monoids of order " + std::to_string(n), ""};
      }
      classes += got.size();
      for (auto const& m : ms) {
        for (std::size_t k = 0; k <= 3; ++k) {
          std::set<std::vector<std::uint8_t>> xs;
          auto const                          es = enumerate_msets(m, k);
          for (auto const& x : es) {
            xs.insert(oracle::canonical_mset(x));
          }
          if (xs.size() != es.size() || xs != oracle::msets(m, k)) {
            return {canonical_form(m).hex() + ": M-sets of size " + std::to_string(k),
                    ""};
          }
          classes += xs.size();
        }
      }
    }
    return {"", std::to_string(classes) + " isomorphism classes"};
  }

  Outcome full_suite() {
    auto const& run = suite();
    if (!run.report.disagreements.empty()) {
      return {std::to_string(run.report.disagreements.size())
                  + " disagreements, first " + run.report.disagreements.front(),
              ""};
    }
    if (run.seconds >= 600) {
      return {"took " + std::to_string(run.seconds) + " s", ""};
    }
    std::ostringstream out;
    out << run.report.entries.size() << " monoids, 0 disagreements, "
        << run.report.unconfirmed.size() << " unconfirmed, "
        << run.report.skipped.size() << " skipped, " << run.seconds << " s";
    return {"", out.str()};
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              name;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"two-valuedness", 60, two_valued},
      {"Boolean theorem", 60, boolean_theorem},
      {"de Morgan theorem", 300, de_morgan_theorem},
      {"local theorem", 300, local_theorem},
      {"totally connected theorem", 120, totally_connected_theorem},
      {"colocal and bilocal theorems (power condition read with right Ore)", 300, colocal_bilocal_theorems},
      {"named instances", 60, named_instances},
      {"closure identity", 60, closure_identity},
      {"adjunction round-trips", 60, adjunction_roundtrips},
      {"enumeration soundness", 60, enumeration_soundness},
      {"full harness at order 4", 600, full_suite}};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& c     = criteria[i];
    auto const  start = Clock::now();
    Outcome     o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    double const seconds
        = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.failure.empty() && seconds > c.budget_seconds) {
      o.failure = "over the time budget";
    }
    bool const pass = o.failure.empty();
    failures += pass ? 0 : 1;
    std::printf("%s %2zu %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", i + 1, c.name,
                pass ? o.detail.c_str() : o.failure.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
