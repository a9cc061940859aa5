// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "mtopos/enumerate.hpp"
#include "mtopos/flatness.hpp"
#include "mtopos/topos.hpp"

namespace mtopos {

  ////////////////////////////////////////////////////////////////////////
  // Profile
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::pair<std::string, bool>> PropertyProfile::flags() const {
    return {{"boolean_atomic", boolean_atomic},
            {"local", local},
            {"colocal", colocal},
            {"bilocal", bilocal},
            {"de_morgan", de_morgan},
            {"strongly_connected", strongly_connected},
            {"totally_connected", totally_connected},
            {"sufficiently_cohesive", sufficiently_cohesive},
            {"punctually_lc", punctually_lc},
            {"copunctually_lc", copunctually_lc},
            {"left_cancellative", left_cancellative},
            {"right_cancellative", right_cancellative},
            {"trivial", trivial}};
  }

  namespace {
    bool square_indecomposable(Monoid const& m) {
      auto const reg = regular(m);
      return is_indecomposable(product(reg, reg).object);
    }
  }  // namespace

  PropertyProfile profile(Monoid const& m) {
    auto const      ec = element_classes(m);
    PropertyProfile p;
    p.boolean_atomic        = is_group(m);
    p.local                 = !ec.right_absorbing.empty();
    p.colocal               = !ec.left_absorbing.empty();
    p.bilocal               = ec.zero.has_value();
    p.de_morgan             = is_right_ore(m);
    p.strongly_connected    = square_indecomposable(m);
    p.totally_connected     = is_right_collapsible(m);
    p.sufficiently_cohesive = ec.right_absorbing.size() >= 2;
    p.punctually_lc         = p.local;
    p.copunctually_lc       = p.de_morgan;
    p.left_cancellative     = is_left_cancellative(m);
    p.right_cancellative    = is_right_cancellative(m);
    p.trivial               = m.order() == 1;
    p.minimal_rf_generating_size = minimal_rf_generating_set(m).size();
    return p;
  }

  std::vector<std::string> profile_violations(Monoid const&          m,
                                              PropertyProfile const& p) {
    std::vector<std::string> out;
    auto check = [&out](bool ok, char const* what) {
      if (!ok) {
        out.emplace_back(what);
      }
    };
    check(p.totally_connected == (p.de_morgan && p.strongly_connected),
          "totally_connected != de_morgan && strongly_connected");
    check(p.bilocal == (p.local && p.colocal), "bilocal != local && colocal");
    check(!p.local || p.strongly_connected,
          "local but not strongly_connected");
    check(!p.sufficiently_cohesive || !p.bilocal,
          "sufficiently_cohesive and bilocal");
    check(p.sufficiently_cohesive == (p.local && !p.de_morgan),
          "sufficiently_cohesive != local && !de_morgan");
    check(!p.boolean_atomic || p.de_morgan, "boolean_atomic but not de_morgan");
    check(!p.trivial || p.boolean_atomic, "trivial but not boolean_atomic");

    auto const op    = opposite(m);
    auto const ec    = element_classes(m);
    auto const ec_op = element_classes(op);
    check(ec.left_absorbing == ec_op.right_absorbing,
          "left absorbing elements differ from right absorbing of opposite");
    check(ec.right_absorbing == ec_op.left_absorbing,
          "right absorbing elements differ from left absorbing of opposite");
    check(p.left_cancellative == is_right_cancellative(op),
          "left_cancellative differs from right cancellativity of opposite");
    check(p.right_cancellative == is_left_cancellative(op),
          "right_cancellative differs from left cancellativity of opposite");
    check(is_left_ore(m) == is_right_ore(op),
          "left Ore differs from right Ore of opposite");

    auto const       om = omega(m);
    check(fixed_points(om.omega).size() == 2, "Gamma(Omega) does not have two elements");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  char const* agreement_name(Agreement a) noexcept {
    switch (a) {
      case Agreement::agree:
        return "agree";
      case Agreement::unconfirmed_at_bound:
        return "unconfirmed_at_bound";
      case Agreement::refuted:
        return "refuted";
      case Agreement::disagree:
        return "disagree";
    }
    return "unknown";
  }

  namespace {
    ConditionResult decidable(std::string id, bool value) {
      ConditionResult c;
      c.id    = std::move(id);
      c.kind  = ConditionKind::decidable;
      c.value = value;
      return c;
    }

    ConditionResult skipped(std::string id, ConditionKind kind, std::string note) {
      ConditionResult c;
      c.id      = std::move(id);
      c.kind    = kind;
      c.skipped = true;
      c.note    = std::move(note);
      return c;
    }

    // Evaluates a bounded condition. `search` returns the first
    // counterexample, if any; cap errors mark the condition as skipped.
    template <typename Search>
    ConditionResult bounded(std::string id,
                            bool        guaranteed,
                            std::string guarantee,
                            Search&&    search) {
      ConditionResult c;
      c.id         = std::move(id);
      c.kind       = ConditionKind::bounded;
      c.guaranteed = guaranteed;
      c.guarantee  = std::move(guarantee);
      try {
        c.witness = search();
        c.value   = !c.witness.has_value();
      } catch (MtoposError const& e) {
        if (e.code() != error_code::cap_exceeded
            && e.code() != error_code::bound_too_small) {
          throw;
        }
        c.skipped = true;
        c.note    = e.what();
      }
      return c;
    }

    ConditionResult from_preservation(std::string id,
                                      bool        guaranteed,
                                      std::string guarantee,
                                      auto&&      run) {
      return bounded(std::move(id), guaranteed, std::move(guarantee),
                     [&]() -> std::optional<Witness> {
                       PreservationResult r = run();
                       if (r.preserved) {
                         return std::nullopt;
                       }
                       return r.witness;
                     });
    }

    TheoremReport finish(std::string id, std::vector<ConditionResult> conds) {
      TheoremReport r;
      r.id         = std::move(id);
      r.conditions = std::move(conds);
      bool seen    = false;
      for (auto const& c : r.conditions) {
        if (c.kind != ConditionKind::decidable || c.skipped) {
          continue;
        }
        if (!seen) {
          r.verdict = c.value;
          seen      = true;
        } else if (c.value != r.verdict) {
          r.agreement = Agreement::disagree;
        }
      }
      auto worsen = [&r](Agreement a) {
        if (static_cast<int>(a) > static_cast<int>(r.agreement)) {
          r.agreement = a;
        }
      };
      for (auto const& c : r.conditions) {
        if (c.kind != ConditionKind::bounded || c.skipped
            || c.value == r.verdict) {
          continue;
        }
        if (!c.value) {
          worsen(Agreement::refuted);
        } else if (c.guaranteed) {
          worsen(Agreement::disagree);
        } else {
          worsen(Agreement::unconfirmed_at_bound);
        }
      }
      return r;
    }

    Witness object_witness(std::string what, std::vector<RightMSet> objects) {
      return Witness{std::move(what), std::move(objects), {}};
    }

    std::uint64_t full_mask(std::size_t n) {
      return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }

    std::uint64_t to_mask(ElementSet const& s) {
      std::uint64_t out = 0;
      for (auto x : s) {
        out |= std::uint64_t(1) << x;
      }
      return out;
    }

    // The least nonempty sub-M-set of X (contained in every nonempty one),
    // as a mask, if there is one.
    std::optional<std::uint64_t> least_sub(RightMSet const& x) {
      std::uint64_t meet = full_mask(x.size());
      for (auto a : sub_msets(x)) {
        if (a != 0) {
          meet &= a;
        }
      }
      if (meet == 0 || x.empty()) {
        return std::nullopt;
      }
      return meet;
    }

    // Does X have a least nonempty sub-M-set with no nontrivial
    // endomorphisms?
    bool rigid_least_sub(RightMSet const& x) {
      auto const least = least_sub(x);
      if (!least) {
        return false;
      }
      auto const sub = sub_mset(x, mask_elements(*least)).object;
      return count_homs(sub, sub) == 1;
    }

    // The induced map C(f) on component ids.
    Map components_map(MSetMorphism const& f,
                       Partition const&    cx,
                       Partition const&    cy) {
      Map out(cx.count, 0);
      for (index_type x = 0; x < f.source().size(); ++x) {
        out[cx.class_of[x]] = cy.class_of[f(x)];
      }
      return out;
    }

    // The induced map Gamma(f) on positions in the fixed point lists.
    Map fixed_map(MSetMorphism const& f,
                  ElementSet const&   fx,
                  ElementSet const&   fy) {
      Map out;
      for (auto x : fx) {
        auto it = std::lower_bound(fy.begin(), fy.end(), f(x));
        out.push_back(static_cast<index_type>(it - fy.begin()));
      }
      return out;
    }

    std::size_t int_pow(std::size_t base, std::size_t exp) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // TheoremChecker
  ////////////////////////////////////////////////////////////////////////

  struct TheoremChecker::Impl {
    Monoid         monoid;
    Bounds         bounds;
    MSetPool       pool;
    ElementClasses classes;
    RightMSet      reg;

    std::optional<std::vector<RightMSet>> stream_cache;
    std::optional<PointsCategory>         points_cache;

    Impl(Monoid m, Bounds b)
        : monoid(m),
          bounds(b),
          pool(m),
          classes(element_classes(m)),
          reg(regular(m)) {}

    // M itself, then every pooled nonempty M-set up to the size bound.
    std::vector<RightMSet> const& stream() {
      if (!stream_cache) {
        std::vector<RightMSet> out{reg};
        for (std::size_t k = 1; k <= bounds.mset_size; ++k) {
          auto const& sets = pool.of_size(k);
          for (std::size_t i = 0; i < sets.size(); ++i) {
            out.push_back(sets[i].with_label("X" + std::to_string(k) + "#"
                                             + std::to_string(i)));
          }
        }
        stream_cache = std::move(out);
      }
      return *stream_cache;
    }

    // Every pooled M-set up to the pair bound, including the empty one.
    std::vector<RightMSet> small(std::size_t size) {
      auto out = pool.up_to(size);
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = out[i].with_label("X" + std::to_string(out[i].size()) + "#"
                                   + std::to_string(i));
      }
      return out;
    }

    PointsCategory const& points() {
      if (!points_cache) {
        std::size_t bound = bounds.points_bound == 0 ? monoid.order()
                                                     : bounds.points_bound;
        points_cache = enumerate_points(monoid, bound);
      }
      return *points_cache;
    }

    // First X in the stream (optionally only indecomposable ones) failing
    // the predicate.
    template <typename Pred>
    std::optional<Witness> first_failure(std::string const& what,
                                         bool               only_indecomposable,
                                         Pred&&             pred) {
      for (auto const& x : stream()) {
        if (only_indecomposable && !is_indecomposable(x)) {
          continue;
        }
        if (!pred(x)) {
          return object_witness(what + " fails on " + x.label(), {x});
        }
      }
      return std::nullopt;
    }

    bool right_ore() const {
      return is_right_ore(monoid);
    }

    ////////////////////////////////////////////////////////////////////////

    TheoremReport boolean() {
      std::vector<ConditionResult> c;
      c.push_back(decidable("group", is_group(monoid)));
      c.push_back(decidable("omega_two_elements",
                            omega(monoid).ideals.size() == 2));
      c.push_back(bounded(
          "sub_msets_complemented", true,
          "a proper nonempty principal ideal of M has no complement",
          [&] {
            return first_failure(
                "complemented subobjects", false, [](RightMSet const& x) {
                  auto const all = full_mask(x.size());
                  for (auto a : sub_msets(x)) {
                    if (!is_sub_mset(x, mask_elements(all & ~a))) {
                      return false;
                    }
                  }
                  return true;
                });
          }));
      return finish("boolean", std::move(c));
    }

    TheoremReport strongly_compact() {
      std::vector<ConditionResult> c;
      std::size_t const            n = monoid.order();
      // every seed S of size 1 .. subset_size, lexicographically
      bool                    identity_holds = true;
      std::vector<index_type> seed;
      auto                    recurse = [&](auto&& self, index_type from) -> void {
        if (!seed.empty()) {
          std::vector<std::pair<index_type, index_type>> pairs;
          for (auto s : seed) {
            pairs.emplace_back(s, monoid.identity());
          }
          auto const cong = congruence_from_pairs(monoid, pairs);
          if (right_factorable_closure(monoid, seed)
              != cong.class_members(monoid.identity())) {
            identity_holds = false;
          }
        }
        if (seed.size() == bounds.subset_size) {
          return;
        }
        for (index_type x = from; x < n && identity_holds; ++x) {
          seed.push_back(x);
          self(self, x + 1);
          seed.pop_back();
        }
      };
      recurse(recurse, 0);
      c.push_back(decidable("closure_is_identity_class", identity_holds));
      auto const gens = minimal_rf_generating_set(monoid);
      c.push_back(decidable(
          "right_factorably_finitely_generated",
          right_factorable_closure(monoid, gens.empty() ? ElementSet{monoid.identity()}
                                                        : gens)
                  .size()
              == n));
      return finish("strongly_compact", std::move(c));
    }

    TheoremReport local() {
      std::vector<ConditionResult> c;
      auto const                   sb = bounds.stream();
      c.push_back(decidable("right_absorbing_element",
                            !classes.right_absorbing.empty()));
      c.push_back(decidable("terminal_projective", is_projective(terminal(monoid))));
      c.push_back(bounded("nonempty_msets_have_fixed_points", true,
                          "Gamma(M) is the set of right absorbing elements",
                          [&] {
                            return first_failure(
                                "fixed point", false, [](RightMSet const& x) {
                                  return !fixed_points(x).empty();
                                });
                          }));
      c.push_back(bounded("alpha_epic", true,
                          "alpha at M is epic iff Gamma(M) is nonempty", [&] {
                            return first_failure(
                                "alpha epic", false, [](RightMSet const& x) {
                                  return alpha(x).surjective;
                                });
                          }));
      c.push_back(from_preservation(
          "gamma_preserves_epis", true, "the epi M -> 1", [&] {
            return check_preservation(gamma_functor(), Construct::epi, pool, sb);
          }));
      c.push_back(bounded(
          "c_full", true, "the pair (1, M) admits a map iff M has a fixed point",
          [&]() -> std::optional<Witness> {
            auto sets = small(bounds.pair_size);
            std::vector<std::pair<RightMSet, RightMSet>> pairs{
                {terminal(monoid), reg}};
            for (auto const& x : sets) {
              for (auto const& y : sets) {
                pairs.emplace_back(x, y);
              }
            }
            for (auto const& [x, y] : pairs) {
              auto const cx = connected_components(x);
              auto const cy = connected_components(y);
              std::set<Map> induced;
              for (auto const& f : hom_set(x, y)) {
                induced.insert(components_map(f, cx, cy));
              }
              if (induced.size() != int_pow(cy.count, cx.count)) {
                return object_witness("C is not full on " + x.label() + " -> "
                                          + y.label(),
                                      {x, y});
              }
            }
            return std::nullopt;
          }));
      c.push_back(bounded(
          "initial_point", true,
          "an initial point is M e with e right absorbing; one in the bounded "
          "category is a retract of M with a single map to M",
          [&]() -> std::optional<Witness> {
            if (points().initial) {
              return std::nullopt;
            }
            return Witness{"no initial flat left M-set up to size "
                               + std::to_string(points().bound),
                           {},
                           {}};
          }));
      return finish("local", std::move(c));
    }

    TheoremReport de_morgan() {
      std::vector<ConditionResult> c;
      auto const                   sb = bounds.stream();
      std::size_t const            n  = monoid.order();
      c.push_back(decidable("right_ore", right_ore()));
      c.push_back(decidable("omega_two_components", chi_for_C(monoid) == 2));
      c.push_back(bounded(
          "alpha_monic", true,
          "the quotient of M collapsing m1 M and m2 M when they are disjoint",
          [&]() -> std::optional<Witness> {
            for (index_type a = 0; a < n; ++a) {
              for (index_type b = a + 1; b < n; ++b) {
                auto q = ore_witness_quotient(monoid, a, b);
                if (!alpha(q.object).injective) {
                  return Witness{"alpha is not monic on the quotient of M "
                                 "collapsing "
                                     + std::to_string(a) + "M and "
                                     + std::to_string(b) + "M",
                                 {q.object},
                                 {q.projection.map()}};
                }
              }
            }
            return first_failure("alpha monic", false, [](RightMSet const& x) {
              return alpha(x).injective;
            });
          }));
      c.push_back(from_preservation(
          "c_preserves_monos", true, "the inclusion m1 M + m2 M -> M", [&] {
            return check_preservation(components_functor(), Construct::mono,
                                      pool, sb);
          }));
      c.push_back(bounded(
          "subobjects_of_indecomposables_meet", true,
          "two disjoint principal ideals of M", [&] {
            return first_failure("nonempty subobjects intersect", true,
                                 [](RightMSet const& x) {
                                   auto const subs = sub_msets(x);
                                   for (auto a : subs) {
                                     for (auto b : subs) {
                                       if (a != 0 && b != 0 && (a & b) == 0) {
                                         return false;
                                       }
                                     }
                                   }
                                   return true;
                                 });
          }));
      c.push_back(bounded(
          "subobjects_of_indecomposables_indecomposable", true,
          "the union of two disjoint principal ideals of M", [&] {
            return first_failure(
                "indecomposable subobjects", true, [](RightMSet const& x) {
                  for (auto a : sub_msets(x)) {
                    if (a != 0
                        && !is_indecomposable(
                            sub_mset(x, mask_elements(a)).object)) {
                      return false;
                    }
                  }
                  return true;
                });
          }));
      c.push_back(bounded(
          "de_morgan_law", true,
          "the principal ideal m1 M of M when m1 M and m2 M are disjoint", [&] {
            return first_failure("not A or not not A", false, [](RightMSet const& x) {
              auto const     all = full_mask(x.size());
              std::vector<std::uint64_t> reach(x.size());
              for (index_type e = 0; e < x.size(); ++e) {
                reach[e] = to_mask(orbit(x, e));
              }
              auto negate = [&](std::uint64_t a) {
                std::uint64_t out = 0;
                for (index_type e = 0; e < x.size(); ++e) {
                  if ((reach[e] & a) == 0) {
                    out |= std::uint64_t(1) << e;
                  }
                }
                return out;
              };
              for (auto a : sub_msets(x)) {
                auto const na = negate(a);
                if ((na | negate(na)) != all) {
                  return false;
                }
              }
              return true;
            });
          }));
      return finish("de_morgan", std::move(c));
    }

    TheoremReport strongly_connected() {
      std::vector<ConditionResult> c;
      auto const                   sb = bounds.stream();
      c.push_back(decidable("square_indecomposable", square_indecomposable(monoid)));
      c.push_back(bounded(
          "products_of_indecomposables", true, "the product M x M",
          [&]() -> std::optional<Witness> {
            auto sets = small(bounds.pair_size);
            sets.insert(sets.begin(), reg);
            for (std::size_t i = 0; i < sets.size(); ++i) {
              if (!is_indecomposable(sets[i])) {
                continue;
              }
              for (std::size_t j = i; j < sets.size(); ++j) {
                if (is_indecomposable(sets[j])
                    && !is_indecomposable(product(sets[i], sets[j]).object)) {
                  return object_witness("decomposable product of "
                                            + sets[i].label() + " and "
                                            + sets[j].label(),
                                        {sets[i], sets[j]});
                }
              }
            }
            return std::nullopt;
          }));
      c.push_back(from_preservation(
          "c_preserves_products", true, "the product M x M", [&] {
            return check_preservation(components_functor(), Construct::product,
                                      pool, sb);
          }));
      c.push_back(from_preservation(
          "c_preserves_finite_powers", true, "the power M^2", [&] {
            return check_preservation(components_functor(), Construct::power,
                                      pool, sb);
          }));
      return finish("strongly_connected", std::move(c));
    }

    TheoremReport totally_connected() {
      std::vector<ConditionResult> c;
      auto const                   sb = bounds.stream();
      c.push_back(decidable("right_collapsible", is_right_collapsible(monoid)));
      c.push_back(decidable("terminal_left_flat",
                            is_flat(left_terminal(monoid)).flat));
      c.push_back(decidable("de_morgan_and_strongly_connected",
                            right_ore() && square_indecomposable(monoid)));
      c.push_back(from_preservation(
          "c_preserves_equalizers", true,
          "the equalizer of m1., m2. : M -> M is empty when no h has m1 h = m2 h",
          [&] {
            return check_preservation(components_functor(),
                                      Construct::equalizer, pool, sb);
          }));
      c.push_back(from_preservation(
          "c_preserves_pullbacks", true,
          "the pullbacks of M -> 1 <- M and of m1., m2. : M -> M", [&] {
            return check_preservation(components_functor(),
                                      Construct::pullback, pool, sb);
          }));
      c.push_back(bounded(
          "terminal_point", true,
          "a terminal point receives a single map from M, so it has one "
          "element",
          [&]() -> std::optional<Witness> {
            if (points().terminal) {
              return std::nullopt;
            }
            return Witness{"no terminal flat left M-set up to size "
                               + std::to_string(points().bound),
                           {},
                           {}};
          }));
      return finish("totally_connected", std::move(c));
    }

    TheoremReport colocal() {
      std::vector<ConditionResult> c;
      std::size_t const            n = monoid.order();
      c.push_back(decidable("left_absorbing_element",
                            !classes.left_absorbing.empty()));

      c.push_back(decidable("rigid_least_right_ideal", rigid_least_sub(reg)));

      // essential points M e, one per idempotent; terminal among them
      std::vector<LeftMSet> essential;
      for (auto e : classes.idempotents) {
        essential.push_back(principal_left_mset(monoid, e));
      }
      bool terminal_essential = false;
      for (auto const& t : essential) {
        bool ok = true;
        for (auto const& s : essential) {
          ok = ok && count_homs(s.as_right(), t.as_right()) == 1;
        }
        terminal_essential = terminal_essential || ok;
      }
      c.push_back(decidable("terminal_essential_point", terminal_essential));

      if (int_pow(n, n) > bounds.power_cap) {
        c.push_back(skipped("right_ore_and_power_indecomposable", ConditionKind::decidable,
                            std::string(error_name(error_code::bound_too_small))
                                + " M^" + std::to_string(n) + " exceeds power cap "
                                + std::to_string(bounds.power_cap)));
      } else {
        c.push_back(decidable("right_ore_and_power_indecomposable",
                              right_ore()
                                  && is_indecomposable(
                                      power(reg, n, bounds.power_cap))));
      }

      c.push_back(bounded(
          "components_are_Al", true,
          "for A = M the set M l must be a single element",
          [&]() -> std::optional<Witness> {
            auto const& sets = stream();
            std::optional<Witness> first;
            for (index_type l = 0; l < n; ++l) {
              bool ok = true;
              for (auto const& a : sets) {
                auto const comps = connected_components(a);
                std::set<index_type> al;
                for (index_type x = 0; x < a.size(); ++x) {
                  al.insert(a.act(x, l));
                }
                std::set<index_type> hit;
                for (auto y : al) {
                  hit.insert(comps.class_of[y]);
                }
                if (hit.size() != al.size() || hit.size() != comps.count) {
                  if (!first) {
                    first = object_witness("C(A) is not A l for l = "
                                               + std::to_string(l)
                                               + " on " + a.label(),
                                           {a});
                  }
                  ok = false;
                  break;
                }
              }
              if (ok) {
                return std::nullopt;
              }
            }
            return first;
          }));
      c.push_back(bounded(
          "indecomposables_have_rigid_least_subobject", true,
          "M itself is indecomposable", [&] {
            return first_failure("rigid least subobject", true, rigid_least_sub);
          }));
      return finish("colocal", std::move(c));
    }

    TheoremReport bilocal() {
      std::vector<ConditionResult> c;
      bool const local = !classes.right_absorbing.empty();
      c.push_back(decidable("zero_element", classes.zero.has_value()));
      c.push_back(decidable("local_and_colocal",
                            local && !classes.left_absorbing.empty()));
      c.push_back(decidable("local_and_de_morgan", local && right_ore()));
      c.push_back(bounded(
          "gamma_full", true,
          "the pair (M, Delta(|Gamma(M)|)) realises every bijection only "
          "when Gamma(M) has one element",
          [&]() -> std::optional<Witness> {
            auto sets = small(bounds.pair_size);
            std::vector<std::pair<RightMSet, RightMSet>> pairs{
                {reg, trivial_action(monoid, classes.right_absorbing.size())}};
            for (auto const& x : sets) {
              for (auto const& y : sets) {
                pairs.emplace_back(x, y);
              }
            }
            for (auto const& [x, y] : pairs) {
              auto const    fx = fixed_points(x);
              auto const    fy = fixed_points(y);
              std::set<Map> induced;
              for (auto const& f : hom_set(x, y)) {
                induced.insert(fixed_map(f, fx, fy));
              }
              if (induced.size() != int_pow(fy.size(), fx.size())) {
                return object_witness("Gamma is not full on " + x.label()
                                          + " -> " + y.label(),
                                      {x, y});
              }
            }
            return std::nullopt;
          }));
      c.push_back(bounded("alpha_iso", true,
                          "alpha at M is Gamma(M) -> 1", [&] {
                            return first_failure(
                                "alpha iso", false, [](RightMSet const& x) {
                                  return alpha(x).bijective();
                                });
                          }));
      return finish("bilocal", std::move(c));
    }

    TheoremReport trivial() {
      std::vector<ConditionResult> c;
      std::size_t const            n = monoid.order();
      c.push_back(decidable("trivial_monoid", n == 1));

      c.push_back(bounded(
          "gamma_faithful", true,
          "the two inclusions M -> M glued along Gamma(M)",
          [&]() -> std::optional<Witness> {
            auto const               co = coproduct(reg, reg);
            std::vector<index_type>  labels(2 * n);
            for (index_type x = 0; x < n; ++x) {
              labels[x]     = x;
              labels[n + x] = n + x;
            }
            for (auto r : classes.right_absorbing) {
              labels[n + r] = r;
            }
            auto const glued = quotient(co.object, Partition::from_labels(labels));
            auto const f     = compose(glued.projection, co.left);
            auto const g     = compose(glued.projection, co.right);
            if (f.map() != g.map()) {
              return Witness{"Gamma identifies two distinct maps M -> M +_Gamma(M) M",
                             {reg, glued.object},
                             {f.map(), g.map()}};
            }
            for (auto const& x : small(bounds.morphism_size)) {
              for (auto const& y : small(bounds.morphism_size)) {
                auto const homs = hom_set(x, y);
                auto const fx   = fixed_points(x);
                auto const fy   = fixed_points(y);
                for (std::size_t i = 0; i < homs.size(); ++i) {
                  for (std::size_t j = i + 1; j < homs.size(); ++j) {
                    if (fixed_map(homs[i], fx, fy) == fixed_map(homs[j], fx, fy)) {
                      return Witness{"Gamma identifies two distinct maps",
                                     {x, y},
                                     {homs[i].map(), homs[j].map()}};
                    }
                  }
                }
              }
            }
            return std::nullopt;
          }));

      c.push_back(bounded(
          "c_faithful", true, "the identity and a left multiplication on M",
          [&]() -> std::optional<Witness> {
            std::vector<std::pair<RightMSet, RightMSet>> pairs{{reg, reg}};
            for (auto const& x : small(bounds.morphism_size)) {
              for (auto const& y : small(bounds.morphism_size)) {
                pairs.emplace_back(x, y);
              }
            }
            for (auto const& [x, y] : pairs) {
              auto const homs = hom_set(x, y);
              auto const cx   = connected_components(x);
              auto const cy   = connected_components(y);
              for (std::size_t i = 0; i < homs.size(); ++i) {
                for (std::size_t j = i + 1; j < homs.size(); ++j) {
                  if (components_map(homs[i], cx, cy)
                      == components_map(homs[j], cx, cy)) {
                    return Witness{"C identifies two distinct maps",
                                   {x, y},
                                   {homs[i].map(), homs[j].map()}};
                  }
                }
              }
            }
            return std::nullopt;
          }));

      bool const ore      = right_ore();
      bool const square   = square_indecomposable(monoid);
      bool const theta_gt = ore || !square;
      std::vector<std::string> theta_skips;
      c.push_back(bounded(
          "theta_monic", theta_gt,
          ore ? "C(M^M) -> 1 is not monic for nontrivial right Ore M"
              : (square ? "" : "C(M^Delta(2)) = C(M x M) -> 1 is not monic"),
          [&]() -> std::optional<Witness> {
            std::vector<std::pair<RightMSet, RightMSet>> pairs{
                {trivial_action(monoid, 2), reg}, {reg, reg}};
            for (auto const& p : small(bounds.theta_size)) {
              for (auto const& q : small(bounds.theta_size)) {
                pairs.emplace_back(p, q);
              }
            }
            for (auto const& [p, q] : pairs) {
              try {
                auto const t = theta_for_C(p, q, bounds.exponential_cap);
                if (!t.well_defined || !t.injective) {
                  return object_witness(
                      "C(Q^P) -> C(Q)^C(P) is not monic for P = " + p.label()
                          + ", Q = " + q.label(),
                      {p, q});
                }
              } catch (MtoposError const& e) {
                if (e.code() != error_code::cap_exceeded) {
                  throw;
                }
                theta_skips.push_back(p.label() + "," + q.label());
              }
            }
            if (ore
                && std::find(theta_skips.begin(), theta_skips.end(), "M,M")
                       != theta_skips.end()) {
              // the guaranteed witness could not be built
              throw MtoposError(error_code::bound_too_small,
                                "exponential M^M exceeds cap "
                                    + std::to_string(bounds.exponential_cap));
            }
            return std::nullopt;
          }));
      if (!theta_skips.empty()) {
        std::string skipped_pairs;
        for (auto const& s : theta_skips) {
          skipped_pairs += (skipped_pairs.empty() ? "" : "; ") + s;
        }
        c.back().note += (c.back().note.empty() ? "" : "; ")
                         + std::string("pairs over the exponential cap: ")
                         + skipped_pairs;
      }
      c.back().note += (c.back().note.empty() ? "" : "; ")
                       + std::string("reflection of coproducts, products, the "
                                     "terminal object and monomorphisms by "
                                     "Gamma is decided by |M| = 1 alone");
      return finish("trivial", std::move(c));
    }

    TheoremReport locally_decidable() {
      std::vector<ConditionResult> c;
      std::size_t const            n = monoid.order();
      c.push_back(decidable("right_cancellative", is_right_cancellative(monoid)));
      // a != b implies a m != b m in the regular M-set
      bool element_decidable = true;
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = a + 1; b < n; ++b) {
          for (index_type m = 0; m < n; ++m) {
            element_decidable = element_decidable && reg.act(a, m) != reg.act(b, m);
          }
        }
      }
      c.push_back(decidable("regular_decidable", element_decidable));
      auto const    sq = product(reg, reg).object;
      ElementSet    off_diagonal;
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = 0; b < n; ++b) {
          if (a != b) {
            off_diagonal.push_back(a * n + b);
          }
        }
      }
      c.push_back(decidable("diagonal_complemented", is_sub_mset(sq, off_diagonal)));
      return finish("locally_decidable", std::move(c));
    }

    TheoremReport etendue() {
      std::vector<ConditionResult> c;
      std::size_t const            n = monoid.order();
      c.push_back(decidable("left_cancellative", is_left_cancellative(monoid)));
      bool monic = true;
      for (index_type m = 0; m < n; ++m) {
        monic = monic && left_multiplication(monoid, m).is_injective();
      }
      c.push_back(decidable("endomorphisms_of_M_monic", monic));
      c.push_back(decidable("opposite_right_cancellative",
                            is_right_cancellative(opposite(monoid))));
      return finish("etendue", std::move(c));
    }
  };

  TheoremChecker::TheoremChecker(Monoid monoid, Bounds bounds)
      : impl_(std::make_unique<Impl>(std::move(monoid), bounds)) {}
  TheoremChecker::~TheoremChecker()                                    = default;
  TheoremChecker::TheoremChecker(TheoremChecker&&) noexcept            = default;
  TheoremChecker& TheoremChecker::operator=(TheoremChecker&&) noexcept = default;

  TheoremReport TheoremChecker::boolean() {
    return impl_->boolean();
  }
  TheoremReport TheoremChecker::strongly_compact() {
    return impl_->strongly_compact();
  }
  TheoremReport TheoremChecker::local() {
    return impl_->local();
  }
  TheoremReport TheoremChecker::de_morgan() {
    return impl_->de_morgan();
  }
  TheoremReport TheoremChecker::strongly_connected() {
    return impl_->strongly_connected();
  }
  TheoremReport TheoremChecker::totally_connected() {
    return impl_->totally_connected();
  }
  TheoremReport TheoremChecker::colocal() {
    return impl_->colocal();
  }
  TheoremReport TheoremChecker::bilocal() {
    return impl_->bilocal();
  }
  TheoremReport TheoremChecker::trivial() {
    return impl_->trivial();
  }
  TheoremReport TheoremChecker::locally_decidable() {
    return impl_->locally_decidable();
  }
  TheoremReport TheoremChecker::etendue() {
    return impl_->etendue();
  }

  std::vector<TheoremReport> TheoremChecker::all() {
    return {boolean(),
            strongly_compact(),
            local(),
            de_morgan(),
            strongly_connected(),
            totally_connected(),
            colocal(),
            bilocal(),
            trivial(),
            locally_decidable(),
            etendue()};
  }

  TheoremReport check_boolean(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).boolean();
  }
  TheoremReport check_strongly_compact(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).strongly_compact();
  }
  TheoremReport check_local(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).local();
  }
  TheoremReport check_de_morgan(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).de_morgan();
  }
  TheoremReport check_strongly_connected(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).strongly_connected();
  }
  TheoremReport check_totally_connected(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).totally_connected();
  }
  TheoremReport check_colocal(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).colocal();
  }
  TheoremReport check_bilocal(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).bilocal();
  }
  TheoremReport check_trivial(Monoid const& m, Bounds const& b) {
    return TheoremChecker(m, b).trivial();
  }
  std::vector<TheoremReport> check_cancellativity(Monoid const& m,
                                                  Bounds const& b) {
    TheoremChecker checker(m, b);
    return {checker.locally_decidable(), checker.etendue()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Suite
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> out_of_scope_statements() {
      return {
          "statements quantifying over infinite M-sets or infinite monoids",
          "preservation of Set-indexed powers and arbitrary products by C, "
          "tested through the finite power M^|M| only",
          "preservation of filtered colimits by Gamma (strong compactness); "
          "finite monoids are right-factorably finitely generated",
          "existence of adjoints and properties of geometric morphisms "
          "(localic, inclusion, equivalence, hyperconnected)",
          "reflection of coproducts, products, the terminal object and "
          "monomorphisms by Gamma; decided by |M| = 1",
          "the full category of points; flat left M-sets are enumerated up "
          "to a size bound"};
    }

    MonoidEntry run_one(Monoid const& m, Bounds const& bounds) {
      MonoidEntry e{m, canonical_form(m).hex(), profile(m), {}, {}};
      e.profile_violations = profile_violations(m, e.profile);
      e.theorems           = TheoremChecker(m, bounds).all();
      return e;
    }
  }  // namespace

  SuiteReport run_suite(std::size_t   max_order,
                        Bounds const& bounds,
                        std::function<void(std::size_t, std::size_t)> const&
                            progress) {
    if (max_order > max_suite_order) {
      throw MtoposError(error_code::cap_exceeded,
                        "max order " + std::to_string(max_order) + " > cap "
                            + std::to_string(max_suite_order));
    }
    SuiteReport report;
    report.max_order    = max_order;
    report.bounds       = bounds;
    report.out_of_scope = out_of_scope_statements();

    std::vector<Monoid> monoids;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ms = enumerate_monoids(n, max_suite_order);
      report.monoids_per_order[n] = ms.size();
      monoids.insert(monoids.end(), ms.begin(), ms.end());
    }

    // one entry per monoid; workers take the next index, results keep
    // enumeration order
    std::vector<std::optional<MonoidEntry>> entries(monoids.size());
    std::atomic<std::size_t>                next{0};
    std::size_t                             done = 0;
    std::mutex                              lock;
    std::exception_ptr                      failure;
    auto                                    work = [&] {
      while (true) {
        std::size_t const i = next++;
        if (i >= monoids.size()) {
          return;
        }
        try {
          entries[i] = run_one(monoids[i], bounds);
        } catch (...) {
          std::lock_guard<std::mutex> guard(lock);
          if (!failure) {
            failure = std::current_exception();
          }
          next = monoids.size();
          return;
        }
        std::lock_guard<std::mutex> guard(lock);
        ++done;
        if (progress) {
          progress(done, monoids.size());
        }
      }
    };
    std::size_t const threads = std::clamp<std::size_t>(
        std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, monoids.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }

    for (auto& slot : entries) {
      MonoidEntry& e     = *slot;
      std::size_t  order = e.monoid.order();
      auto&        count = report.counts[order];
      for (auto const& [name, value] : e.profile.flags()) {
        count[name] += value ? 1 : 0;
      }
      std::string const prefix = std::to_string(order) + "/" + e.canonical_hex + "/";
      for (auto const& v : e.profile_violations) {
        report.disagreements.push_back(prefix + "profile: " + v);
      }
      for (auto const& t : e.theorems) {
        if (t.is_disagreement()) {
          report.disagreements.push_back(prefix + t.id + ": "
                                         + agreement_name(t.agreement));
        }
        for (auto const& c : t.conditions) {
          if (c.skipped) {
            report.skipped.push_back(prefix + t.id + "/" + c.id);
          } else if (c.kind == ConditionKind::bounded && c.value != t.verdict
                     && c.value && !c.guaranteed) {
            report.unconfirmed.push_back(prefix + t.id + "/" + c.id);
          }
        }
      }
      report.entries.push_back(std::move(e));
    }
    return report;
  }

}  // namespace mtopos
