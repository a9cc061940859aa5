// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/preservation.hpp"

#include <algorithm>
#include <set>

#include "mtopos/enumerate.hpp"

namespace mtopos {

  SetFunctor gamma_functor() {
    SetFunctor f;
    f.name   = "Gamma";
    f.object = [](RightMSet const& x) { return fixed_points(x).size(); };
    f.arrow  = [](MSetMorphism const& g) {
      auto const src = fixed_points(g.source());
      auto const tgt = fixed_points(g.target());
      Map        out;
      for (auto a : src) {
        auto it = std::lower_bound(tgt.begin(), tgt.end(), g(a));
        out.push_back(static_cast<index_type>(it - tgt.begin()));
      }
      return out;
    };
    return f;
  }

  SetFunctor components_functor() {
    SetFunctor f;
    f.name   = "C";
    f.object = [](RightMSet const& x) { return connected_components(x).count; };
    f.arrow  = [](MSetMorphism const& g) {
      auto const src = connected_components(g.source());
      auto const tgt = connected_components(g.target());
      Map        out(src.count);
      for (index_type a = 0; a < g.source().size(); ++a) {
        out[src.class_of[a]] = tgt.class_of[g(a)];
      }
      return out;
    };
    return f;
  }

  std::vector<RightMSet> const& MSetPool::of_size(std::size_t k) {
    auto it = by_size_.find(k);
    if (it == by_size_.end()) {
      it = by_size_.emplace(k, enumerate_msets(monoid_, k)).first;
    }
    return it->second;
  }

  std::vector<RightMSet> MSetPool::up_to(std::size_t k) {
    std::vector<RightMSet> out;
    for (std::size_t i = 0; i <= k; ++i) {
      auto const& part = of_size(i);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  char const* construct_name(Construct c) noexcept {
    switch (c) {
      case Construct::mono:
        return "mono";
      case Construct::epi:
        return "epi";
      case Construct::product:
        return "product";
      case Construct::equalizer:
        return "equalizer";
      case Construct::pullback:
        return "pullback";
      case Construct::power:
        return "power";
      case Construct::terminal:
        return "terminal";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Single-instance comparisons
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool injective(Map const& f, std::size_t target) {
      std::vector<bool> hit(target, false);
      for (auto y : f) {
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }

    bool surjective(Map const& f, std::size_t target) {
      std::vector<bool> hit(target, false);
      for (auto y : f) {
        hit[y] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    // Is z |-> (f_0(z), ..., f_{r-1}(z)) a bijection from {0..size-1} onto
    // the tuples accepted by `member`, given the factor sizes?
    template <typename Member>
    bool tuple_bijection(std::size_t                     size,
                         std::vector<Map> const&         legs,
                         std::vector<std::size_t> const& factor_sizes,
                         Member&&                        member) {
      std::set<std::vector<index_type>> image;
      for (index_type z = 0; z < size; ++z) {
        std::vector<index_type> t;
        for (auto const& leg : legs) {
          t.push_back(leg[z]);
        }
        if (!member(t) || !image.insert(t).second) {
          return false;
        }
      }
      // count the accepted tuples
      std::size_t             accepted = 0;
      std::vector<index_type> t(factor_sizes.size(), 0);
      for (auto s : factor_sizes) {
        if (s == 0) {
          return image.empty();
        }
      }
      while (true) {
        if (member(t)) {
          ++accepted;
        }
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] + 1 == factor_sizes[i - 1]) {
          t[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++t[i - 1];
      }
      return accepted == image.size();
    }
  }  // namespace

  bool preserves_mono(SetFunctor const& f, MSetMorphism const& mono) {
    return injective(f.arrow(mono), f.object(mono.target()));
  }

  bool preserves_epi(SetFunctor const& f, MSetMorphism const& epi) {
    return surjective(f.arrow(epi), f.object(epi.target()));
  }

  bool preserves_product(SetFunctor const& f, Product const& prod) {
    auto const a = f.arrow(prod.first);
    auto const b = f.arrow(prod.second);
    return tuple_bijection(f.object(prod.object),
                           {a, b},
                           {f.object(prod.first.target()),
                            f.object(prod.second.target())},
                           [](auto const&) { return true; });
  }

  bool preserves_equalizer(SetFunctor const&   f,
                           MSetMorphism const& a,
                           MSetMorphism const& b) {
    auto const eq = equalizer(a, b);
    auto const fa = f.arrow(a);
    auto const fb = f.arrow(b);
    return tuple_bijection(f.object(eq.object),
                           {f.arrow(eq.inclusion)},
                           {f.object(a.source())},
                           [&](std::vector<index_type> const& t) {
                             return fa[t[0]] == fb[t[0]];
                           });
  }

  bool preserves_pullback(SetFunctor const&   f,
                          MSetMorphism const& a,
                          MSetMorphism const& b) {
    auto const pb = pullback(a, b);
    auto const fa = f.arrow(a);
    auto const fb = f.arrow(b);
    return tuple_bijection(f.object(pb.object),
                           {f.arrow(pb.first), f.arrow(pb.second)},
                           {f.object(a.source()), f.object(b.source())},
                           [&](std::vector<index_type> const& t) {
                             return fa[t[0]] == fb[t[1]];
                           });
  }

  std::vector<MSetMorphism> power_projections(RightMSet const& x,
                                              RightMSet const& xk,
                                              std::size_t      k) {
    std::vector<MSetMorphism> out;
    std::size_t const         s = x.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t weight = 1;
      for (std::size_t j = i + 1; j < k; ++j) {
        weight *= s;
      }
      Map map(xk.size());
      for (std::size_t t = 0; t < xk.size(); ++t) {
        map[t] = static_cast<index_type>((t / weight) % s);
      }
      out.push_back(MSetMorphism::unchecked(xk, x, std::move(map)));
    }
    return out;
  }

  bool preserves_power(SetFunctor const& f,
                       RightMSet const&  x,
                       std::size_t       k,
                       std::size_t       cap) {
    auto const       xk = power(x, k, cap);
    std::vector<Map> legs;
    for (auto const& p : power_projections(x, xk, k)) {
      legs.push_back(f.arrow(p));
    }
    return tuple_bijection(f.object(xk),
                           legs,
                           std::vector<std::size_t>(k, f.object(x)),
                           [](auto const&) { return true; });
  }

  bool preserves_terminal(SetFunctor const& f, Monoid const& m) {
    return f.object(terminal(m)) == 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Instance streams
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Runs the checks in order and keeps the first failure.
    class Stream {
     public:
      explicit Stream(PreservationResult& result) : result_(result) {}

      bool done() const {
        return !result_.preserved;
      }

      void record(bool ok, auto&& make_witness) {
        if (done()) {
          return;
        }
        ++result_.instances;
        if (!ok) {
          result_.preserved = false;
          result_.witness   = make_witness();
        }
      }

     private:
      PreservationResult& result_;
    };

    Witness morphism_witness(std::string                      what,
                             std::vector<MSetMorphism> const& arrows) {
      Witness w;
      w.description = std::move(what);
      for (auto const& a : arrows) {
        w.objects.push_back(a.source());
        w.objects.push_back(a.target());
        w.maps.push_back(a.map());
      }
      return w;
    }

    std::string named(RightMSet const& x, std::size_t index) {
      if (!x.label().empty()) {
        return x.label();
      }
      return "X" + std::to_string(x.size()) + "#" + std::to_string(index);
    }

    void run_mono(SetFunctor const&   f,
                  MSetPool&           pool,
                  StreamBounds const& b,
                  Stream&             s) {
      auto check_all = [&](RightMSet const& y, std::string const& name) {
        for (auto mask : sub_msets(y)) {
          if (s.done()) {
            return;
          }
          auto sub = sub_mset(y, mask_elements(mask));
          s.record(preserves_mono(f, sub.inclusion), [&] {
            return morphism_witness(f.name + " does not preserve the mono "
                                        + "into " + name,
                                    {sub.inclusion});
          });
        }
      };
      check_all(regular(pool.monoid()), "M");
      for (std::size_t k = 1; k <= b.mset_size && !s.done(); ++k) {
        auto const& sets = pool.of_size(k);
        for (std::size_t i = 0; i < sets.size() && !s.done(); ++i) {
          check_all(sets[i], named(sets[i], i));
        }
      }
    }

    void run_epi(SetFunctor const&   f,
                 MSetPool&           pool,
                 StreamBounds const& b,
                 Stream&             s) {
      auto const reg = regular(pool.monoid());
      s.record(preserves_epi(f, to_terminal(reg)), [&] {
        return morphism_witness(f.name + " does not preserve the epi M -> 1",
                                {to_terminal(reg)});
      });
      auto check_all = [&](RightMSet const& y, std::string const& name) {
        for (auto const& p : congruences(y)) {
          if (s.done()) {
            return;
          }
          auto q = quotient(y, p);
          s.record(preserves_epi(f, q.projection), [&] {
            return morphism_witness(
                f.name + " does not preserve a quotient of " + name,
                {q.projection});
          });
        }
      };
      check_all(reg, "M");
      for (std::size_t k = 1; k <= b.mset_size && !s.done(); ++k) {
        auto const& sets = pool.of_size(k);
        for (std::size_t i = 0; i < sets.size() && !s.done(); ++i) {
          check_all(sets[i], named(sets[i], i));
        }
      }
    }

    void run_product(SetFunctor const&   f,
                     MSetPool&           pool,
                     StreamBounds const& b,
                     Stream&             s) {
      auto const reg  = regular(pool.monoid());
      auto       test = [&](RightMSet const& x, RightMSet const& y) {
        auto prod = product(x, y);
        s.record(preserves_product(f, prod), [&] {
          return morphism_witness(f.name + " does not preserve the product "
                                      + prod.object.label(),
                                  {prod.first, prod.second});
        });
      };
      test(reg, reg);
      auto const sets = pool.up_to(b.pair_size);
      for (std::size_t i = 0; i < sets.size() && !s.done(); ++i) {
        for (std::size_t j = i; j < sets.size() && !s.done(); ++j) {
          test(sets[i].with_label(named(sets[i], i)),
               sets[j].with_label(named(sets[j], j)));
        }
      }
    }

    void run_power(SetFunctor const&   f,
                   MSetPool&           pool,
                   StreamBounds const& b,
                   Stream&             s) {
      auto const reg  = regular(pool.monoid());
      auto       test = [&](RightMSet const& x, std::size_t k) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) {
          total *= x.size();
        }
        if (total > b.power_cap) {
          return;
        }
        s.record(preserves_power(f, x, k, b.power_cap), [&] {
          Witness w;
          w.description = f.name + " does not preserve the power "
                          + x.label() + "^" + std::to_string(k);
          w.objects.push_back(x);
          return w;
        });
      };
      test(reg, 2);
      test(reg, reg.size());
      auto const sets = pool.up_to(b.pair_size);
      for (std::size_t i = 0; i < sets.size() && !s.done(); ++i) {
        for (std::size_t k = 2; k <= 3 && !s.done(); ++k) {
          test(sets[i].with_label(named(sets[i], i)), k);
        }
      }
    }

    // Every morphism between pooled M-sets of size 0..morphism_size,
    // grouped by (source, target).
    struct SmallArrows {
      std::vector<RightMSet>                              sets;
      std::vector<std::vector<std::vector<MSetMorphism>>> homs;
    };

    SmallArrows small_arrows(MSetPool& pool, std::size_t size) {
      SmallArrows out;
      out.sets = pool.up_to(size);
      for (std::size_t i = 0; i < out.sets.size(); ++i) {
        out.sets[i] = out.sets[i].with_label(named(out.sets[i], i));
      }
      out.homs.resize(out.sets.size());
      for (std::size_t i = 0; i < out.sets.size(); ++i) {
        for (std::size_t j = 0; j < out.sets.size(); ++j) {
          out.homs[i].push_back(hom_set(out.sets[i], out.sets[j]));
        }
      }
      return out;
    }

    void run_equalizer(SetFunctor const&   f,
                       MSetPool&           pool,
                       StreamBounds const& b,
                       Stream&             s) {
      Monoid const& m    = pool.monoid();
      auto          test = [&](MSetMorphism const& x, MSetMorphism const& y) {
        s.record(preserves_equalizer(f, x, y), [&] {
          return morphism_witness(f.name + " does not preserve an equalizer",
                                  {x, y});
        });
      };
      for (index_type m1 = 0; m1 < m.order() && !s.done(); ++m1) {
        for (index_type m2 = m1 + 1; m2 < m.order() && !s.done(); ++m2) {
          test(left_multiplication(m, m1), left_multiplication(m, m2));
        }
      }
      auto const arrows = small_arrows(pool, b.morphism_size);
      for (auto const& row : arrows.homs) {
        for (auto const& hs : row) {
          for (std::size_t i = 0; i < hs.size() && !s.done(); ++i) {
            for (std::size_t j = i + 1; j < hs.size() && !s.done(); ++j) {
              test(hs[i], hs[j]);
            }
          }
        }
      }
    }

    void run_pullback(SetFunctor const&   f,
                      MSetPool&           pool,
                      StreamBounds const& b,
                      Stream&             s) {
      Monoid const& m    = pool.monoid();
      auto          test = [&](MSetMorphism const& x, MSetMorphism const& y) {
        s.record(preserves_pullback(f, x, y), [&] {
          return morphism_witness(f.name + " does not preserve a pullback",
                                  {x, y});
        });
      };
      auto const reg = regular(m);
      test(to_terminal(reg), to_terminal(reg));
      for (index_type m1 = 0; m1 < m.order() && !s.done(); ++m1) {
        for (index_type m2 = m1; m2 < m.order() && !s.done(); ++m2) {
          test(left_multiplication(m, m1), left_multiplication(m, m2));
        }
      }
      auto const   arrows = small_arrows(pool, b.morphism_size);
      std::size_t const count = arrows.sets.size();
      for (std::size_t z = 0; z < count && !s.done(); ++z) {
        for (std::size_t x = 0; x < count && !s.done(); ++x) {
          for (std::size_t y = x; y < count && !s.done(); ++y) {
            for (auto const& f1 : arrows.homs[x][z]) {
              for (auto const& f2 : arrows.homs[y][z]) {
                if (s.done()) {
                  break;
                }
                test(f1, f2);
              }
            }
          }
        }
      }
    }
  }  // namespace

  PreservationResult check_preservation(SetFunctor const&   functor,
                                        Construct           construct,
                                        MSetPool&           pool,
                                        StreamBounds const& bounds) {
    PreservationResult result;
    Stream             s(result);
    switch (construct) {
      case Construct::mono:
        run_mono(functor, pool, bounds, s);
        break;
      case Construct::epi:
        run_epi(functor, pool, bounds, s);
        break;
      case Construct::product:
        run_product(functor, pool, bounds, s);
        break;
      case Construct::equalizer:
        run_equalizer(functor, pool, bounds, s);
        break;
      case Construct::pullback:
        run_pullback(functor, pool, bounds, s);
        break;
      case Construct::power:
        run_power(functor, pool, bounds, s);
        break;
      case Construct::terminal:
        s.record(preserves_terminal(functor, pool.monoid()), [&] {
          Witness w;
          w.description = functor.name + " does not preserve the terminal";
          w.objects.push_back(terminal(pool.monoid()));
          return w;
        });
        break;
    }
    if (result.instances == 0) {
      throw MtoposError(error_code::bound_too_small,
                        std::string("no instances for ") + functor.name + " "
                            + construct_name(construct));
    }
    return result;
  }

}  // namespace mtopos
