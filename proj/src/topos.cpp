// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/topos.hpp"

#include <algorithm>
#include <set>

namespace mtopos {

  ////////////////////////////////////////////////////////////////////////
  // Omega
  ////////////////////////////////////////////////////////////////////////

  index_type SubobjectClassifier::index_of(std::uint64_t ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
    if (it == ideals.end() || *it != ideal) {
      throw MtoposError(error_code::index_error, "not a right ideal");
    }
    return static_cast<index_type>(it - ideals.begin());
  }

  namespace {
    bool is_right_ideal(Monoid const& m, std::uint64_t mask) {
      for (index_type x = 0; x < m.order(); ++x) {
        if ((mask >> x & 1) == 0) {
          continue;
        }
        for (index_type y = 0; y < m.order(); ++y) {
          if ((mask >> m.mul(x, y) & 1) == 0) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  SubobjectClassifier omega(Monoid const& m) {
    std::size_t const n = m.order();
    if (n > 64) {
      throw MtoposError(error_code::cap_exceeded,
                        "Omega is only built for monoids of order <= 64");
    }
    std::vector<std::uint64_t> ideals;
    if (n <= 12) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        if (is_right_ideal(m, mask)) {
          ideals.push_back(mask);
        }
      }
    } else {
      // right ideals are exactly the sub-M-sets of M itself
      ideals = sub_msets(regular(m));
    }
    std::vector<index_type> action(ideals.size() * n);
    auto                    index = [&](std::uint64_t mask) {
      return static_cast<index_type>(
          std::lower_bound(ideals.begin(), ideals.end(), mask) - ideals.begin());
    };
    for (index_type i = 0; i < ideals.size(); ++i) {
      for (index_type a = 0; a < n; ++a) {
        std::uint64_t pre = 0;
        for (index_type b = 0; b < n; ++b) {
          if (ideals[i] >> m.mul(a, b) & 1) {
            pre |= std::uint64_t(1) << b;
          }
        }
        action[i * n + a] = index(pre);
      }
    }
    std::uint64_t const full
        = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    auto object = RightMSet::unchecked(m, ideals.size(), std::move(action))
                      .with_label("Omega");
    auto top = index(full);
    return SubobjectClassifier{object, std::move(ideals), top, 0};
  }

  MSetMorphism classify(SubobjectClassifier const& omega,
                        RightMSet const&           a,
                        ElementSet const&          sub) {
    if (!is_sub_mset(a, sub)) {
      throw MtoposError(error_code::not_sub_mset,
                        "the subset is not closed under the action");
    }
    std::vector<bool> in(a.size(), false);
    for (auto x : sub) {
      in[x] = true;
    }
    Map map(a.size());
    for (index_type x = 0; x < a.size(); ++x) {
      std::uint64_t mask = 0;
      for (index_type m = 0; m < a.monoid().order(); ++m) {
        if (in[a.act(x, m)]) {
          mask |= std::uint64_t(1) << m;
        }
      }
      map[x] = omega.index_of(mask);
    }
    return MSetMorphism::unchecked(a, omega.omega, std::move(map));
  }

  ElementSet pullback_of_top(SubobjectClassifier const& omega,
                             MSetMorphism const&        s) {
    ElementSet out;
    for (index_type x = 0; x < s.source().size(); ++x) {
      if (s(x) == omega.top) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exponentials
  ////////////////////////////////////////////////////////////////////////

  index_type Exponential::index_of(Map const& f) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) {
      throw MtoposError(error_code::index_error,
                        "map is not an element of the exponential");
    }
    return static_cast<index_type>(it - maps.begin());
  }

  Exponential exponential(RightMSet const& p, RightMSet const& q, std::size_t cap) {
    if (!(p.monoid() == q.monoid())) {
      throw MtoposError(error_code::monoid_mismatch,
                        "exponential of M-sets over different monoids");
    }
    Monoid const& m    = p.monoid();
    auto const    mp   = product(regular(m), p).object;
    auto          maps = hom_maps(mp, q, cap + 1);
    if (maps.size() > cap) {
      throw MtoposError(error_code::cap_exceeded,
                        "exponential carrier exceeds cap " + std::to_string(cap));
    }
    std::size_t const       n  = m.order();
    std::size_t const       np = p.size();
    std::vector<index_type> action(maps.size() * n);
    Map                     moved(n * np);
    auto                    locate = [&](Map const& f) {
      return static_cast<index_type>(
          std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
    };
    for (index_type i = 0; i < maps.size(); ++i) {
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = 0; b < n; ++b) {
          for (index_type x = 0; x < np; ++x) {
            moved[b * np + x] = maps[i][m.mul(a, b) * np + x];
          }
        }
        action[i * n + a] = locate(moved);
      }
    }
    std::string label;
    if (!p.label().empty() && !q.label().empty()) {
      label = "(" + q.label() + ")^(" + p.label() + ")";
    }
    auto object
        = RightMSet::unchecked(m, maps.size(), std::move(action)).with_label(label);
    auto ev_source = product(object, p).object;
    Map  ev(ev_source.size());
    for (index_type i = 0; i < maps.size(); ++i) {
      for (index_type x = 0; x < np; ++x) {
        ev[i * np + x] = maps[i][m.identity() * np + x];
      }
    }
    auto evaluation = MSetMorphism::unchecked(ev_source, q, std::move(ev));
    return Exponential{object, p, q, std::move(maps), evaluation};
  }

  MSetMorphism exp_transpose(Exponential const&  exp,
                             RightMSet const&    x,
                             MSetMorphism const& f) {
    auto const xp = product(x, exp.exponent).object;
    if (!(f.source() == xp) || !(f.target() == exp.base)) {
      throw MtoposError(error_code::shape_mismatch,
                        "transpose needs a morphism X x P -> Q");
    }
    Monoid const&     m  = x.monoid();
    std::size_t const n  = m.order();
    std::size_t const np = exp.exponent.size();
    Map               out(x.size());
    Map               g(n * np);
    for (index_type a = 0; a < x.size(); ++a) {
      for (index_type b = 0; b < n; ++b) {
        for (index_type p = 0; p < np; ++p) {
          g[b * np + p] = f(x.act(a, b) * np + p);
        }
      }
      out[a] = exp.index_of(g);
    }
    return MSetMorphism::unchecked(x, exp.object, std::move(out));
  }

  MSetMorphism exp_untranspose(Exponential const& exp, MSetMorphism const& g) {
    if (!(g.target() == exp.object)) {
      throw MtoposError(error_code::shape_mismatch,
                        "untranspose needs a morphism X -> Q^P");
    }
    auto const&       x  = g.source();
    std::size_t const np = exp.exponent.size();
    auto const        xp = product(x, exp.exponent).object;
    auto const        one = x.monoid().identity();
    Map               out(xp.size());
    for (index_type a = 0; a < x.size(); ++a) {
      for (index_type p = 0; p < np; ++p) {
        out[a * np + p] = exp.maps[g(a)][one * np + p];
      }
    }
    return MSetMorphism::unchecked(xp, exp.base, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Comparison maps
  ////////////////////////////////////////////////////////////////////////

  AlphaReport alpha(RightMSet const& x) {
    AlphaReport out;
    out.fixed      = fixed_points(x);
    out.components = connected_components(x);
    std::vector<bool> hit(out.components.count, false);
    out.injective = true;
    for (auto a : out.fixed) {
      auto c = out.components.class_of[a];
      out.map.push_back(c);
      if (hit[c]) {
        out.injective = false;
      }
      hit[c] = true;
    }
    out.surjective
        = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return out;
  }

  ThetaReport theta_for_C(RightMSet const& p, RightMSet const& q, std::size_t cap) {
    auto const  exp = exponential(p, q, cap);
    auto const  ce  = connected_components(exp.object);
    auto const  cp  = connected_components(p);
    auto const  cq  = connected_components(q);
    ThetaReport out;
    out.components_exponential = ce.count;
    out.function_count         = 1;
    for (std::size_t i = 0; i < cp.count; ++i) {
      out.function_count *= cq.count;
    }
    std::size_t const np  = p.size();
    auto const        one = p.monoid().identity();
    std::vector<std::size_t> code(exp.maps.size(), 0);
    for (std::size_t i = 0; i < exp.maps.size(); ++i) {
      std::vector<index_type> value(cp.count, static_cast<index_type>(-1));
      for (index_type x = 0; x < np; ++x) {
        auto c = cp.class_of[x];
        auto v = cq.class_of[exp.maps[i][one * np + x]];
        if (value[c] == static_cast<index_type>(-1)) {
          value[c] = v;
        } else if (value[c] != v) {
          out.well_defined = false;
        }
      }
      for (auto v : value) {
        code[i] = code[i] * cq.count + v;
      }
    }
    out.map.assign(ce.count, 0);
    std::vector<bool> seen_class(ce.count, false);
    for (std::size_t i = 0; i < exp.maps.size(); ++i) {
      auto c = ce.class_of[i];
      if (!seen_class[c]) {
        out.map[c]    = code[i];
        seen_class[c] = true;
      } else if (out.map[c] != code[i]) {
        out.well_defined = false;
      }
    }
    std::set<std::size_t> distinct(out.map.begin(), out.map.end());
    out.injective  = distinct.size() == out.map.size();
    out.surjective = distinct.size() == out.function_count;
    return out;
  }

  std::size_t chi_for_C(Monoid const& m) {
    return connected_components(omega(m).omega).count;
  }

}  // namespace mtopos
