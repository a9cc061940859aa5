// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/flatness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mtopos/enumerate.hpp"

namespace mtopos {

  ////////////////////////////////////////////////////////////////////////
  // Tensor products
  ////////////////////////////////////////////////////////////////////////

  TensorResult tensor(RightMSet const& a, LeftMSet const& b) {
    if (!(a.monoid() == b.monoid())) {
      throw MtoposError(error_code::monoid_mismatch,
                        "tensor of M-sets over different monoids");
    }
    std::size_t const nb = b.size();
    detail::UnionFind uf(a.size() * nb);
    for (index_type x = 0; x < a.size(); ++x) {
      for (index_type m = 0; m < a.monoid().order(); ++m) {
        for (index_type y = 0; y < nb; ++y) {
          uf.unite(static_cast<index_type>(a.act(x, m) * nb + y),
                   static_cast<index_type>(x * nb + b.act(m, y)));
        }
      }
    }
    TensorResult out;
    out.classes    = uf.partition();
    out.left_size  = a.size();
    out.right_size = nb;
    return out;
  }

  TensorResult tensor(RightMSet const& y, BiSet const& b) {
    auto              out = tensor(y, b.left());
    Monoid const&     n   = b.right_monoid();
    std::size_t const nn  = n.order();
    std::size_t const nb  = b.size();
    std::vector<index_type> action(out.size() * nn);
    for (index_type p = 0; p < y.size() * nb; ++p) {
      index_type const x = static_cast<index_type>(p / nb);
      index_type const c = static_cast<index_type>(p % nb);
      for (index_type m = 0; m < nn; ++m) {
        action[out.classes.class_of[p] * nn + m]
            = out.class_of(x, b.right().act(c, m));
      }
    }
    out.action = RightMSet::unchecked(n, out.size(), std::move(action));
    return out;
  }

  Map tensor_arrow(MSetMorphism const& f, LeftMSet const& b) {
    auto const src = tensor(f.source(), b);
    auto const tgt = tensor(f.target(), b);
    Map        out(src.size());
    for (index_type x = 0; x < f.source().size(); ++x) {
      for (index_type y = 0; y < b.size(); ++y) {
        out[src.class_of(x, y)] = tgt.class_of(f(x), y);
      }
    }
    return out;
  }

  SetFunctor tensor_functor(LeftMSet const& b) {
    SetFunctor f;
    f.name   = "- (x) B";
    f.object = [b](RightMSet const& x) { return tensor(x, b).size(); };
    f.arrow  = [b](MSetMorphism const& g) { return tensor_arrow(g, b); };
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensor-hom adjunction
  ////////////////////////////////////////////////////////////////////////

  HomIntoResult hom_into(BiSet const& b, RightMSet const& x) {
    if (!(x.monoid() == b.right_monoid())) {
      throw MtoposError(error_code::monoid_mismatch,
                        "Hom_N(B, X) needs X over the right monoid of B");
    }
    Monoid const&     m    = b.left_monoid();
    auto              maps = hom_maps(b.right(), x);
    std::size_t const n    = m.order();
    std::vector<index_type> action(maps.size() * n);
    Map                     moved(b.size());
    for (index_type i = 0; i < maps.size(); ++i) {
      for (index_type a = 0; a < n; ++a) {
        for (index_type c = 0; c < b.size(); ++c) {
          moved[c] = maps[i][b.left().act(a, c)];
        }
        action[i * n + a] = static_cast<index_type>(
            std::lower_bound(maps.begin(), maps.end(), moved) - maps.begin());
      }
    }
    auto object = RightMSet::unchecked(m, maps.size(), std::move(action));
    return HomIntoResult{object, std::move(maps)};
  }

  AdjunctionCheck tensor_hom_adjunction_check(BiSet const&     b,
                                              RightMSet const& y,
                                              RightMSet const& x) {
    AdjunctionCheck out;
    auto const      t     = tensor(y, b);
    auto const      h     = hom_into(b, x);
    auto const      left  = hom_maps(*t.action, x);
    auto const      right = hom_maps(y, h.object);
    out.left_count        = left.size();
    out.right_count       = right.size();
    auto fail             = [&](std::string why) {
      if (out.ok) {
        out.ok      = false;
        out.failure = std::move(why);
      }
    };
    if (left.size() != right.size()) {
      fail("hom-sets differ in size");
    }
    std::size_t const nb = b.size();
    // h |-> (y |-> (b |-> h(y (x) b)))
    auto forward = [&](Map const& hm) -> std::optional<Map> {
      Map k(y.size());
      Map column(nb);
      for (index_type a = 0; a < y.size(); ++a) {
        for (index_type c = 0; c < nb; ++c) {
          column[c] = hm[t.class_of(a, c)];
        }
        auto it = std::lower_bound(h.maps.begin(), h.maps.end(), column);
        if (it == h.maps.end() || *it != column) {
          return std::nullopt;
        }
        k[a] = static_cast<index_type>(it - h.maps.begin());
      }
      return k;
    };
    // k |-> (y (x) b |-> k(y)(b)), checking representative independence
    auto backward = [&](Map const& k) -> std::optional<Map> {
      Map hm(t.size(), static_cast<index_type>(-1));
      for (index_type a = 0; a < y.size(); ++a) {
        for (index_type c = 0; c < nb; ++c) {
          auto const cls = t.class_of(a, c);
          auto const v   = h.maps[k[a]][c];
          if (hm[cls] == static_cast<index_type>(-1)) {
            hm[cls] = v;
          } else if (hm[cls] != v) {
            return std::nullopt;
          }
        }
      }
      return hm;
    };
    std::set<Map> left_set(left.begin(), left.end());
    std::set<Map> right_set(right.begin(), right.end());
    for (auto const& hm : left) {
      auto k = forward(hm);
      if (!k || right_set.count(*k) == 0) {
        fail("transpose of a map on the tensor side is not a morphism");
        break;
      }
      auto back = backward(*k);
      if (!back || *back != hm) {
        fail("round trip on the tensor side is not the identity");
        break;
      }
    }
    for (auto const& k : right) {
      auto hm = backward(k);
      if (!hm || left_set.count(*hm) == 0) {
        fail("transpose of a map on the hom side is not a morphism");
        break;
      }
      auto again = forward(*hm);
      if (!again || *again != k) {
        fail("round trip on the hom side is not the identity");
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Flatness
  ////////////////////////////////////////////////////////////////////////

  FilteringResult is_flat(LeftMSet const& b) {
    FilteringResult   out;
    Monoid const&     m = b.monoid();
    std::size_t const k = b.size();
    if (k == 0) {
      out.failed_condition = 1;
      return out;
    }
    // below[c] = M c as a membership table
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (index_type c = 0; c < k; ++c) {
      for (index_type a = 0; a < m.order(); ++a) {
        below[c][b.act(a, c)] = true;
      }
    }
    for (index_type b1 = 0; b1 < k; ++b1) {
      for (index_type b2 = b1 + 1; b2 < k; ++b2) {
        bool found = false;
        for (index_type c = 0; c < k && !found; ++c) {
          found = below[c][b1] && below[c][b2];
        }
        if (!found) {
          out.failed_condition = 2;
          out.witness          = {b1, b2};
          return out;
        }
      }
    }
    for (index_type m1 = 0; m1 < m.order(); ++m1) {
      for (index_type m2 = m1 + 1; m2 < m.order(); ++m2) {
        for (index_type x = 0; x < k; ++x) {
          if (b.act(m1, x) != b.act(m2, x)) {
            continue;
          }
          bool found = false;
          for (index_type h = 0; h < m.order() && !found; ++h) {
            if (m.mul(m1, h) != m.mul(m2, h)) {
              continue;
            }
            for (index_type c = 0; c < k && !found; ++c) {
              found = b.act(h, c) == x;
            }
          }
          if (!found) {
            out.failed_condition = 3;
            out.witness          = {m1, m2, x};
            return out;
          }
        }
      }
    }
    out.flat = true;
    return out;
  }

  bool is_projective(LeftMSet const& x) {
    return is_projective(x.as_right());
  }

  LeftMSet principal_left_mset(Monoid const& m, index_type e) {
    auto const op = opposite(m);
    // in M^op the principal right ideal of e is M e
    auto sub = sub_mset(regular(op), principal_right_ideal(op, e));
    return LeftMSet::from_right(
        m, sub.object.with_label("M" + std::to_string(e)));
  }

  namespace {
    // Does F preserve the product X_0 x ... x X_{r-1}, built left-nested?
    bool preserves_nary_product(SetFunctor const&             f,
                                std::vector<RightMSet> const& factors) {
      RightMSet                 acc  = factors[0];
      std::vector<MSetMorphism> legs = {identity_morphism(factors[0])};
      for (std::size_t i = 1; i < factors.size(); ++i) {
        auto prod = product(acc, factors[i]);
        for (auto& leg : legs) {
          leg = compose(leg, prod.first);
        }
        legs.push_back(prod.second);
        acc = prod.object;
      }
      std::set<std::vector<index_type>> image;
      std::vector<Map>                  fl;
      std::size_t                       expected = 1;
      for (std::size_t i = 0; i < legs.size(); ++i) {
        fl.push_back(f.arrow(legs[i]));
        expected *= f.object(factors[i]);
      }
      std::size_t const size = f.object(acc);
      for (index_type z = 0; z < size; ++z) {
        std::vector<index_type> t;
        for (auto const& l : fl) {
          t.push_back(l[z]);
        }
        if (!image.insert(t).second) {
          return false;
        }
      }
      return image.size() == expected;
    }
  }  // namespace

  FlatnessProfile flatness_profile(LeftMSet const&     b,
                                   MSetPool&           pool,
                                   StreamBounds const& bounds) {
    if (!(pool.monoid() == b.monoid())) {
      throw MtoposError(error_code::monoid_mismatch,
                        "pool and left M-set are over different monoids");
    }
    FlatnessProfile out;
    auto const      f = tensor_functor(b);
    out.indecomposable = is_indecomposable(b);
    out.projective     = is_projective(b);
    out.filtering      = is_flat(b);
    out.flat           = out.filtering.flat;

    auto preserved = [&](Construct c) {
      return check_preservation(f, c, pool, bounds).preserved;
    };
    bool const terminal  = preserved(Construct::terminal);
    out.mono_flat        = preserved(Construct::mono);
    out.fin_product_flat = b.size() > 0 && terminal && preserved(Construct::product);
    out.equalizer_flat   = preserved(Construct::equalizer);
    out.pullback_flat    = preserved(Construct::pullback);

    bool products = out.fin_product_flat && preserved(Construct::power);
    auto small    = pool.up_to(std::min<std::size_t>(bounds.morphism_size, 2));
    for (std::size_t r = 3; r <= 4 && products; ++r) {
      std::vector<std::size_t> pick(r, 0);
      while (products) {
        std::vector<RightMSet> factors;
        for (auto i : pick) {
          factors.push_back(small[i]);
        }
        products = preserves_nary_product(f, factors);
        std::size_t i = r;
        while (i > 0 && pick[i - 1] + 1 == small.size()) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) {
          pick[j] = pick[i - 1];
        }
      }
    }
    out.product_flat_bounded = products;

    auto note = [&](std::string text) {
      out.consistent = false;
      out.notes.push_back(std::move(text));
    };
    bool components_flat = b.size() > 0;
    for (auto const& part : decompose(b.as_right())) {
      auto sub = LeftMSet::from_right(b.monoid(), part.object);
      components_flat = components_flat && is_flat(sub).flat;
    }
    if (b.size() > 0 && components_flat != out.pullback_flat) {
      note("pullback-flatness: preservation says "
           + std::string(out.pullback_flat ? "yes" : "no")
           + ", componentwise filtering says "
           + std::string(components_flat ? "yes" : "no"));
    }
    if (out.flat != (out.indecomposable && out.pullback_flat)) {
      note("flatness: filtering test disagrees with indecomposable and "
           "pullback-flat");
    }
    if (out.flat && !(out.equalizer_flat && out.mono_flat && out.fin_product_flat)) {
      note("flat but some finite limit is not preserved");
    }
    // A left absorbing element makes the terminal left M-set preserve all
    // products; the converse cannot be refuted by a bounded search.
    if (b.size() == 1 && !out.product_flat_bounded
        && !element_classes(b.monoid()).left_absorbing.empty()) {
      note("M has a left absorbing element but the terminal left M-set "
           "fails to preserve a tested product");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Points
  ////////////////////////////////////////////////////////////////////////

  PointsCategory enumerate_points(Monoid const& m, std::size_t bound) {
    if (bound == 0) {
      throw MtoposError(error_code::range_error, "points bound must be >= 1");
    }
    PointsCategory out;
    out.bound = bound;
    for (std::size_t k = 1; k <= bound; ++k) {
      for (auto& x : enumerate_left_msets(m, k)) {
        if (is_flat(x).flat) {
          out.objects.push_back(std::move(x));
        }
      }
    }
    std::size_t const count = out.objects.size();
    out.homs.assign(count, std::vector<std::size_t>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        out.homs[i][j] = count_homs(out.objects[i].as_right(),
                                    out.objects[j].as_right());
      }
    }
    for (std::size_t i = 0; i < count && !out.initial; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < count && ok; ++j) {
        ok = out.homs[i][j] == 1;
      }
      if (ok) {
        out.initial = i;
      }
    }
    for (std::size_t i = 0; i < count && !out.terminal; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < count && ok; ++j) {
        ok = out.homs[j][i] == 1;
      }
      if (ok) {
        out.terminal = i;
      }
    }
    for (auto e : element_classes(m).idempotents) {
      auto me  = principal_left_mset(m, e);
      bool dup = false;
      for (auto const& other : out.essential) {
        dup = dup || are_isomorphic(other.as_right(), me.as_right());
      }
      if (!dup) {
        out.essential.push_back(me);
        out.essential_idempotent.push_back(e);
      }
    }
    for (std::size_t i = 0; i < out.essential.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < out.essential.size() && ok; ++j) {
        ok = count_homs(out.essential[j].as_right(),
                        out.essential[i].as_right())
             == 1;
      }
      if (ok) {
        out.terminal_essential = i;
        break;
      }
    }
    return out;
  }

}  // namespace mtopos
