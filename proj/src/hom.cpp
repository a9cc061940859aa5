// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Backtracking search for equivariant maps.

#include <algorithm>
#include <functional>

#include "mtopos/mset.hpp"

namespace mtopos {

  namespace {
    index_type const unassigned = static_cast<index_type>(-1);

    class HomSearch {
     public:
      HomSearch(RightMSet const& x, RightMSet const& y, bool injective)
          : x_(x),
            y_(y),
            n_(x.monoid().order()),
            injective_(injective),
            map_(x.size(), unassigned),
            used_(y.size(), false) {}

      // Calls `visit` with each map; stop when it returns false.
      void run(std::function<bool(Map const&)> const& visit) {
        visit_ = &visit;
        stop_  = false;
        recurse(0);
      }

     private:
      void recurse(index_type start) {
        while (start < x_.size() && map_[start] != unassigned) {
          ++start;
        }
        if (start == x_.size()) {
          stop_ = !(*visit_)(map_);
          return;
        }
        std::vector<index_type> trail;
        for (index_type y = 0; y < y_.size() && !stop_; ++y) {
          if (assign_orbit(start, y, trail)) {
            recurse(start + 1);
          }
          for (auto z : trail) {
            if (injective_) {
              used_[map_[z]] = false;
            }
            map_[z] = unassigned;
          }
          trail.clear();
        }
      }

      // f(x m) := y m for every m; records new assignments in `trail`.
      bool assign_orbit(index_type x, index_type y, std::vector<index_type>& trail) {
        for (index_type m = 0; m < n_; ++m) {
          index_type const z  = x_.act(x, m);
          index_type const fz = y_.act(y, m);
          if (map_[z] == unassigned) {
            if (injective_) {
              if (used_[fz]) {
                return false;
              }
              used_[fz] = true;
            }
            map_[z] = fz;
            trail.push_back(z);
          } else if (map_[z] != fz) {
            return false;
          }
        }
        return true;
      }

      RightMSet const&                       x_;
      RightMSet const&                       y_;
      std::size_t                            n_;
      bool                                   injective_;
      Map                                    map_;
      std::vector<bool>                      used_;
      std::function<bool(Map const&)> const* visit_ = nullptr;
      bool                                   stop_  = false;
    };

    void require_same_monoid(RightMSet const& x, RightMSet const& y) {
      if (!(x.monoid() == y.monoid())) {
        throw MtoposError(error_code::monoid_mismatch,
                          "hom search across different monoids");
      }
    }

    // Sorted sizes of the components, and the number of fixed points.
    std::pair<std::vector<std::size_t>, std::size_t>
    invariants(RightMSet const& x) {
      auto                     p = connected_components(x);
      std::vector<std::size_t> sizes(p.count, 0);
      for (auto c : p.class_of) {
        ++sizes[c];
      }
      std::sort(sizes.begin(), sizes.end());
      return {sizes, fixed_points(x).size()};
    }
  }  // namespace

  std::vector<Map>
  hom_maps(RightMSet const& x, RightMSet const& y, std::size_t limit) {
    require_same_monoid(x, y);
    std::vector<Map> out;
    HomSearch        search(x, y, false);
    search.run([&](Map const& f) {
      out.push_back(f);
      return limit == 0 || out.size() < limit;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<MSetMorphism> hom_set(RightMSet const& x, RightMSet const& y) {
    std::vector<MSetMorphism> out;
    for (auto& f : hom_maps(x, y)) {
      out.push_back(MSetMorphism::unchecked(x, y, std::move(f)));
    }
    return out;
  }

  std::size_t count_homs(RightMSet const& x, RightMSet const& y) {
    require_same_monoid(x, y);
    std::size_t count = 0;
    HomSearch   search(x, y, false);
    search.run([&](Map const&) {
      ++count;
      return true;
    });
    return count;
  }

  std::optional<Map> find_isomorphism(RightMSet const& x, RightMSet const& y) {
    require_same_monoid(x, y);
    if (x.size() != y.size() || invariants(x) != invariants(y)) {
      return std::nullopt;
    }
    std::optional<Map> out;
    HomSearch          search(x, y, true);
    search.run([&](Map const& f) {
      out = f;
      return false;
    });
    return out;
  }

  bool are_isomorphic(RightMSet const& x, RightMSet const& y) {
    return find_isomorphism(x, y).has_value();
  }

}  // namespace mtopos
