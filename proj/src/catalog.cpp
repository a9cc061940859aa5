// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/catalog.hpp"

#include <algorithm>
#include <map>

namespace mtopos::catalog {

  Monoid trivial() {
    return Monoid::unchecked(1, {0}, 0);
  }

  Monoid cyclic_group(std::size_t n) {
    std::vector<index_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<index_type>((a + b) % n);
      }
    }
    return Monoid::unchecked(n, std::move(table), 0);
  }

  Monoid two_element_semilattice() {
    return Monoid::unchecked(2, {0, 1, 1, 1}, 0);
  }

  Monoid with_right_absorbing(std::size_t k) {
    std::size_t const       n = k + 1;
    std::vector<index_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<index_type>(a == 0 ? b : a);
      }
    }
    return Monoid::unchecked(n, std::move(table), 0);
  }

  Monoid with_left_absorbing(std::size_t k) {
    return opposite(with_right_absorbing(k));
  }

  Monoid max_chain(std::size_t n) {
    std::vector<index_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<index_type>(std::max(a, b));
      }
    }
    return Monoid::unchecked(n, std::move(table), 0);
  }

  Monoid full_transformation(std::size_t s) {
    std::vector<std::vector<index_type>> maps;
    std::vector<index_type>              image(s, 0);
    std::size_t                          total = 1;
    for (std::size_t i = 0; i < s; ++i) {
      total *= s;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = s; i-- > 0;) {
        image[i] = static_cast<index_type>(c % s);
        c /= s;
      }
      maps.push_back(image);
    }
    auto is_perm = [s](std::vector<index_type> const& f) {
      std::vector<bool> hit(s, false);
      for (auto v : f) {
        hit[v] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    std::stable_partition(maps.begin(), maps.end(), is_perm);
    std::map<std::vector<index_type>, index_type> index;
    for (index_type i = 0; i < maps.size(); ++i) {
      index[maps[i]] = i;
    }
    std::size_t const       n = maps.size();
    std::vector<index_type> table(n * n);
    std::vector<index_type> composite(s);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < s; ++i) {
          composite[i] = maps[a][maps[b][i]];
        }
        table[a * n + b] = index.at(composite);
      }
    }
    return Monoid::unchecked(n, std::move(table), 0);
  }

}  // namespace mtopos::catalog
