// Brute-force reference implementations used as test oracles. Everything
// here works on plain tables and avoids the library's search code.

#ifndef MTOPOS_TESTS_ORACLES_HPP_
#define MTOPOS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "mtopos/monoid.hpp"
#include "mtopos/mset.hpp"

namespace oracle {

  using Table = std::vector<std::uint32_t>;  // row-major n x n or k x n

  inline bool associative(Table const& t, std::size_t n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // The identity of a table, or n if there is none.
  inline std::size_t identity_of(Table const& t, std::size_t n) {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = t[e * n + x] == x && t[x * n + e] == x;
      }
      if (ok) {
        return e;
      }
    }
    return n;
  }

  // Least relabelled table over all permutations sending the identity to 0,
  // prefixed by n.
  inline std::vector<std::uint8_t> canonical_monoid(Table const& t, std::size_t n) {
    std::size_t const         e = identity_of(t, n);
    std::vector<std::size_t>  perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
      if (perm[e] != 0) {
        continue;
      }
      std::vector<std::uint8_t> cand(1 + n * n);
      cand[0] = static_cast<std::uint8_t>(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          cand[1 + perm[a] * n + perm[b]]
              = static_cast<std::uint8_t>(perm[t[a * n + b]]);
        }
      }
      if (best.empty() || cand < best) {
        best = cand;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // Canonical forms of every monoid table of order n, by filtering all
  // n^(n^2) tables.
  inline std::set<std::vector<std::uint8_t>> monoids(std::size_t n) {
    std::set<std::vector<std::uint8_t>> out;
    Table                               t(n * n, 0);
    while (true) {
      if (identity_of(t, n) < n && associative(t, n)) {
        out.insert(canonical_monoid(t, n));
      }
      std::size_t i = 0;
      while (i < t.size() && t[i] + 1 == n) {
        t[i++] = 0;
      }
      if (i == t.size()) {
        break;
      }
      ++t[i];
    }
    return out;
  }

  inline Table monoid_table(mtopos::Monoid const& m) {
    return Table(m.table().begin(), m.table().end());
  }

  inline bool is_action(Table const& act, std::size_t k, mtopos::Monoid const& m) {
    std::size_t const n = m.order();
    for (std::size_t x = 0; x < k; ++x) {
      if (act[x * n + m.identity()] != x) {
        return false;
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (act[act[x * n + a] * n + b] != act[x * n + m.mul(a, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Least relabelled action table over all permutations of the carrier,
  // prefixed by k.
  inline std::vector<std::uint8_t> canonical_mset(Table const& act,
                                                  std::size_t  k,
                                                  std::size_t  n) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
      std::vector<std::uint8_t> cand(1 + k * n);
      cand[0] = static_cast<std::uint8_t>(k);
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t a = 0; a < n; ++a) {
          cand[1 + perm[x] * n + a] = static_cast<std::uint8_t>(perm[act[x * n + a]]);
        }
      }
      if (best.empty() || cand < best) {
        best = cand;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (k == 0) {
      best = {0};
    }
    return best;
  }

  inline std::vector<std::uint8_t> canonical_mset(mtopos::RightMSet const& x) {
    return canonical_mset(Table(x.action().begin(), x.action().end()), x.size(),
                          x.monoid().order());
  }

  // Canonical forms of every right M-set with k elements, by filtering all
  // k^(k n) tables.
  inline std::set<std::vector<std::uint8_t>> msets(mtopos::Monoid const& m,
                                                   std::size_t           k) {
    std::size_t const                   n = m.order();
    std::set<std::vector<std::uint8_t>> out;
    if (k == 0) {
      out.insert({0});
      return out;
    }
    Table t(k * n, 0);
    while (true) {
      if (is_action(t, k, m)) {
        out.insert(canonical_mset(t, k, n));
      }
      std::size_t i = 0;
      while (i < t.size() && t[i] + 1 == k) {
        t[i++] = 0;
      }
      if (i == t.size()) {
        break;
      }
      ++t[i];
    }
    return out;
  }

  // Every equivariant map X -> Y, by testing all |Y|^|X| functions.
  inline std::vector<mtopos::Map> homs(mtopos::RightMSet const& x,
                                       mtopos::RightMSet const& y) {
    std::vector<mtopos::Map> out;
    std::size_t const        n = x.monoid().order();
    if (x.size() == 0) {
      return {mtopos::Map{}};
    }
    if (y.size() == 0) {
      return {};
    }
    mtopos::Map f(x.size(), 0);
    while (true) {
      bool ok = true;
      for (std::uint32_t a = 0; a < x.size() && ok; ++a) {
        for (std::uint32_t m = 0; m < n && ok; ++m) {
          ok = f[x.act(a, m)] == y.act(f[a], m);
        }
      }
      if (ok) {
        out.push_back(f);
      }
      std::size_t i = f.size();
      while (i > 0 && f[i - 1] + 1 == y.size()) {
        f[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++f[i - 1];
    }
    return out;
  }

  // Subsets of X closed under the action, as masks.
  inline std::vector<std::uint64_t> closed_subsets(mtopos::RightMSet const& x) {
    std::vector<std::uint64_t> out;
    std::size_t const          n = x.monoid().order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << x.size()); ++mask) {
      bool ok = true;
      for (std::uint32_t a = 0; a < x.size() && ok; ++a) {
        if (mask >> a & 1) {
          for (std::uint32_t m = 0; m < n && ok; ++m) {
            ok = mask >> x.act(a, m) & 1;
          }
        }
      }
      if (ok) {
        out.push_back(mask);
      }
    }
    return out;
  }

  // Number of classes of the equivalence generated by x ~ x m.
  inline std::size_t component_count(mtopos::RightMSet const& x) {
    std::vector<std::uint32_t> label(x.size());
    std::iota(label.begin(), label.end(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < x.size(); ++a) {
        for (std::uint32_t m = 0; m < x.monoid().order(); ++m) {
          auto const b  = x.act(a, m);
          auto const lo = std::min(label[a], label[b]);
          if (label[a] != lo || label[b] != lo) {
            auto const old_a = label[a], old_b = label[b];
            for (auto& l : label) {
              if (l == old_a || l == old_b) {
                l = lo;
              }
            }
            changed = true;
          }
        }
      }
    }
    return std::set<std::uint32_t>(label.begin(), label.end()).size();
  }

}  // namespace oracle

#endif  // MTOPOS_TESTS_ORACLES_HPP_
