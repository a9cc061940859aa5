// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace mtopos {

  std::string CanonicalForm::hex() const {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    out.reserve(2 * bytes.size());
    for (auto b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xF]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Lexicographically least relabelled table over the given labellings.
    // `perm[x]` is the new label of x. The table is read through `entry`.
    template <typename NextLabelling>
    CanonicalForm least_relabelling(std::size_t            rows,
                                    std::size_t            cols,
                                    std::uint8_t           header,
                                    std::vector<index_type>& perm,
                                    NextLabelling&&        next,
                                    auto const&            relabel) {
      CanonicalForm             best;
      std::vector<std::uint8_t> candidate(1 + rows * cols);
      candidate[0] = header;
      bool first   = true;
      do {
        relabel(perm, candidate);
        if (first || candidate < best.bytes) {
          best.bytes        = candidate;
          best.automorphisms = 1;
          first             = false;
        } else if (candidate == best.bytes) {
          ++best.automorphisms;
        }
      } while (next(perm));
      return best;
    }
  }  // namespace

  CanonicalForm canonical_form(Monoid const& m) {
    std::size_t const n = m.order();
    // labellings with the identity sent to 0: permute the other elements
    std::vector<index_type> others;
    for (index_type a = 0; a < n; ++a) {
      if (a != m.identity()) {
        others.push_back(a);
      }
    }
    std::vector<index_type> perm(n);
    auto                    load = [&]() {
      perm[m.identity()] = 0;
      for (index_type i = 0; i < others.size(); ++i) {
        perm[others[i]] = i + 1;
      }
    };
    load();
    auto next = [&](std::vector<index_type>&) {
      bool more = std::next_permutation(others.begin(), others.end());
      load();
      return more;
    };
    std::vector<index_type> inverse(n);
    auto relabel = [&](std::vector<index_type> const& p,
                       std::vector<std::uint8_t>&     out) {
      for (index_type a = 0; a < n; ++a) {
        inverse[p[a]] = a;
      }
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = 0; b < n; ++b) {
          out[1 + a * n + b]
              = static_cast<std::uint8_t>(p[m.mul(inverse[a], inverse[b])]);
        }
      }
    };
    return least_relabelling(
        n, n, static_cast<std::uint8_t>(n), perm, next, relabel);
  }

  Monoid canonical_monoid(Monoid const& m) {
    auto const              form = canonical_form(m);
    std::size_t const       n    = m.order();
    std::vector<index_type> table(form.bytes.begin() + 1, form.bytes.end());
    return Monoid::unchecked(n, std::move(table), 0);
  }

  namespace {
    // Colour refinement of the elements of X: starting from orbit size and
    // fixedness, repeatedly split by the colours of x * m for each m. The
    // colours are ranks of sorted signatures, so they are invariant under
    // relabelling of X.
    std::vector<index_type> refined_colours(RightMSet const& x) {
      std::size_t const       k = x.size();
      std::size_t const       n = x.monoid().order();
      std::vector<index_type> colour(k);
      {
        std::vector<std::pair<std::size_t, bool>> sig(k);
        for (index_type a = 0; a < k; ++a) {
          auto orb = orbit(x, a);
          sig[a]   = {orb.size(), orb.size() == 1};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (index_type a = 0; a < k; ++a) {
          colour[a] = static_cast<index_type>(
              std::lower_bound(sorted.begin(), sorted.end(), sig[a])
              - sorted.begin());
        }
      }
      std::size_t classes = 0;
      while (true) {
        std::vector<std::vector<index_type>> sig(k);
        for (index_type a = 0; a < k; ++a) {
          sig[a].reserve(n + 1);
          sig[a].push_back(colour[a]);
          for (index_type m = 0; m < n; ++m) {
            sig[a].push_back(colour[x.act(a, m)]);
          }
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (index_type a = 0; a < k; ++a) {
          colour[a] = static_cast<index_type>(
              std::lower_bound(sorted.begin(), sorted.end(), sig[a])
              - sorted.begin());
        }
        if (sorted.size() == classes) {
          return colour;
        }
        classes = sorted.size();
      }
    }
  }  // namespace

  CanonicalForm canonical_form(RightMSet const& x) {
    std::size_t const k = x.size();
    std::size_t const n = x.monoid().order();
    auto const        colour = refined_colours(x);
    // cells: elements grouped by colour, colours in increasing order
    std::vector<index_type> order(k);
    std::iota(order.begin(), order.end(), index_type(0));
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return colour[a] < colour[b];
    });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < k;) {
      std::size_t j = i;
      while (j < k && colour[order[j]] == colour[order[i]]) {
        ++j;
      }
      cells.emplace_back(i, j);
      i = j;
    }
    std::vector<index_type> perm(k);
    auto                    load = [&]() {
      for (index_type i = 0; i < k; ++i) {
        perm[order[i]] = i;
      }
    };
    load();
    // odometer over the permutations of each cell
    auto next = [&](std::vector<index_type>&) {
      for (auto const& [lo, hi] : cells) {
        if (std::next_permutation(order.begin() + lo, order.begin() + hi)) {
          load();
          return true;
        }
      }
      load();
      return false;
    };
    auto relabel = [&](std::vector<index_type> const& p,
                       std::vector<std::uint8_t>&     out) {
      for (index_type a = 0; a < k; ++a) {
        for (index_type m = 0; m < n; ++m) {
          out[1 + p[a] * n + m] = static_cast<std::uint8_t>(p[x.act(a, m)]);
        }
      }
    };
    return least_relabelling(
        k, n, static_cast<std::uint8_t>(k), perm, next, relabel);
  }

  namespace {
    RightMSet mset_from_form(Monoid const& m, CanonicalForm const& form) {
      std::size_t const       k = form.bytes[0];
      std::vector<index_type> action(form.bytes.begin() + 1, form.bytes.end());
      return RightMSet::unchecked(m, k, std::move(action));
    }
  }  // namespace

  RightMSet canonical_mset(RightMSet const& x) {
    return mset_from_form(x.monoid(), canonical_form(x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class MonoidSearch {
     public:
      explicit MonoidSearch(std::size_t n) : n_(n), table_(n * n, unset) {
        for (index_type a = 0; a < n; ++a) {
          table_[a]          = a;  // 0 * a
          table_[a * n]      = a;  // a * 0
        }
        for (index_type a = 1; a < n; ++a) {
          for (index_type b = 1; b < n; ++b) {
            cells_.push_back(a * n + b);
          }
        }
      }

      std::set<std::vector<std::uint8_t>> run() {
        recurse(0);
        return std::move(found_);
      }

     private:
      static constexpr index_type unset = static_cast<index_type>(-1);

      index_type at(index_type a, index_type b) const {
        return table_[a * n_ + b];
      }

      // Every fully determined triple is associative.
      bool consistent() const {
        for (index_type a = 1; a < n_; ++a) {
          for (index_type b = 1; b < n_; ++b) {
            index_type ab = at(a, b);
            if (ab == unset) {
              continue;
            }
            for (index_type c = 1; c < n_; ++c) {
              index_type bc = at(b, c);
              if (bc == unset) {
                continue;
              }
              index_type left = at(ab, c), right = at(a, bc);
              if (left != unset && right != unset && left != right) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void recurse(std::size_t i) {
        if (i == cells_.size()) {
          auto m = Monoid::unchecked(n_, table_, 0);
          found_.insert(canonical_form(m).bytes);
          return;
        }
        for (index_type v = 0; v < n_; ++v) {
          table_[cells_[i]] = v;
          if (consistent()) {
            recurse(i + 1);
          }
        }
        table_[cells_[i]] = unset;
      }

      std::size_t                         n_;
      std::vector<index_type>             table_;
      std::vector<std::size_t>            cells_;
      std::set<std::vector<std::uint8_t>> found_;
    };

    std::filesystem::path cache_file(std::size_t n) {
      char const* dir = std::getenv("MTOPOS_CACHE_DIR");
      if (dir == nullptr || *dir == '\0') {
        return {};
      }
      return std::filesystem::path(dir) / ("monoids-" + std::to_string(n) + ".bin");
    }

    std::vector<Monoid> read_cache(std::filesystem::path const& path,
                                   std::size_t                  n) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        return {};
      }
      std::vector<char> data((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
      std::vector<Monoid> out;
      std::size_t const   record = 1 + n * n;
      if (data.size() % record != 0) {
        return {};
      }
      for (std::size_t pos = 0; pos < data.size(); pos += record) {
        if (static_cast<std::uint8_t>(data[pos]) != n) {
          return {};
        }
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (std::size_t c = 0; c < n * n; ++c) {
          rows[c / n][c % n] = static_cast<std::uint8_t>(data[pos + 1 + c]);
        }
        try {
          out.push_back(validate_monoid(rows, 0));
        } catch (MtoposError const&) {
          return {};
        }
      }
      return out;
    }

    void write_cache(std::filesystem::path const& path,
                     std::vector<Monoid> const&   monoids) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      for (auto const& m : monoids) {
        out.put(static_cast<char>(m.order()));
        for (auto v : m.table()) {
          out.put(static_cast<char>(v));
        }
      }
    }
  }  // namespace

  std::vector<Monoid> enumerate_monoids(std::size_t n, std::size_t cap) {
    if (n == 0) {
      throw MtoposError(error_code::range_error, "monoid order must be >= 1");
    }
    if (n > cap) {
      throw MtoposError(error_code::cap_exceeded,
                        "order " + std::to_string(n) + " exceeds cap "
                            + std::to_string(cap));
    }
    auto const path = cache_file(n);
    if (!path.empty()) {
      auto cached = read_cache(path, n);
      if (!cached.empty()) {
        return cached;
      }
    }
    std::vector<Monoid> out;
    for (auto const& bytes : MonoidSearch(n).run()) {
      std::vector<index_type> table(bytes.begin() + 1, bytes.end());
      out.push_back(Monoid::unchecked(n, std::move(table), 0));
    }
    if (!path.empty()) {
      write_cache(path, out);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // M-sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Transformation = std::vector<std::uint8_t>;

    // t then u, as right actions: x -> u(t(x)).
    Transformation then(Transformation const& t, Transformation const& u) {
      Transformation out(t.size());
      for (std::size_t x = 0; x < t.size(); ++x) {
        out[x] = u[t[x]];
      }
      return out;
    }

    std::vector<Transformation> all_transformations(std::size_t k) {
      std::vector<Transformation> out;
      Transformation              t(k, 0);
      while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == k - 1) {
          t[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++t[i - 1];
      }
    }

    // Lexicographically least representatives of the conjugacy classes
    // sigma t sigma^-1 in the full transformation monoid.
    std::vector<Transformation>
    conjugacy_representatives(std::vector<Transformation> const& all,
                              std::size_t                         k) {
      std::set<Transformation>    seen;
      std::vector<Transformation> reps;
      std::vector<std::uint8_t>   sigma(k);
      std::vector<std::uint8_t>   inverse(k);
      for (auto const& t : all) {
        if (seen.count(t) != 0) {
          continue;
        }
        reps.push_back(t);
        std::iota(sigma.begin(), sigma.end(), std::uint8_t(0));
        do {
          for (std::size_t x = 0; x < k; ++x) {
            inverse[sigma[x]] = static_cast<std::uint8_t>(x);
          }
          Transformation c(k);
          for (std::size_t x = 0; x < k; ++x) {
            c[x] = sigma[t[inverse[x]]];
          }
          seen.insert(std::move(c));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
      return reps;
    }

    // Index i and period p of g: the least i, p >= 1 with g^(i+p) = g^i.
    std::pair<std::size_t, std::size_t> index_period(Monoid const& m,
                                                     index_type    g) {
      std::vector<index_type> powers{g};
      while (true) {
        index_type next = m.mul(powers.back(), g);
        auto       it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          std::size_t i = static_cast<std::size_t>(it - powers.begin()) + 1;
          return {i, powers.size() + 1 - i};
        }
        powers.push_back(next);
      }
    }

    Transformation power_of(Transformation const& t, std::size_t e) {
      Transformation out(t.size());
      std::iota(out.begin(), out.end(), std::uint8_t(0));
      for (std::size_t i = 0; i < e; ++i) {
        out = then(out, t);
      }
      return out;
    }

    struct Step {
      bool       define;  // define rho(target), or check it
      index_type target;
      index_type parent;
      std::size_t generator;
    };

    // For each generator level, the steps that extend rho from the
    // submonoid generated by the earlier generators.
    std::vector<std::vector<Step>> plan_levels(Monoid const&     m,
                                               ElementSet const& gens) {
      std::vector<std::vector<Step>> levels(gens.size());
      std::vector<bool>              in(m.order(), false);
      std::vector<index_type>        members{m.identity()};
      in[m.identity()] = true;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::size_t const old_count = members.size();
        for (std::size_t q = 0; q < members.size(); ++q) {
          index_type const x = members[q];
          for (std::size_t g = 0; g <= j; ++g) {
            if (q < old_count && g < j) {
              continue;  // edge handled at an earlier level
            }
            index_type const y = m.mul(x, gens[g]);
            if (!in[y]) {
              in[y] = true;
              members.push_back(y);
              levels[j].push_back(Step{true, y, x, g});
            } else {
              levels[j].push_back(Step{false, y, x, g});
            }
          }
        }
      }
      return levels;
    }

    class MSetSearch {
     public:
      MSetSearch(Monoid const& m, std::size_t k)
          : m_(m),
            k_(k),
            gens_(monoid_generators(m)),
            levels_(plan_levels(m, gens_)),
            rho_(m.order()),
            chosen_(gens_.size()) {
        auto const all = all_transformations(k);
        for (std::size_t j = 0; j < gens_.size(); ++j) {
          auto const [i, p] = index_period(m, gens_[j]);
          auto const& pool  = j == 0 ? conjugacy_representatives(all, k) : all;
          for (auto const& t : pool) {
            if (power_of(t, i + p) == power_of(t, i)) {
              candidates_.resize(gens_.size());
              candidates_[j].push_back(t);
            }
          }
        }
        candidates_.resize(gens_.size());
        Transformation id(k);
        std::iota(id.begin(), id.end(), std::uint8_t(0));
        rho_[m.identity()] = id;
      }

      std::map<std::vector<std::uint8_t>, RightMSet> run() {
        recurse(0);
        return std::move(found_);
      }

     private:
      bool apply_level(std::size_t j) {
        for (auto const& s : levels_[j]) {
          auto const value = then(rho_[s.parent], chosen_[s.generator]);
          if (s.define) {
            rho_[s.target] = value;
          } else if (rho_[s.target] != value) {
            return false;
          }
        }
        return true;
      }

      void emit() {
        std::size_t const       n = m_.order();
        std::vector<index_type> action(k_ * n);
        for (index_type x = 0; x < k_; ++x) {
          for (index_type a = 0; a < n; ++a) {
            action[x * n + a] = rho_[a][x];
          }
        }
        auto x    = RightMSet::unchecked(m_, k_, std::move(action));
        auto form = canonical_form(x);
        if (found_.count(form.bytes) == 0) {
          found_.emplace(form.bytes, mset_from_form(m_, form));
        }
      }

      void recurse(std::size_t j) {
        if (j == gens_.size()) {
          emit();
          return;
        }
        for (auto const& t : candidates_[j]) {
          chosen_[j] = t;
          if (apply_level(j)) {
            recurse(j + 1);
          }
        }
      }

      Monoid const&                                  m_;
      std::size_t                                    k_;
      ElementSet                                     gens_;
      std::vector<std::vector<Step>>                 levels_;
      std::vector<std::vector<Transformation>>       candidates_;
      std::vector<Transformation>                    rho_;
      std::vector<Transformation>                    chosen_;
      std::map<std::vector<std::uint8_t>, RightMSet> found_;
    };
  }  // namespace

  std::vector<RightMSet>
  enumerate_msets(Monoid const& m, std::size_t k, std::size_t cap) {
    if (k > cap) {
      throw MtoposError(error_code::cap_exceeded,
                        "M-set size " + std::to_string(k) + " exceeds cap "
                            + std::to_string(cap));
    }
    if (k == 0) {
      return {empty_mset(m)};
    }
    std::vector<RightMSet> out;
    for (auto& [bytes, x] : MSetSearch(m, k).run()) {
      out.push_back(std::move(x));
    }
    return out;
  }

  std::vector<LeftMSet>
  enumerate_left_msets(Monoid const& m, std::size_t k, std::size_t cap) {
    std::vector<LeftMSet> out;
    for (auto& x : enumerate_msets(opposite(m), k, cap)) {
      out.push_back(LeftMSet::from_right(m, std::move(x)));
    }
    return out;
  }

}  // namespace mtopos
