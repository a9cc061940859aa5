// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/monoid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

namespace mtopos {

  ////////////////////////////////////////////////////////////////////////
  // common.hpp
  ////////////////////////////////////////////////////////////////////////

  char const* error_name(error_code code) noexcept {
    switch (code) {
      case error_code::assoc_violation:
        return "AssocViolation";
      case error_code::identity_violation:
        return "IdentityViolation";
      case error_code::range_error:
        return "RangeError";
      case error_code::empty_seed:
        return "EmptySeed";
      case error_code::monoid_mismatch:
        return "MonoidMismatch";
      case error_code::endpoint_mismatch:
        return "EndpointMismatch";
      case error_code::not_sub_mset:
        return "NotSubMSet";
      case error_code::not_equivariant:
        return "NotEquivariant";
      case error_code::shape_mismatch:
        return "ShapeMismatch";
      case error_code::cap_exceeded:
        return "CapExceeded";
      case error_code::bound_too_small:
        return "BoundTooSmall";
      case error_code::index_error:
        return "IndexError";
      case error_code::parse_error:
        return "ParseError";
      case error_code::io_error:
        return "IoError";
    }
    return "UnknownError";
  }

  namespace {
    std::string format_error(error_code code, std::string const& detail) {
      std::string out = error_name(code);
      if (!detail.empty()) {
        out += ' ';
        out += detail;
      }
      return out;
    }
  }  // namespace

  MtoposError::MtoposError(error_code code, std::string const& detail)
      : std::runtime_error(format_error(code, detail)), code_(code) {}

  Partition Partition::discrete(std::size_t n) {
    Partition p;
    p.class_of.resize(n);
    std::iota(p.class_of.begin(), p.class_of.end(), index_type(0));
    p.count = n;
    return p;
  }

  Partition Partition::from_labels(std::vector<index_type> const& labels) {
    Partition               p;
    std::vector<index_type> renumber;
    p.class_of.reserve(labels.size());
    index_type const unset = static_cast<index_type>(-1);
    for (auto label : labels) {
      if (label >= renumber.size()) {
        renumber.resize(label + 1, unset);
      }
      if (renumber[label] == unset) {
        renumber[label] = static_cast<index_type>(p.count++);
      }
      p.class_of.push_back(renumber[label]);
    }
    return p;
  }

  std::vector<ElementSet> Partition::classes() const {
    std::vector<ElementSet> out(count);
    for (index_type x = 0; x < class_of.size(); ++x) {
      out[class_of[x]].push_back(x);
    }
    return out;
  }

  namespace detail {
    UnionFind::UnionFind(std::size_t n) : parent_(n) {
      std::iota(parent_.begin(), parent_.end(), index_type(0));
    }

    index_type UnionFind::find(index_type x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    bool UnionFind::unite(index_type x, index_type y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      // keep the smaller index as root so results do not depend on order
      if (y < x) {
        std::swap(x, y);
      }
      parent_[y] = x;
      return true;
    }

    Partition UnionFind::partition() {
      std::vector<index_type> labels(parent_.size());
      for (index_type x = 0; x < parent_.size(); ++x) {
        labels[x] = find(x);
      }
      return Partition::from_labels(labels);
    }

    int popcount(std::uint64_t mask) noexcept {
      return std::popcount(mask);
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Monoid
  ////////////////////////////////////////////////////////////////////////

  Monoid Monoid::unchecked(std::size_t             order,
                           std::vector<index_type> table,
                           index_type              identity) {
    return Monoid(
        order,
        std::make_shared<std::vector<index_type> const>(std::move(table)),
        identity);
  }

  std::vector<std::vector<index_type>> Monoid::rows() const {
    std::vector<std::vector<index_type>> out(order_);
    for (index_type a = 0; a < order_; ++a) {
      out[a].assign(table_->begin() + a * order_,
                    table_->begin() + (a + 1) * order_);
    }
    return out;
  }

  bool Monoid::operator==(Monoid const& that) const noexcept {
    return order_ == that.order_ && identity_ == that.identity_
           && (table_ == that.table_ || *table_ == *that.table_);
  }

  Monoid validate_monoid(std::vector<std::vector<std::int64_t>> const& rows,
                         std::int64_t identity) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw MtoposError(error_code::range_error, "empty table");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n) {
        std::ostringstream os;
        os << "row " << a << " has " << rows[a].size() << " entries, expected "
           << n;
        throw MtoposError(error_code::range_error, os.str());
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (rows[a][b] < 0 || static_cast<std::size_t>(rows[a][b]) >= n) {
          std::ostringstream os;
          os << "entry a=" << a << " b=" << b << " is " << rows[a][b]
             << ", expected 0.." << n - 1;
          throw MtoposError(error_code::range_error, os.str());
        }
      }
    }
    if (identity < 0 || static_cast<std::size_t>(identity) >= n) {
      std::ostringstream os;
      os << "identity " << identity << " out of range 0.." << n - 1;
      throw MtoposError(error_code::range_error, os.str());
    }
    std::vector<index_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<index_type>(rows[a][b]);
      }
    }
    auto const e = static_cast<index_type>(identity);
    for (index_type a = 0; a < n; ++a) {
      if (table[e * n + a] != a || table[a * n + e] != a) {
        throw MtoposError(error_code::identity_violation,
                          "a=" + std::to_string(a));
      }
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        index_type const ab = table[a * n + b];
        for (index_type c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            std::ostringstream os;
            os << "a=" << a << " b=" << b << " c=" << c;
            throw MtoposError(error_code::assoc_violation, os.str());
          }
        }
      }
    }
    return Monoid::unchecked(n, std::move(table), e);
  }

  ElementClasses element_classes(Monoid const& m) {
    ElementClasses out;
    index_type     n = m.order();
    for (index_type x = 0; x < n; ++x) {
      if (m.mul(x, x) == x) {
        out.idempotents.push_back(x);
      }
      bool right = true, left = true;
      for (index_type y = 0; y < n; ++y) {
        right = right && m.mul(x, y) == x;
        left  = left && m.mul(y, x) == x;
      }
      if (right) {
        out.right_absorbing.push_back(x);
      }
      if (left) {
        out.left_absorbing.push_back(x);
      }
      if (right && left) {
        out.zero = x;
      }
    }
    return out;
  }

  Monoid opposite(Monoid const& m) {
    std::size_t const       n = m.order();
    std::vector<index_type> table(n * n);
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        table[a * n + b] = m.mul(b, a);
      }
    }
    return Monoid::unchecked(n, std::move(table), m.identity());
  }

  Monoid direct_product(Monoid const& m, Monoid const& n) {
    std::size_t const       p = m.order() * n.order();
    std::size_t const       w = n.order();
    std::vector<index_type> table(p * p);
    for (index_type x = 0; x < p; ++x) {
      for (index_type y = 0; y < p; ++y) {
        table[x * p + y] = static_cast<index_type>(
            m.mul(x / w, y / w) * w + n.mul(x % w, y % w));
      }
    }
    return Monoid::unchecked(
        p,
        std::move(table),
        static_cast<index_type>(m.identity() * w + n.identity()));
  }

  bool is_commutative(Monoid const& m) {
    for (index_type a = 0; a < m.order(); ++a) {
      for (index_type b = a + 1; b < m.order(); ++b) {
        if (m.mul(a, b) != m.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group(Monoid const& m) {
    // finite monoid: every element has a right inverse iff it is a group
    for (index_type a = 0; a < m.order(); ++a) {
      bool found = false;
      for (index_type b = 0; b < m.order() && !found; ++b) {
        found = m.mul(a, b) == m.identity() && m.mul(b, a) == m.identity();
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ElementSet principal_right_ideal(Monoid const& m, index_type x) {
    std::vector<bool> in(m.order(), false);
    for (index_type y = 0; y < m.order(); ++y) {
      in[m.mul(x, y)] = true;
    }
    ElementSet out;
    for (index_type y = 0; y < m.order(); ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool is_right_ore(Monoid const& m) {
    index_type const n = m.order();
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = a + 1; b < n; ++b) {
        std::vector<bool> in_a(n, false);
        for (index_type y = 0; y < n; ++y) {
          in_a[m.mul(a, y)] = true;
        }
        bool meet = false;
        for (index_type y = 0; y < n && !meet; ++y) {
          meet = in_a[m.mul(b, y)];
        }
        if (!meet) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_ore(Monoid const& m) {
    return is_right_ore(opposite(m));
  }

  bool is_right_collapsible(Monoid const& m) {
    index_type const n = m.order();
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = a + 1; b < n; ++b) {
        bool found = false;
        for (index_type x = 0; x < n && !found; ++x) {
          found = m.mul(a, x) == m.mul(b, x);
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_cancellative(Monoid const& m) {
    index_type const n = m.order();
    for (index_type x = 0; x < n; ++x) {
      std::vector<bool> seen(n, false);
      for (index_type a = 0; a < n; ++a) {
        if (seen[m.mul(x, a)]) {
          return false;
        }
        seen[m.mul(x, a)] = true;
      }
    }
    return true;
  }

  bool is_right_cancellative(Monoid const& m) {
    return is_left_cancellative(opposite(m));
  }

  namespace {
    void require_seed(Monoid const& m, ElementSet const& seed) {
      if (seed.empty()) {
        throw MtoposError(error_code::empty_seed, "seed set is empty");
      }
      for (auto x : seed) {
        if (x >= m.order()) {
          throw MtoposError(error_code::index_error,
                            "element " + std::to_string(x) + " out of range");
        }
      }
    }

    std::vector<bool> closure_mask(Monoid const& m, std::vector<bool> in) {
      std::deque<index_type> todo;
      ElementSet             members;
      for (index_type x = 0; x < m.order(); ++x) {
        if (in[x]) {
          members.push_back(x);
          todo.push_back(x);
        }
      }
      // right multiplication by members reaches every product of members
      while (!todo.empty()) {
        index_type x = todo.front();
        todo.pop_front();
        for (std::size_t i = 0; i < members.size(); ++i) {
          index_type y = m.mul(x, members[i]);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
            todo.push_back(y);
          }
        }
      }
      return in;
    }

    ElementSet to_set(std::vector<bool> const& in) {
      ElementSet out;
      for (index_type x = 0; x < in.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<bool> to_mask(Monoid const& m, ElementSet const& s) {
      std::vector<bool> in(m.order(), false);
      for (auto x : s) {
        in[x] = true;
      }
      return in;
    }
  }  // namespace

  ElementSet submonoid_closure(Monoid const& m, ElementSet const& seed) {
    require_seed(m, seed);
    auto in           = to_mask(m, seed);
    in[m.identity()] = true;
    return to_set(closure_mask(m, std::move(in)));
  }

  ElementSet right_factorable_closure(Monoid const& m, ElementSet const& seed) {
    require_seed(m, seed);
    std::vector<bool> current = to_mask(m, seed);
    while (true) {
      std::vector<bool> gen = current;
      gen[m.identity()]     = true;
      gen                   = closure_mask(m, std::move(gen));
      std::vector<bool> next(m.order(), false);
      for (index_type t = 0; t < m.order(); ++t) {
        if (!gen[t]) {
          continue;
        }
        for (index_type x = 0; x < m.order(); ++x) {
          if (gen[m.mul(t, x)]) {
            next[x] = true;
          }
        }
      }
      if (next == current) {
        return to_set(current);
      }
      current = std::move(next);
    }
  }

  bool is_right_factorable(Monoid const& m, ElementSet const& s) {
    auto in = to_mask(m, s);
    for (auto x : s) {
      for (index_type y = 0; y < m.order(); ++y) {
        if (in[m.mul(x, y)] && !in[y]) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet RightCongruence::class_members(index_type x) const {
    ElementSet out;
    for (index_type y = 0; y < partition.size(); ++y) {
      if (partition.class_of[y] == partition.class_of[x]) {
        out.push_back(y);
      }
    }
    return out;
  }

  RightCongruence congruence_from_pairs(
      Monoid const&                                         m,
      std::vector<std::pair<index_type, index_type>> const& pairs) {
    detail::UnionFind                              uf(m.order());
    std::deque<std::pair<index_type, index_type>> todo(pairs.begin(),
                                                        pairs.end());
    while (!todo.empty()) {
      auto [x, y] = todo.front();
      todo.pop_front();
      if (uf.unite(x, y)) {
        for (index_type z = 0; z < m.order(); ++z) {
          todo.emplace_back(m.mul(x, z), m.mul(y, z));
        }
      }
    }
    return RightCongruence{uf.partition()};
  }

  ElementSet minimal_rf_generating_set(Monoid const& m) {
    std::size_t const n = m.order();
    for (std::size_t size = 1; size <= n; ++size) {
      // combinations of {0..n-1} of this size in lexicographic order
      ElementSet combo(size);
      std::iota(combo.begin(), combo.end(), index_type(0));
      while (true) {
        if (right_factorable_closure(m, combo).size() == n) {
          return combo;
        }
        std::size_t i = size;
        while (i > 0 && combo[i - 1] == n - size + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++combo[i - 1];
        for (std::size_t j = i; j < size; ++j) {
          combo[j] = combo[j - 1] + 1;
        }
      }
    }
    // unreachable: the whole monoid generates itself
    return {};
  }

  ElementSet monoid_generators(Monoid const& m) {
    ElementSet        gens;
    std::vector<bool> in(m.order(), false);
    in[m.identity()] = true;
    for (index_type x = 0; x < m.order(); ++x) {
      if (!in[x]) {
        gens.push_back(x);
        auto next         = to_mask(m, gens);
        next[m.identity()] = true;
        in                = closure_mask(m, std::move(next));
      }
    }
    return gens;
  }

}  // namespace mtopos
