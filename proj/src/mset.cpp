// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/mset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace mtopos {

  namespace {
    void require_same_monoid(Monoid const& a, Monoid const& b) {
      if (!(a == b)) {
        throw MtoposError(error_code::monoid_mismatch,
                          "operands are over different monoids");
      }
    }

    std::vector<index_type>
    flatten(std::vector<std::vector<std::int64_t>> const& rows,
            std::size_t                                   width,
            std::size_t                                   bound,
            char const*                                   what) {
      std::vector<index_type> out;
      out.reserve(rows.size() * width);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
          std::ostringstream os;
          os << what << " row " << r << " has " << rows[r].size()
             << " entries, expected " << width;
          throw MtoposError(error_code::range_error, os.str());
        }
        for (std::size_t c = 0; c < width; ++c) {
          if (rows[r][c] < 0 || static_cast<std::size_t>(rows[r][c]) >= bound) {
            std::ostringstream os;
            os << what << " entry (" << r << ", " << c << ") is " << rows[r][c]
               << ", expected 0.." << static_cast<std::int64_t>(bound) - 1;
            throw MtoposError(error_code::range_error, os.str());
          }
          out.push_back(static_cast<index_type>(rows[r][c]));
        }
      }
      return out;
    }

    void check_action_laws(RightMSet const& x) {
      Monoid const& m = x.monoid();
      for (index_type a = 0; a < x.size(); ++a) {
        if (x.act(a, m.identity()) != a) {
          throw MtoposError(error_code::identity_violation,
                            "x=" + std::to_string(a));
        }
      }
      for (index_type a = 0; a < x.size(); ++a) {
        for (index_type s = 0; s < m.order(); ++s) {
          for (index_type t = 0; t < m.order(); ++t) {
            if (x.act(x.act(a, s), t) != x.act(a, m.mul(s, t))) {
              std::ostringstream os;
              os << "x=" << a << " m=" << s << " n=" << t;
              throw MtoposError(error_code::assoc_violation, os.str());
            }
          }
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RightMSet, LeftMSet, BiSet
  ////////////////////////////////////////////////////////////////////////

  RightMSet::RightMSet(Monoid                                        monoid,
                       std::vector<std::vector<std::int64_t>> const& rows)
      : monoid_(std::move(monoid)), size_(rows.size()) {
    action_ = std::make_shared<std::vector<index_type> const>(
        flatten(rows, monoid_.order(), rows.size(), "action"));
    check_action_laws(*this);
  }

  RightMSet RightMSet::unchecked(Monoid                  monoid,
                                 std::size_t             size,
                                 std::vector<index_type> action) {
    return RightMSet(
        std::move(monoid),
        size,
        std::make_shared<std::vector<index_type> const>(std::move(action)));
  }

  std::vector<std::vector<index_type>> RightMSet::rows() const {
    std::vector<std::vector<index_type>> out(size_);
    std::size_t const                    n = monoid_.order();
    for (std::size_t x = 0; x < size_; ++x) {
      out[x].assign(action_->begin() + x * n, action_->begin() + (x + 1) * n);
    }
    return out;
  }

  RightMSet RightMSet::with_label(std::string label) const {
    RightMSet copy = *this;
    copy.label_    = std::move(label);
    return copy;
  }

  bool RightMSet::operator==(RightMSet const& that) const noexcept {
    return size_ == that.size_ && monoid_ == that.monoid_
           && (action_ == that.action_ || *action_ == *that.action_);
  }

  LeftMSet::LeftMSet(Monoid                                        monoid,
                     std::vector<std::vector<std::int64_t>> const& rows)
      : monoid_(std::move(monoid)), right_(empty_mset(opposite(monoid_))) {
    std::size_t const n = monoid_.order();
    if (rows.size() != n) {
      throw MtoposError(error_code::range_error,
                        "left action needs " + std::to_string(n) + " rows, got "
                            + std::to_string(rows.size()));
    }
    std::size_t const k = n == 0 ? 0 : rows[0].size();
    auto              flat = flatten(rows, k, k, "left action");
    // transpose the n x k table into the k x n right action over M^op
    std::vector<std::vector<std::int64_t>> transposed(
        k, std::vector<std::int64_t>(n));
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t x = 0; x < k; ++x) {
        transposed[x][m] = flat[m * k + x];
      }
    }
    right_ = RightMSet(opposite(monoid_), transposed);
  }

  LeftMSet LeftMSet::from_right(Monoid monoid, RightMSet over_opposite) {
    return LeftMSet(std::move(monoid), std::move(over_opposite));
  }

  BiSet::BiSet(LeftMSet left, RightMSet right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (left_.size() != right_.size()) {
      throw MtoposError(error_code::shape_mismatch,
                        "left and right carriers differ in size");
    }
    for (index_type b = 0; b < size(); ++b) {
      for (index_type m = 0; m < left_monoid().order(); ++m) {
        for (index_type n = 0; n < right_monoid().order(); ++n) {
          if (right_.act(left_.act(m, b), n) != left_.act(m, right_.act(b, n))) {
            std::ostringstream os;
            os << "biset actions do not commute at m=" << m << " b=" << b
               << " n=" << n;
            throw MtoposError(error_code::assoc_violation, os.str());
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // MSetMorphism
  ////////////////////////////////////////////////////////////////////////

  MSetMorphism::MSetMorphism(RightMSet source, RightMSet target, Map map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {
    require_same_monoid(source_.monoid(), target_.monoid());
    if (map_.size() != source_.size()) {
      throw MtoposError(error_code::shape_mismatch,
                        "map has " + std::to_string(map_.size())
                            + " entries, source has "
                            + std::to_string(source_.size()));
    }
    for (index_type x = 0; x < map_.size(); ++x) {
      if (map_[x] >= target_.size()) {
        throw MtoposError(error_code::range_error,
                          "map(" + std::to_string(x) + ") out of range");
      }
    }
    for (index_type x = 0; x < map_.size(); ++x) {
      for (index_type m = 0; m < source_.monoid().order(); ++m) {
        if (map_[source_.act(x, m)] != target_.act(map_[x], m)) {
          std::ostringstream os;
          os << "x=" << x << " m=" << m;
          throw MtoposError(error_code::not_equivariant, os.str());
        }
      }
    }
  }

  MSetMorphism::MSetMorphism(RightMSet source,
                             RightMSet target,
                             Map       map,
                             no_check)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  MSetMorphism
  MSetMorphism::unchecked(RightMSet source, RightMSet target, Map map) {
    return MSetMorphism(
        std::move(source), std::move(target), std::move(map), no_check{});
  }

  bool MSetMorphism::is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (auto y : map_) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool MSetMorphism::is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    for (auto y : map_) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  MSetMorphism compose(MSetMorphism const& g, MSetMorphism const& f) {
    if (!(f.target() == g.source())) {
      throw MtoposError(error_code::endpoint_mismatch,
                        "cannot compose: target of f is not source of g");
    }
    Map out(f.map().size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = g(f(x));
    }
    return MSetMorphism::unchecked(f.source(), g.target(), std::move(out));
  }

  MSetMorphism identity_morphism(RightMSet const& x) {
    Map out(x.size());
    std::iota(out.begin(), out.end(), index_type(0));
    return MSetMorphism::unchecked(x, x, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard objects
  ////////////////////////////////////////////////////////////////////////

  RightMSet regular(Monoid const& m) {
    auto table = std::vector<index_type>(m.table().begin(), m.table().end());
    return RightMSet::unchecked(m, m.order(), std::move(table))
        .with_label("M");
  }

  RightMSet terminal(Monoid const& m) {
    return trivial_action(m, 1).with_label("1");
  }

  RightMSet empty_mset(Monoid const& m) {
    return RightMSet::unchecked(m, 0, {}).with_label("0");
  }

  RightMSet trivial_action(Monoid const& m, std::size_t k) {
    std::vector<index_type> action(k * m.order());
    for (std::size_t x = 0; x < k; ++x) {
      std::fill_n(action.begin() + x * m.order(),
                  m.order(),
                  static_cast<index_type>(x));
    }
    return RightMSet::unchecked(m, k, std::move(action))
        .with_label("Delta(" + std::to_string(k) + ")");
  }

  LeftMSet left_regular(Monoid const& m) {
    return LeftMSet::from_right(m, regular(opposite(m)));
  }

  LeftMSet left_terminal(Monoid const& m) {
    return LeftMSet::from_right(m, terminal(opposite(m)));
  }

  MSetMorphism left_multiplication(Monoid const& m, index_type element) {
    Map map(m.order());
    for (index_type x = 0; x < m.order(); ++x) {
      map[x] = m.mul(element, x);
    }
    auto reg = regular(m);
    return MSetMorphism::unchecked(reg, reg, std::move(map));
  }

  MSetMorphism to_terminal(RightMSet const& x) {
    return MSetMorphism::unchecked(
        x, terminal(x.monoid()), Map(x.size(), 0));
  }

  ////////////////////////////////////////////////////////////////////////
  // Gamma, C
  ////////////////////////////////////////////////////////////////////////

  ElementSet fixed_points(RightMSet const& x) {
    ElementSet out;
    for (index_type a = 0; a < x.size(); ++a) {
      bool fixed = true;
      for (index_type m = 0; m < x.monoid().order() && fixed; ++m) {
        fixed = x.act(a, m) == a;
      }
      if (fixed) {
        out.push_back(a);
      }
    }
    return out;
  }

  ElementSet fixed_points(LeftMSet const& x) {
    return fixed_points(x.as_right());
  }

  Partition connected_components(RightMSet const& x) {
    detail::UnionFind uf(x.size());
    for (index_type a = 0; a < x.size(); ++a) {
      for (index_type m = 0; m < x.monoid().order(); ++m) {
        uf.unite(a, x.act(a, m));
      }
    }
    return uf.partition();
  }

  Partition connected_components(LeftMSet const& x) {
    return connected_components(x.as_right());
  }

  bool is_indecomposable(RightMSet const& x) {
    return connected_components(x).count == 1;
  }

  bool is_indecomposable(LeftMSet const& x) {
    return is_indecomposable(x.as_right());
  }

  ElementSet orbit(RightMSet const& x, index_type element) {
    std::vector<bool> in(x.size(), false);
    for (index_type m = 0; m < x.monoid().order(); ++m) {
      in[x.act(element, m)] = true;
    }
    ElementSet out;
    for (index_type a = 0; a < x.size(); ++a) {
      if (in[a]) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<std::size_t>
  scheme_distance(RightMSet const& x, index_type a, index_type b) {
    if (a >= x.size() || b >= x.size()) {
      throw MtoposError(error_code::index_error,
                        "element out of range 0.."
                            + std::to_string(static_cast<std::int64_t>(x.size())
                                             - 1));
    }
    if (a == b) {
      return 0;
    }
    // one step joins any two elements of a common cyclic sub-M-set c M
    std::vector<ElementSet> orbits(x.size());
    std::vector<std::vector<index_type>> containing(x.size());
    for (index_type c = 0; c < x.size(); ++c) {
      orbits[c] = orbit(x, c);
      for (auto y : orbits[c]) {
        containing[y].push_back(c);
      }
    }
    std::vector<std::size_t> dist(x.size(), SIZE_MAX);
    std::deque<index_type>   todo{a};
    dist[a] = 0;
    while (!todo.empty()) {
      index_type u = todo.front();
      todo.pop_front();
      for (auto c : containing[u]) {
        for (auto v : orbits[c]) {
          if (dist[v] == SIZE_MAX) {
            dist[v] = dist[u] + 1;
            if (v == b) {
              return dist[v];
            }
            todo.push_back(v);
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Limits and colimits
  ////////////////////////////////////////////////////////////////////////

  Coproduct coproduct(RightMSet const& x, RightMSet const& y) {
    require_same_monoid(x.monoid(), y.monoid());
    std::size_t const       n = x.monoid().order();
    std::vector<index_type> action(x.action().begin(), x.action().end());
    for (index_type b = 0; b < y.size(); ++b) {
      for (index_type m = 0; m < n; ++m) {
        action.push_back(static_cast<index_type>(x.size() + y.act(b, m)));
      }
    }
    auto obj = RightMSet::unchecked(
        x.monoid(), x.size() + y.size(), std::move(action));
    if (!x.label().empty() && !y.label().empty()) {
      obj = obj.with_label(x.label() + " + " + y.label());
    }
    Map left(x.size()), right(y.size());
    std::iota(left.begin(), left.end(), index_type(0));
    std::iota(right.begin(), right.end(), static_cast<index_type>(x.size()));
    return Coproduct{obj,
                     MSetMorphism::unchecked(x, obj, std::move(left)),
                     MSetMorphism::unchecked(y, obj, std::move(right))};
  }

  LeftMSet coproduct(LeftMSet const& x, LeftMSet const& y) {
    require_same_monoid(x.monoid(), y.monoid());
    return LeftMSet::from_right(
        x.monoid(), coproduct(x.as_right(), y.as_right()).object);
  }

  Product product(RightMSet const& x, RightMSet const& y) {
    require_same_monoid(x.monoid(), y.monoid());
    std::size_t const       n  = x.monoid().order();
    std::size_t const       ny = y.size();
    std::size_t const       k  = x.size() * ny;
    std::vector<index_type> action(k * n);
    for (index_type a = 0; a < x.size(); ++a) {
      for (index_type b = 0; b < ny; ++b) {
        for (index_type m = 0; m < n; ++m) {
          action[(a * ny + b) * n + m]
              = static_cast<index_type>(x.act(a, m) * ny + y.act(b, m));
        }
      }
    }
    auto obj = RightMSet::unchecked(x.monoid(), k, std::move(action));
    if (!x.label().empty() && !y.label().empty()) {
      obj = obj.with_label(x.label() + " x " + y.label());
    }
    Map first(k), second(k);
    for (index_type p = 0; p < k; ++p) {
      first[p]  = static_cast<index_type>(p / ny);
      second[p] = static_cast<index_type>(p % ny);
    }
    return Product{obj,
                   MSetMorphism::unchecked(obj, x, std::move(first)),
                   MSetMorphism::unchecked(obj, y, std::move(second))};
  }

  RightMSet power(RightMSet const& x, std::size_t k, std::size_t cap) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= x.size();
      if (total > cap) {
        throw MtoposError(error_code::cap_exceeded,
                          "power carrier exceeds cap " + std::to_string(cap));
      }
    }
    std::size_t const       n = x.monoid().order();
    std::size_t const       s = x.size();
    std::vector<index_type> action(total * n);
    std::vector<index_type> digits(k);
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t c = t;
      for (std::size_t i = k; i-- > 0;) {
        digits[i] = static_cast<index_type>(c % s);
        c /= s;
      }
      for (index_type m = 0; m < n; ++m) {
        std::size_t v = 0;
        for (std::size_t i = 0; i < k; ++i) {
          v = v * s + x.act(digits[i], m);
        }
        action[t * n + m] = static_cast<index_type>(v);
      }
    }
    auto obj = RightMSet::unchecked(x.monoid(), total, std::move(action));
    return obj.with_label(x.label() + "^" + std::to_string(k));
  }

  bool is_sub_mset(RightMSet const& x, ElementSet const& elements) {
    std::vector<bool> in(x.size(), false);
    for (auto a : elements) {
      if (a >= x.size()) {
        return false;
      }
      in[a] = true;
    }
    for (auto a : elements) {
      for (index_type m = 0; m < x.monoid().order(); ++m) {
        if (!in[x.act(a, m)]) {
          return false;
        }
      }
    }
    return true;
  }

  SubMSet sub_mset(RightMSet const& x, ElementSet const& elements) {
    std::vector<index_type> position(x.size(), static_cast<index_type>(-1));
    ElementSet              sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (index_type i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= x.size()) {
        throw MtoposError(error_code::index_error,
                          "element " + std::to_string(sorted[i])
                              + " out of range");
      }
      position[sorted[i]] = i;
    }
    std::size_t const       n = x.monoid().order();
    std::vector<index_type> action(sorted.size() * n);
    for (index_type i = 0; i < sorted.size(); ++i) {
      for (index_type m = 0; m < n; ++m) {
        index_type y = x.act(sorted[i], m);
        if (position[y] == static_cast<index_type>(-1)) {
          std::ostringstream os;
          os << "x=" << sorted[i] << " m=" << m << " leaves the subset";
          throw MtoposError(error_code::not_sub_mset, os.str());
        }
        action[i * n + m] = position[y];
      }
    }
    auto obj = RightMSet::unchecked(x.monoid(), sorted.size(), std::move(action));
    return SubMSet{obj, MSetMorphism::unchecked(obj, x, sorted)};
  }

  std::vector<std::uint64_t> sub_msets(RightMSet const& x) {
    if (x.size() > 64) {
      throw MtoposError(error_code::cap_exceeded,
                        "sub-M-set enumeration needs at most 64 elements");
    }
    // every sub-M-set is a union of cyclic ones
    std::vector<std::uint64_t> cyclic;
    for (index_type a = 0; a < x.size(); ++a) {
      std::uint64_t mask = 0;
      for (index_type m = 0; m < x.monoid().order(); ++m) {
        mask |= std::uint64_t(1) << x.act(a, m);
      }
      cyclic.push_back(mask);
    }
    std::set<std::uint64_t>    seen{0};
    std::vector<std::uint64_t> todo{0};
    while (!todo.empty()) {
      std::uint64_t s = todo.back();
      todo.pop_back();
      for (auto c : cyclic) {
        std::uint64_t t = s | c;
        if (seen.insert(t).second) {
          todo.push_back(t);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  ElementSet mask_elements(std::uint64_t mask) {
    ElementSet out;
    while (mask != 0) {
      out.push_back(static_cast<index_type>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
    return out;
  }

  ElementSet image(MSetMorphism const& f) {
    ElementSet out(f.map().begin(), f.map().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  SubMSet equalizer(MSetMorphism const& f, MSetMorphism const& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) {
      throw MtoposError(error_code::endpoint_mismatch,
                        "equalizer needs parallel morphisms");
    }
    ElementSet agree;
    for (index_type x = 0; x < f.source().size(); ++x) {
      if (f(x) == g(x)) {
        agree.push_back(x);
      }
    }
    return sub_mset(f.source(), agree);
  }

  Pullback pullback(MSetMorphism const& f, MSetMorphism const& g) {
    if (!(f.target() == g.target())) {
      throw MtoposError(error_code::endpoint_mismatch,
                        "pullback needs a cospan");
    }
    auto       prod = product(f.source(), g.source());
    auto const ny   = g.source().size();
    ElementSet agree;
    for (index_type p = 0; p < prod.object.size(); ++p) {
      if (f(p / ny) == g(p % ny)) {
        agree.push_back(p);
      }
    }
    auto sub = sub_mset(prod.object, agree);
    return Pullback{sub.object,
                    compose(prod.first, sub.inclusion),
                    compose(prod.second, sub.inclusion)};
  }

  Partition close_partition(RightMSet const& x, Partition const& classes) {
    detail::UnionFind uf(x.size());
    std::deque<std::pair<index_type, index_type>> todo;
    std::vector<index_type> first(classes.count, static_cast<index_type>(-1));
    for (index_type a = 0; a < x.size(); ++a) {
      auto c = classes.class_of[a];
      if (first[c] == static_cast<index_type>(-1)) {
        first[c] = a;
      } else {
        todo.emplace_back(first[c], a);
      }
    }
    while (!todo.empty()) {
      auto [a, b] = todo.front();
      todo.pop_front();
      if (uf.unite(a, b)) {
        for (index_type m = 0; m < x.monoid().order(); ++m) {
          todo.emplace_back(x.act(a, m), x.act(b, m));
        }
      }
    }
    return uf.partition();
  }

  Quotient quotient(RightMSet const& x, Partition const& classes) {
    if (classes.size() != x.size()) {
      throw MtoposError(error_code::shape_mismatch,
                        "partition and carrier differ in size");
    }
    Partition const         closed = close_partition(x, classes);
    std::size_t const       n      = x.monoid().order();
    std::vector<index_type> action(closed.count * n);
    for (index_type a = 0; a < x.size(); ++a) {
      for (index_type m = 0; m < n; ++m) {
        action[closed.class_of[a] * n + m] = closed.class_of[x.act(a, m)];
      }
    }
    auto obj = RightMSet::unchecked(x.monoid(), closed.count, std::move(action));
    return Quotient{obj, MSetMorphism::unchecked(x, obj, closed.class_of)};
  }

  std::vector<Partition> congruences(RightMSet const& x) {
    std::vector<Partition>  out;
    std::size_t const       k = x.size();
    std::vector<index_type> labels(k, 0);
    // restricted growth strings: labels[i] <= 1 + max(labels[0..i-1])
    auto recurse = [&](auto&& self, std::size_t i, index_type top) -> void {
      if (i == k) {
        auto p = Partition::from_labels(labels);
        if (close_partition(x, p) == p) {
          out.push_back(std::move(p));
        }
        return;
      }
      for (index_type v = 0; v <= top; ++v) {
        labels[i] = v;
        self(self, i + 1, std::max<index_type>(top, v + 1));
      }
    };
    if (k == 0) {
      out.push_back(Partition{});
      return out;
    }
    labels[0] = 0;
    recurse(recurse, 1, 1);
    return out;
  }

  std::vector<SubMSet> decompose(RightMSet const& x) {
    std::vector<SubMSet> out;
    for (auto const& cls : connected_components(x).classes()) {
      out.push_back(sub_mset(x, cls));
    }
    return out;
  }

  RightMSet principal_mset(Monoid const& m, index_type e) {
    return sub_mset(regular(m), principal_right_ideal(m, e))
        .object.with_label(std::to_string(e) + "M");
  }

  bool is_projective(RightMSet const& x) {
    Monoid const&          m = x.monoid();
    std::vector<RightMSet> principals;
    for (auto e : element_classes(m).idempotents) {
      principals.push_back(principal_mset(m, e));
    }
    for (auto const& part : decompose(x)) {
      bool found = false;
      for (auto const& p : principals) {
        if (are_isomorphic(part.object, p)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Quotient ore_witness_quotient(Monoid const& m, index_type m1, index_type m2) {
    std::vector<std::pair<index_type, index_type>> pairs;
    for (auto s : {m1, m2}) {
      for (index_type n = 0; n < m.order(); ++n) {
        pairs.emplace_back(s, m.mul(s, n));
      }
    }
    auto cong = congruence_from_pairs(m, pairs);
    auto q    = quotient(regular(m), cong.partition);
    q.object  = q.object.with_label("M/~(" + std::to_string(m1) + ","
                                   + std::to_string(m2) + ")");
    q.projection
        = MSetMorphism::unchecked(regular(m), q.object, q.projection.map());
    return q;
  }

}  // namespace mtopos
