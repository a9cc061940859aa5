#include <catch2/catch_amalgamated.hpp>

#include "mtopos/catalog.hpp"
#include "mtopos/enumerate.hpp"
#include "mtopos/monoid.hpp"

using namespace mtopos;

namespace {
  std::vector<Monoid> small_monoids(std::size_t max_order) {
    std::vector<Monoid> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ms = enumerate_monoids(n);
      out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
  }

  std::string message_of(std::vector<std::vector<std::int64_t>> const& rows,
                         std::int64_t                                  identity) {
    try {
      validate_monoid(rows, identity);
    } catch (MtoposError const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST_CASE("validate_monoid accepts C2 and reports the first violation",
          "[monoid]") {
  auto const c2 = validate_monoid({{0, 1}, {1, 0}}, 0);
  REQUIRE(c2.order() == 2);
  REQUIRE(c2.mul(1, 1) == 0);
  REQUIRE(c2 == catalog::cyclic_group(2));

  REQUIRE(message_of({{0, 1, 2}, {1, 0, 2}, {2, 0, 0}}, 0)
          == "AssocViolation a=1 b=2 c=1");
  REQUIRE(message_of({{0, 1}, {1, 2}}, 0).rfind("RangeError", 0) == 0);
  REQUIRE(message_of({{0, 1}, {1, 0}}, 1).rfind("IdentityViolation", 0) == 0);
  REQUIRE(message_of({{0, 1}, {1, 0}}, 5).rfind("RangeError", 0) == 0);
  REQUIRE(message_of({{0, 1}, {1}}, 0).rfind("RangeError", 0) == 0);
  REQUIRE_THROWS_AS(validate_monoid({}, 0), MtoposError);
}

TEST_CASE("the catalog monoids are valid and have the expected elements",
          "[monoid]") {
  for (auto const& m : {catalog::trivial(), catalog::cyclic_group(3),
                        catalog::two_element_semilattice(),
                        catalog::with_right_absorbing(2),
                        catalog::with_left_absorbing(3), catalog::max_chain(4),
                        catalog::full_transformation(2),
                        catalog::full_transformation(3)}) {
    std::vector<std::vector<std::int64_t>> rows;
    for (auto const& r : m.rows()) {
      rows.emplace_back(r.begin(), r.end());
    }
    REQUIRE_NOTHROW(validate_monoid(rows, m.identity()));
  }
  REQUIRE(catalog::full_transformation(3).order() == 27);

  auto const rz3 = element_classes(catalog::with_right_absorbing(2));
  REQUIRE(rz3.right_absorbing == ElementSet{1, 2});
  REQUIRE(rz3.left_absorbing.empty());
  REQUIRE_FALSE(rz3.zero);

  auto const e2 = element_classes(catalog::two_element_semilattice());
  REQUIRE(e2.zero == 1u);
  REQUIRE(e2.idempotents == ElementSet{0, 1});

  auto const end2 = element_classes(catalog::full_transformation(2));
  REQUIRE(end2.right_absorbing == ElementSet{2, 3});  // the constant maps
}

TEST_CASE("element properties match their definitions", "[monoid]") {
  for (auto const& m : small_monoids(4)) {
    std::size_t const n = m.order();
    bool group = true, rcancel = true, lcancel = true, ore = true,
         collapsible = true, commutative = true;
    for (index_type a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (index_type b = 0; b < n; ++b) {
        has_inverse = has_inverse
                      || (m.mul(a, b) == m.identity()
                          && m.mul(b, a) == m.identity());
        commutative = commutative && m.mul(a, b) == m.mul(b, a);
        bool meet = false, equalized = false;
        for (index_type x = 0; x < n; ++x) {
          equalized = equalized || m.mul(a, x) == m.mul(b, x);
          for (index_type y = 0; y < n; ++y) {
            meet = meet || m.mul(a, x) == m.mul(b, y);
          }
          for (index_type y = 0; y < n; ++y) {
            if (a != b && m.mul(a, x) == m.mul(b, x)) {
              rcancel = false;
            }
            if (a != b && m.mul(x, a) == m.mul(x, b)) {
              lcancel = false;
            }
          }
        }
        ore         = ore && meet;
        collapsible = collapsible && equalized;
      }
      group = group && has_inverse;
    }
    REQUIRE(is_group(m) == group);
    REQUIRE(is_right_cancellative(m) == rcancel);
    REQUIRE(is_left_cancellative(m) == lcancel);
    REQUIRE(is_right_ore(m) == ore);
    REQUIRE(is_right_collapsible(m) == collapsible);
    REQUIRE(is_commutative(m) == commutative);
    REQUIRE(is_left_ore(m) == is_right_ore(opposite(m)));
    REQUIRE(opposite(opposite(m)) == m);
    // right collapsible implies right Ore
    REQUIRE((!collapsible || ore));
  }
}

TEST_CASE("direct products multiply pairwise", "[monoid]") {
  auto const c2  = catalog::cyclic_group(2);
  auto const e2  = catalog::two_element_semilattice();
  auto const pr  = direct_product(c2, e2);
  REQUIRE(pr.order() == 4);
  for (index_type a = 0; a < 4; ++a) {
    for (index_type b = 0; b < 4; ++b) {
      REQUIRE(pr.mul(a, b)
              == c2.mul(a / 2, b / 2) * 2 + e2.mul(a % 2, b % 2));
    }
  }
  REQUIRE(pr.identity() == 0);
}

TEST_CASE("closures", "[monoid]") {
  auto const rz3 = catalog::with_right_absorbing(2);
  REQUIRE_THROWS_AS(submonoid_closure(rz3, {}), MtoposError);
  REQUIRE_THROWS_AS(right_factorable_closure(rz3, {}), MtoposError);
  REQUIRE(submonoid_closure(rz3, {1}) == ElementSet{0, 1});
  // a = 1 a, so 1 is a right factor of a: the closure of {a} is M
  REQUIRE(right_factorable_closure(rz3, {1}) == ElementSet{0, 1, 2});
  REQUIRE(is_right_factorable(rz3, {0, 1, 2}));
  REQUIRE_FALSE(is_right_factorable(rz3, {0, 1}));

  auto const c3 = catalog::cyclic_group(3);
  REQUIRE(submonoid_closure(c3, {1}) == ElementSet{0, 1, 2});
  REQUIRE(minimal_rf_generating_set(c3).size() <= 1);
}

TEST_CASE("the identity class of ~_S is the right-factorable closure of S",
          "[monoid][property]") {
  for (auto const& m : small_monoids(4)) {
    std::size_t const n = m.order();
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = a; b < n; ++b) {
        ElementSet seed = a == b ? ElementSet{a} : ElementSet{a, b};
        std::vector<std::pair<index_type, index_type>> pairs;
        for (auto s : seed) {
          pairs.emplace_back(s, m.identity());
        }
        auto const cong = congruence_from_pairs(m, pairs);
        REQUIRE(right_factorable_closure(m, seed)
                == cong.class_members(m.identity()));
      }
    }
  }
}

TEST_CASE("congruence_from_pairs is the least right congruence", "[monoid]") {
  for (auto const& m : small_monoids(3)) {
    std::size_t const n = m.order();
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        auto const c = congruence_from_pairs(m, {{a, b}});
        REQUIRE(c.class_of(a) == c.class_of(b));
        // compatible with right multiplication
        for (index_type x = 0; x < n; ++x) {
          for (index_type y = 0; y < n; ++y) {
            if (c.class_of(x) == c.class_of(y)) {
              for (index_type s = 0; s < n; ++s) {
                REQUIRE(c.class_of(m.mul(x, s)) == c.class_of(m.mul(y, s)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("monoid generators and minimal right-factorable generating sets",
          "[monoid]") {
  for (auto const& m : small_monoids(4)) {
    auto const gens = monoid_generators(m);
    REQUIRE(submonoid_closure(m, gens.empty() ? ElementSet{m.identity()} : gens).size()
            == m.order());
    auto const rf = minimal_rf_generating_set(m);
    REQUIRE(right_factorable_closure(m, rf.empty() ? ElementSet{m.identity()} : rf)
                .size()
            == m.order());
    // the empty seed is not allowed, so the trivial monoid needs {1}
    REQUIRE(rf.size() <= std::max<std::size_t>(gens.size(), 1));
  }
}
