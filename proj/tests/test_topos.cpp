#include <catch2/catch_amalgamated.hpp>

#include "mtopos/catalog.hpp"
#include "mtopos/enumerate.hpp"
#include "mtopos/topos.hpp"

#include "oracles.hpp"

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

  std::vector<RightMSet> small_msets(Monoid const& m, std::size_t max_size) {
    std::vector<RightMSet> out;
    for (std::size_t k = 0; k <= max_size; ++k) {
      auto xs = enumerate_msets(m, k);
      out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
  }

  // Right ideals of M by brute force over all subsets.
  std::vector<std::uint64_t> right_ideals(Monoid const& m) {
    std::vector<std::uint64_t> out;
    std::size_t const          n = m.order();
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
      bool ok = true;
      for (index_type a = 0; a < n && ok; ++a) {
        if (s >> a & 1) {
          for (index_type b = 0; b < n && ok; ++b) {
            ok = s >> m.mul(a, b) & 1;
          }
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("Omega is the set of right ideals", "[topos]") {
  for (auto const& m : small_monoids(4)) {
    auto const om = omega(m);
    REQUIRE(om.ideals == right_ideals(m));
    REQUIRE(om.bottom == 0);
    REQUIRE(om.top == om.ideals.size() - 1);
    // I * s = { t : s t in I }
    for (index_type i = 0; i < om.ideals.size(); ++i) {
      for (index_type s = 0; s < m.order(); ++s) {
        std::uint64_t expected = 0;
        for (index_type t = 0; t < m.order(); ++t) {
          if (om.ideals[i] >> m.mul(s, t) & 1) {
            expected |= std::uint64_t(1) << t;
          }
        }
        REQUIRE(om.ideals[om.omega.act(i, s)] == expected);
      }
    }
    // two-valued
    REQUIRE(fixed_points(om.omega) == ElementSet{om.bottom, om.top});
    REQUIRE(om.index_of(om.ideals[om.top]) == om.top);
  }
  REQUIRE(omega(catalog::two_element_semilattice()).ideals.size() == 3);
  REQUIRE(omega(catalog::cyclic_group(3)).ideals.size() == 2);
  REQUIRE(omega(catalog::full_transformation(3)).ideals.size() > 2);
}

TEST_CASE("subobjects correspond to maps into Omega", "[topos]") {
  for (auto const& m : small_monoids(3)) {
    auto const om = omega(m);
    for (auto const& a : small_msets(m, 3)) {
      auto const subs = sub_msets(a);
      // |Sub(A)| = |Hom(A, Omega)|
      REQUIRE(count_homs(a, om.omega) == subs.size());
      for (auto mask : subs) {
        auto const elements = mask_elements(mask);
        auto const chi      = classify(om, a, elements);
        REQUIRE(pullback_of_top(om, chi) == elements);
      }
    }
  }
  auto const rz3 = catalog::with_right_absorbing(2);
  REQUIRE_THROWS_AS(classify(omega(rz3), regular(rz3), {0}), MtoposError);
}

TEST_CASE("exponentials have the universal property", "[topos]") {
  for (auto const& m : small_monoids(3)) {
    auto const xs = small_msets(m, 2);
    for (auto const& p : xs) {
      for (auto const& q : xs) {
        auto const e = exponential(p, q);
        REQUIRE(e.object.size()
                == oracle::homs(product(regular(m), p).object, q).size());
        for (auto const& x : xs) {
          // Hom(X x P, Q) = Hom(X, Q^P)
          auto const xp = product(x, p).object;
          REQUIRE(count_homs(xp, q) == count_homs(x, e.object));
          for (auto const& f : hom_set(xp, q)) {
            auto const g = exp_transpose(e, x, f);
            REQUIRE(exp_untranspose(e, g).map() == f.map());
          }
        }
      }
    }
  }
  auto const c2 = catalog::cyclic_group(2);
  REQUIRE_THROWS_AS(exponential(regular(c2), regular(c2), 1), MtoposError);
}

TEST_CASE("evaluation is f(1, p)", "[topos]") {
  auto const c2 = catalog::cyclic_group(2);
  auto const e  = exponential(regular(c2), trivial_action(c2, 2));
  REQUIRE(e.object.size() == 4);
  for (index_type f = 0; f < e.maps.size(); ++f) {
    for (index_type p = 0; p < 2; ++p) {
      REQUIRE(e.evaluation(f * 2 + p) == e.maps[f][0 * 2 + p]);
    }
  }
}

TEST_CASE("alpha, theta and chi", "[topos]") {
  auto const rz3 = catalog::with_right_absorbing(2);
  auto const a   = alpha(regular(rz3));
  REQUIRE(a.fixed == ElementSet{1, 2});
  REQUIRE(a.surjective);
  REQUIRE_FALSE(a.injective);

  auto const c2 = catalog::cyclic_group(2);
  REQUIRE(alpha(regular(c2)).fixed.empty());
  REQUIRE_FALSE(alpha(regular(c2)).surjective);
  REQUIRE(alpha(trivial_action(c2, 3)).bijective());

  // C(M x M) has two components for C2, so theta for P = Delta(2), Q = M
  // is not monic
  auto const t = theta_for_C(trivial_action(c2, 2), regular(c2));
  REQUIRE(t.function_count == 1);
  REQUIRE(t.components_exponential == 2);
  REQUIRE_FALSE(t.injective);
  REQUIRE(theta_for_C(terminal(c2), terminal(c2)).iso());

  for (auto const& m : small_monoids(4)) {
    REQUIRE((chi_for_C(m) == 2) == is_right_ore(m));
    REQUIRE(chi_for_C(m) <= 2);
  }
}
