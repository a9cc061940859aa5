#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <numeric>

#include "mtopos/catalog.hpp"
#include "mtopos/enumerate.hpp"

#include "oracles.hpp"

using namespace mtopos;

namespace {
  // The monoid with elements relabelled by perm (perm[identity] == 0).
  Monoid relabel(Monoid const& m, std::vector<index_type> const& perm) {
    std::size_t const       n = m.order();
    std::vector<index_type> t(n * n);
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        t[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
      }
    }
    return Monoid::unchecked(n, t, perm[m.identity()]);
  }
}  // namespace

TEST_CASE("monoid counts for small orders", "[enumeration]") {
  REQUIRE_THROWS_AS(enumerate_monoids(0), MtoposError);
  REQUIRE_THROWS_AS(enumerate_monoids(6), MtoposError);
  REQUIRE(enumerate_monoids(1).size() == 1);
  REQUIRE(enumerate_monoids(2).size() == 2);
  // frozen from the brute-force oracle below
  REQUIRE(enumerate_monoids(3).size() == 7);
  REQUIRE(enumerate_monoids(4).size() == 35);
}

TEST_CASE("pruned monoid enumeration equals the naive filter",
          "[enumeration][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::vector<std::uint8_t>> got;
    for (auto const& m : enumerate_monoids(n)) {
      auto const form = oracle::canonical_monoid(oracle::monoid_table(m), n);
      REQUIRE(canonical_form(m).bytes == form);
      got.insert(form);
    }
    REQUIRE(got == oracle::monoids(n));
  }
}

TEST_CASE("pruned M-set enumeration equals the naive filter",
          "[enumeration][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      for (std::size_t k = 0; k <= 3; ++k) {
        std::set<std::vector<std::uint8_t>> got;
        auto const                          xs = enumerate_msets(m, k);
        for (auto const& x : xs) {
          got.insert(oracle::canonical_mset(x));
        }
        REQUIRE(got.size() == xs.size());
        REQUIRE(got == oracle::msets(m, k));
      }
    }
  }
}

TEST_CASE("small M-set examples", "[enumeration]") {
  auto const c2   = catalog::cyclic_group(2);
  auto const zero = enumerate_msets(c2, 0);
  REQUIRE(zero.size() == 1);
  REQUIRE(zero[0].empty());
  auto const one = enumerate_msets(c2, 1);
  REQUIRE(one.size() == 1);
  REQUIRE(one[0] == terminal(c2));
  auto const two = enumerate_msets(c2, 2);
  REQUIRE(two.size() == 2);
  REQUIRE(std::any_of(two.begin(), two.end(),
                      [&](auto const& x) { return are_isomorphic(x, regular(c2)); }));
  REQUIRE(std::any_of(two.begin(), two.end(), [&](auto const& x) {
    return are_isomorphic(x, trivial_action(c2, 2));
  }));
  REQUIRE_THROWS_AS(enumerate_msets(c2, 7), MtoposError);
  REQUIRE(enumerate_left_msets(catalog::with_right_absorbing(2), 1).size() == 1);
}

TEST_CASE("enumeration output is valid and sorted", "[enumeration]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const ms = enumerate_monoids(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::vector<std::vector<std::int64_t>> rows;
      for (auto const& r : ms[i].rows()) {
        rows.emplace_back(r.begin(), r.end());
      }
      REQUIRE_NOTHROW(validate_monoid(rows, ms[i].identity()));
      REQUIRE(ms[i].identity() == 0);
      REQUIRE(canonical_monoid(ms[i]) == ms[i]);
      if (i > 0) {
        REQUIRE(canonical_form(ms[i - 1]) < canonical_form(ms[i]));
      }
    }
  }
  auto const end2 = catalog::full_transformation(2);
  auto const xs   = enumerate_msets(end2, 4);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<std::vector<std::int64_t>> rows;
    for (auto const& r : xs[i].rows()) {
      rows.emplace_back(r.begin(), r.end());
    }
    REQUIRE_NOTHROW(RightMSet(end2, rows));
    if (i > 0) {
      REQUIRE(canonical_form(xs[i - 1]) < canonical_form(xs[i]));
    }
  }
}

TEST_CASE("canonical forms", "[enumeration]") {
  auto const end2 = catalog::full_transformation(2);
  auto const form = canonical_form(end2);
  REQUIRE(canonical_form(canonical_monoid(end2)) == form);
  // every relabelling that keeps the identity at 0
  std::vector<index_type> perm{0, 1, 2, 3};
  do {
    REQUIRE(canonical_form(relabel(end2, perm)) == form);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  // moving the identity elsewhere gives the same form too
  REQUIRE(canonical_form(relabel(end2, {2, 0, 1, 3})) == form);

  auto const two = enumerate_monoids(2);
  REQUIRE_FALSE(canonical_form(two[0]) == canonical_form(two[1]));
  REQUIRE(canonical_form(catalog::cyclic_group(2)).hex() == "0200010100");
  REQUIRE(form.automorphisms >= 1);

  auto const c2 = catalog::cyclic_group(2);
  RightMSet  a(c2, {{0, 1}, {1, 0}, {2, 2}});
  RightMSet  b(c2, {{0, 0}, {1, 2}, {2, 1}});
  REQUIRE(canonical_form(a) == canonical_form(b));
  REQUIRE(canonical_mset(a) == canonical_mset(b));
}

TEST_CASE("the enumeration cache round-trips", "[enumeration]") {
  auto const dir = std::filesystem::temp_directory_path() / "mtopos-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("MTOPOS_CACHE_DIR", dir.c_str(), 1);
  auto const first = enumerate_monoids(3);
  REQUIRE(std::filesystem::exists(dir / "monoids-3.bin"));
  REQUIRE(std::filesystem::file_size(dir / "monoids-3.bin") == 7 * (1 + 9));
  auto const second = enumerate_monoids(3);
  ::unsetenv("MTOPOS_CACHE_DIR");
  REQUIRE(first == second);
  std::filesystem::remove_all(dir);
}
