#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "mtopos/catalog.hpp"
#include "mtopos/enumerate.hpp"
#include "mtopos/io.hpp"

using namespace mtopos;

namespace {
  std::filesystem::path const data_dir = MTOPOS_TEST_DATA;

  std::string message_of(auto&& f) {
    try {
      f();
    } catch (MtoposError const& e) {
      return e.what();
    }
    return "";
  }

  std::vector<std::string> keys(io::json const& j) {
    std::vector<std::string> out;
    for (auto const& [k, v] : j.items()) {
      out.push_back(k);
    }
    return out;
  }
}  // namespace

TEST_CASE("monoid files round-trip", "[io]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      REQUIRE(io::parse_monoid(io::format_monoid(m)) == m);
    }
  }
  auto const end2 = catalog::full_transformation(2);
  REQUIRE(io::read_monoid(data_dir / "end2.txt") == end2);
  REQUIRE(io::read_monoid(data_dir / "rz3.txt")
          == catalog::with_right_absorbing(2));
  REQUIRE(io::read_monoid(data_dir / "c2.txt") == catalog::cyclic_group(2));

  auto const tmp = std::filesystem::temp_directory_path() / "mtopos-io-test.txt";
  io::write_monoid(tmp, end2);
  REQUIRE(io::read_monoid(tmp) == end2);
  std::filesystem::remove(tmp);

  // comments and blank lines are ignored
  REQUIRE(io::parse_monoid("# C2\n2\n\n0\n0 1\n# swap\n1 0\n")
          == catalog::cyclic_group(2));
}

TEST_CASE("monoid file errors", "[io]") {
  REQUIRE(message_of([] { io::read_monoid(data_dir / "assoc_broken.txt"); })
          == "AssocViolation a=1 b=2 c=1");
  REQUIRE(message_of([] { io::read_monoid(data_dir / "range_error.txt"); })
              .rfind("RangeError", 0)
          == 0);
  REQUIRE(message_of([] { io::read_monoid(data_dir / "short.txt"); })
              .rfind("ParseError", 0)
          == 0);
  REQUIRE(message_of([] { io::read_monoid(data_dir / "missing.txt"); })
              .rfind("IoError", 0)
          == 0);
  auto const bad_token = message_of([] { io::parse_monoid("1\n0\nx\n"); });
  REQUIRE(bad_token.rfind("ParseError", 0) == 0);
  REQUIRE(bad_token.find("line 3") != std::string::npos);
  REQUIRE(message_of([] { io::parse_monoid("0\n0\n"); }).rfind("ParseError", 0)
          == 0);
  REQUIRE(message_of([] { io::parse_monoid("2\n0\n0 1\n1\n"); })
              .find("line 4")
          != std::string::npos);
}

TEST_CASE("M-set files round-trip", "[io]") {
  auto const c2  = catalog::cyclic_group(2);
  auto const reg = io::read_mset(data_dir / "c2_regular.mset");
  REQUIRE(reg.mset == regular(c2));
  REQUIRE(reg.monoid_path == data_dir / "c2.txt");
  REQUIRE(io::read_mset(data_dir / "c2_delta2.mset").mset == trivial_action(c2, 2));

  auto const end2 = catalog::full_transformation(2);
  for (auto const& x : enumerate_msets(end2, 3)) {
    REQUIRE(io::parse_mset(io::format_mset(x, "end2.txt"), end2) == x);
  }
  REQUIRE(message_of([&] { io::parse_mset("2\n0 1\n1 0\n", c2); })
              .rfind("ParseError", 0)
          == 0);
  REQUIRE(message_of([&] { io::parse_mset("monoid c2.txt\n1\n0 1\n", c2); })
              .rfind("RangeError", 0)
          == 0);
}

TEST_CASE("bounds parsing", "[io]") {
  Bounds const b = io::parse_bounds("mset_size=3,theta_size=1,exponential_cap=99");
  REQUIRE(b.mset_size == 3);
  REQUIRE(b.theta_size == 1);
  REQUIRE(b.exponential_cap == 99);
  REQUIRE(b.pair_size == Bounds{}.pair_size);
  REQUIRE(io::parse_bounds("").mset_size == Bounds{}.mset_size);
  REQUIRE_THROWS_AS(io::parse_bounds("nope=1"), MtoposError);
  REQUIRE_THROWS_AS(io::parse_bounds("mset_size=-1"), MtoposError);
  REQUIRE_THROWS_AS(io::parse_bounds("mset_size"), MtoposError);
  REQUIRE_THROWS_AS(io::parse_bounds("mset_size=2x"), MtoposError);
  // every field is reachable and reported
  auto const j = io::to_json(io::parse_bounds("points_bound=7,subset_size=1"));
  REQUIRE(j["points_bound"] == 7);
  REQUIRE(j["subset_size"] == 1);
  REQUIRE(j.size() == 8);
}

TEST_CASE("report documents", "[io]") {
  auto const rz3      = catalog::with_right_absorbing(2);
  Bounds const b      = io::parse_bounds("mset_size=3");
  auto const   p      = profile(rz3);
  auto const   report = [&] {
    TheoremChecker checker(rz3, b);
    return io::report_document(rz3, p, checker.all(), b);
  };
  auto const doc = report();
  REQUIRE(keys(doc)
          == std::vector<std::string>{"monoid", "profile", "theorems", "bounds",
                                      "versions"});
  REQUIRE(doc["monoid"]["order"] == 3);
  REQUIRE(doc["profile"]["local"] == true);
  REQUIRE(doc["theorems"].size() == 11);
  REQUIRE(doc["versions"]["report_schema"] == io::report_schema_version);
  REQUIRE(doc["versions"]["mtopos"] == io::version());
  for (auto const& t : doc["theorems"]) {
    REQUIRE(keys(t)
            == std::vector<std::string>{"id", "verdict", "agreement", "conditions"});
    for (auto const& c : t["conditions"]) {
      auto const k = keys(c);
      REQUIRE(k.at(0) == "id");
      REQUIRE(k.at(1) == "kind");
      REQUIRE(k.at(2) == "verdict");
    }
  }
  // byte-stable across runs
  REQUIRE(report().dump(2) == doc.dump(2));
}

TEST_CASE("suite reports", "[io]") {
  auto const r = run_suite(2);
  auto const j = io::to_json(r);
  REQUIRE(keys(j)
          == std::vector<std::string>{"max_order", "bounds", "out_of_scope",
                                      "monoids_per_order", "counts",
                                      "disagreements", "unconfirmed", "skipped",
                                      "monoids", "versions"});
  REQUIRE(j["monoids_per_order"]["2"] == 2);
  REQUIRE(j["monoids"].size() == 3);
  REQUIRE(j["monoids"][0]["canonical"] == r.entries[0].canonical_hex);
  REQUIRE(io::to_json(run_suite(2)).dump() == j.dump());

  auto const tmp = std::filesystem::temp_directory_path() / "mtopos-suite.json";
  io::write_json(tmp, j);
  std::ifstream in(tmp);
  REQUIRE(io::json::parse(in) == j);
  std::filesystem::remove(tmp);
}
