// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Command-line front end. Exit codes: 0 success, 1 I/O error, 2 invalid
// input, 3 a theorem check disagreed, 4 a size cap was exceeded.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mtopos/enumerate.hpp"
#include "mtopos/flatness.hpp"
#include "mtopos/harness.hpp"
#include "mtopos/io.hpp"
#include "mtopos/topos.hpp"

namespace fs = std::filesystem;
using namespace mtopos;

namespace {

  enum exit_status : int { ok = 0, io_failure = 1, invalid = 2, disagreement = 3, cap = 4 };

  int status_of(MtoposError const& e) {
    switch (e.code()) {
      case error_code::io_error:
        return io_failure;
      case error_code::cap_exceeded:
      case error_code::bound_too_small:
        return cap;
      default:
        return invalid;
    }
  }

  void print_table(std::vector<std::vector<index_type>> const& rows,
                   std::string const&                          indent = "  ") {
    for (auto const& row : rows) {
      std::cout << indent;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << (i == 0 ? "" : " ") << row[i];
      }
      std::cout << '\n';
    }
  }

  std::string set_string(ElementSet const& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(s[i]);
    }
    return out + "}";
  }

  int cmd_validate(std::string const& path) {
    auto const m = io::read_monoid(path);
    std::cout << "ok: monoid of order " << m.order() << " with identity "
              << m.identity() << '\n';
    return ok;
  }

  int cmd_profile(std::string const& path, bool as_json) {
    auto const m = io::read_monoid(path);
    auto const p = profile(m);
    if (as_json) {
      io::json j;
      j["monoid"]  = io::to_json(m);
      j["profile"] = io::to_json(p);
      std::cout << j.dump(2) << '\n';
      return ok;
    }
    for (auto const& [name, value] : p.flags()) {
      std::cout << std::left << std::setw(28) << name << (value ? "true" : "false")
                << '\n';
    }
    std::cout << std::left << std::setw(28) << "minimal_rf_generating_size"
              << p.minimal_rf_generating_size << '\n';
    return ok;
  }

  int cmd_check(std::string const& path,
                Bounds const&      bounds,
                std::string const& out) {
    auto const m        = io::read_monoid(path);
    auto const p        = profile(m);
    auto const theorems = TheoremChecker(m, bounds).all();
    auto const doc      = io::report_document(m, p, theorems, bounds);
    if (out.empty()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      io::write_json(out, doc);
    }
    bool bad = !profile_violations(m, p).empty();
    for (auto const& t : theorems) {
      bad = bad || t.is_disagreement();
      if (!out.empty()) {
        std::cout << std::left << std::setw(20) << t.id
                  << (t.verdict ? "true  " : "false ") << agreement_name(t.agreement)
                  << '\n';
      }
    }
    return bad ? disagreement : ok;
  }

  int cmd_omega(std::string const& path) {
    auto const m  = io::read_monoid(path);
    auto const om = omega(m);
    std::cout << "ideals: " << om.ideals.size() << '\n';
    for (std::size_t i = 0; i < om.ideals.size(); ++i) {
      std::cout << "  " << i << " = " << set_string(mask_elements(om.ideals[i]));
      if (i == om.top) {
        std::cout << "  (top)";
      }
      if (i == om.bottom) {
        std::cout << "  (bottom)";
      }
      std::cout << '\n';
    }
    std::cout << "action (row I lists I * m):\n";
    print_table(om.omega.rows());
    return ok;
  }

  int cmd_exp(std::string const& monoid_path,
              std::string const& p_path,
              std::string const& q_path,
              std::size_t        cap_value) {
    auto const m = io::read_monoid(monoid_path);
    auto const p = io::read_mset(p_path).mset;
    auto const q = io::read_mset(q_path).mset;
    if (!(p.monoid() == m) || !(q.monoid() == m)) {
      throw MtoposError(error_code::monoid_mismatch,
                        "P and Q must be over the given monoid");
    }
    auto const e = exponential(p, q, cap_value);
    std::cout << "carrier: " << e.maps.size() << " (maps M x P -> Q, entry n*|P|+p)\n";
    for (std::size_t i = 0; i < e.maps.size(); ++i) {
      std::cout << "  " << i << " =";
      for (auto v : e.maps[i]) {
        std::cout << ' ' << v;
      }
      std::cout << '\n';
    }
    std::cout << "action (row f lists f * m):\n";
    print_table(e.object.rows());
    std::cout << "evaluation (row f lists ev(f, p)):\n";
    for (std::size_t f = 0; f < e.maps.size(); ++f) {
      std::cout << "  ";
      for (std::size_t x = 0; x < p.size(); ++x) {
        std::cout << (x == 0 ? "" : " ") << e.evaluation(f * p.size() + x);
      }
      std::cout << '\n';
    }
    return ok;
  }

  int cmd_points(std::string const& path, std::size_t bound) {
    auto const m   = io::read_monoid(path);
    auto const pts = enumerate_points(m, bound == 0 ? m.order() : bound);
    std::cout << "flat left M-sets up to size " << pts.bound << ": "
              << pts.objects.size() << '\n';
    for (std::size_t i = 0; i < pts.objects.size(); ++i) {
      std::cout << "point " << i << " (size " << pts.objects[i].size()
                << ", row x lists m * x):\n";
      print_table(pts.objects[i].as_right().rows(), "    ");
    }
    std::cout << "hom counts:\n";
    for (auto const& row : pts.homs) {
      std::cout << "  ";
      for (std::size_t j = 0; j < row.size(); ++j) {
        std::cout << (j == 0 ? "" : " ") << row[j];
      }
      std::cout << '\n';
    }
    std::cout << "initial: "
              << (pts.initial ? std::to_string(*pts.initial) : std::string("none"))
              << '\n';
    std::cout << "terminal: "
              << (pts.terminal ? std::to_string(*pts.terminal) : std::string("none"))
              << '\n';
    std::cout << "essential points (M e):";
    for (auto e : pts.essential_idempotent) {
      std::cout << " e=" << e;
    }
    std::cout << "\nterminal essential point: "
              << (pts.terminal_essential
                      ? "e=" + std::to_string(
                            pts.essential_idempotent[*pts.terminal_essential])
                      : std::string("none"))
              << '\n';
    return ok;
  }

  int cmd_harness(std::size_t        max_order,
                  Bounds const&      bounds,
                  std::string const& out,
                  bool               quiet) {
    auto const report = run_suite(max_order, bounds, [quiet](std::size_t done, std::size_t total) {
      if (!quiet) {
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) {
          std::cerr << '\n';
        }
      }
    });
    if (!out.empty()) {
      io::write_json(out, io::to_json(report));
    }
    for (auto const& [order, count] : report.monoids_per_order) {
      std::cout << "order " << order << ": " << count << " monoids\n";
    }
    std::cout << "disagreements: " << report.disagreements.size() << '\n';
    for (auto const& d : report.disagreements) {
      std::cout << "  " << d << '\n';
    }
    std::cout << "unconfirmed at bound: " << report.unconfirmed.size() << '\n';
    std::cout << "skipped: " << report.skipped.size() << '\n';
    return report.disagreements.empty() ? ok : disagreement;
  }

  int cmd_enumerate(std::size_t order, std::string const& out) {
    auto const monoids = enumerate_monoids(order);
    fs::create_directories(out);
    for (auto const& m : monoids) {
      io::write_monoid(fs::path(out) / (canonical_form(m).hex() + ".txt"), m);
    }
    std::cout << monoids.size() << " monoids of order " << order << " written to "
              << out << '\n';
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoids, their actions and the presheaf topos of each"};
  app.require_subcommand(1);

  std::string path, p_path, q_path, out, bounds_spec;
  bool        as_json   = false;
  bool        quiet     = false;
  std::size_t bound     = 0;
  std::size_t max_order = 2;
  std::size_t order     = 1;
  std::size_t exp_cap   = default_exponential_cap;

  auto* validate = app.add_subcommand("validate", "Check a monoid file");
  validate->add_option("monoid", path, "Monoid file")->required();

  auto* prof = app.add_subcommand("profile", "Topos properties of a monoid");
  prof->add_option("monoid", path, "Monoid file")->required();
  prof->add_flag("--json", as_json, "Print JSON");

  auto* check = app.add_subcommand("check", "Run every theorem on one monoid");
  check->add_option("monoid", path, "Monoid file")->required();
  check->add_option("--bounds", bounds_spec, "Bounds as key=value,...");
  check->add_option("--out", out, "Write the JSON report here");

  auto* om = app.add_subcommand("omega", "Print the subobject classifier");
  om->add_option("monoid", path, "Monoid file")->required();

  auto* ex = app.add_subcommand("exp", "Print the exponential Q^P");
  ex->add_option("monoid", path, "Monoid file")->required();
  ex->add_option("P", p_path, "M-set file for the exponent")->required();
  ex->add_option("Q", q_path, "M-set file for the base")->required();
  ex->add_option("--cap", exp_cap, "Largest carrier");

  auto* pts = app.add_subcommand("points", "Flat left M-sets up to a size");
  pts->add_option("monoid", path, "Monoid file")->required();
  pts->add_option("--bound", bound, "Largest size (default |M|)");

  auto* harness = app.add_subcommand("harness", "Check every monoid up to an order");
  harness->add_option("--max-order", max_order, "Largest order")->required();
  harness->add_option("--bounds", bounds_spec, "Bounds as key=value,...");
  harness->add_option("--out", out, "Write the JSON report here");
  harness->add_flag("--quiet", quiet, "No progress output");

  auto* en = app.add_subcommand("enumerate", "Write one file per monoid of an order");
  en->add_option("--order", order, "Order")->required();
  en->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? ok : invalid;
  }

  try {
    if (*validate) {
      return cmd_validate(path);
    }
    if (*prof) {
      return cmd_profile(path, as_json);
    }
    if (*check) {
      return cmd_check(path, io::parse_bounds(bounds_spec), out);
    }
    if (*om) {
      return cmd_omega(path);
    }
    if (*ex) {
      return cmd_exp(path, p_path, q_path, exp_cap);
    }
    if (*pts) {
      return cmd_points(path, bound);
    }
    if (*harness) {
      return cmd_harness(max_order, io::parse_bounds(bounds_spec), out, quiet);
    }
    if (*en) {
      return cmd_enumerate(order, out);
    }
  } catch (MtoposError const& e) {
    std::cerr << e.what() << '\n';
    return status_of(e);
  } catch (fs::filesystem_error const& e) {
    std::cerr << "IoError " << e.what() << '\n';
    return io_failure;
  }
  return ok;
}
