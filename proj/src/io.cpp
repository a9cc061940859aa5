// mtopos - finite monoid actions and the structure of their presheaf toposes

#include "mtopos/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#ifndef MTOPOS_VERSION
#define MTOPOS_VERSION "0.0.0"
#endif

namespace mtopos::io {

  char const* version() noexcept {
    return MTOPOS_VERSION;
  }

  namespace {
    [[noreturn]] void parse_fail(std::string const& what) {
      throw MtoposError(error_code::parse_error, what);
    }

    // The meaningful lines of a file, with their 1-based line numbers.
    std::vector<std::pair<std::size_t, std::string>> content_lines(
        std::string const& text) {
      std::vector<std::pair<std::size_t, std::string>> out;
      std::istringstream                               in(text);
      std::string                                      line;
      std::size_t                                      number = 0;
      while (std::getline(in, line)) {
        ++number;
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        auto const last = line.find_last_not_of(" \t\r");
        out.emplace_back(number, line.substr(first, last - first + 1));
      }
      return out;
    }

    std::vector<std::int64_t> integers(std::string const& line, std::size_t number) {
      std::vector<std::int64_t> out;
      std::istringstream        in(line);
      std::string               token;
      while (in >> token) {
        std::int64_t value = 0;
        auto const [end, ec]
            = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size()) {
          parse_fail("line " + std::to_string(number) + ": not an integer '"
                     + token + "'");
        }
        out.push_back(value);
      }
      return out;
    }

    std::int64_t single(std::pair<std::size_t, std::string> const& line,
                        char const*                                what) {
      auto values = integers(line.second, line.first);
      if (values.size() != 1) {
        parse_fail("line " + std::to_string(line.first) + ": expected " + what);
      }
      return values[0];
    }

    std::vector<std::vector<std::int64_t>> table_rows(
        std::vector<std::pair<std::size_t, std::string>> const& lines,
        std::size_t                                             start,
        std::size_t                                             count,
        std::size_t                                             width) {
      if (lines.size() != start + count) {
        parse_fail("expected " + std::to_string(count) + " rows, found "
                   + std::to_string(lines.size() - std::min(lines.size(), start)));
      }
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t i = 0; i < count; ++i) {
        auto const& [number, line] = lines[start + i];
        auto row                   = integers(line, number);
        if (row.size() != width) {
          parse_fail("line " + std::to_string(number) + ": expected "
                     + std::to_string(width) + " entries, found "
                     + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    std::string read_file(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw MtoposError(error_code::io_error, "cannot read " + path.string());
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    void write_file(std::filesystem::path const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text)) {
        throw MtoposError(error_code::io_error, "cannot write " + path.string());
      }
    }

    std::string format_rows(std::vector<std::vector<index_type>> const& rows) {
      std::string out;
      for (auto const& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out += (i == 0 ? "" : " ") + std::to_string(row[i]);
        }
        out += '\n';
      }
      return out;
    }
  }  // namespace

  Monoid parse_monoid(std::string const& text) {
    auto const lines = content_lines(text);
    if (lines.size() < 2) {
      parse_fail("expected the order and the identity");
    }
    auto const n = single(lines[0], "the order");
    if (n < 1) {
      parse_fail("line " + std::to_string(lines[0].first)
                 + ": the order must be positive");
    }
    auto const identity = single(lines[1], "the identity");
    return validate_monoid(
        table_rows(lines, 2, static_cast<std::size_t>(n), static_cast<std::size_t>(n)),
        identity);
  }

  Monoid read_monoid(std::filesystem::path const& path) {
    return parse_monoid(read_file(path));
  }

  std::string format_monoid(Monoid const& m) {
    return std::to_string(m.order()) + "\n" + std::to_string(m.identity()) + "\n"
           + format_rows(m.rows());
  }

  void write_monoid(std::filesystem::path const& path, Monoid const& m) {
    write_file(path, format_monoid(m));
  }

  namespace {
    std::string monoid_reference(
        std::vector<std::pair<std::size_t, std::string>> const& lines) {
      if (lines.empty() || lines[0].second.rfind("monoid", 0) != 0) {
        parse_fail("expected a 'monoid <path>' header");
      }
      auto ref = lines[0].second.substr(6);
      auto const first = ref.find_first_not_of(" \t");
      if (first == std::string::npos || first == 0) {
        parse_fail("line " + std::to_string(lines[0].first)
                   + ": expected 'monoid <path>'");
      }
      return ref.substr(first);
    }

    RightMSet parse_mset_lines(
        std::vector<std::pair<std::size_t, std::string>> const& lines,
        Monoid const&                                           m) {
      if (lines.size() < 2) {
        parse_fail("expected the size after the header");
      }
      auto const k = single(lines[1], "the size");
      if (k < 0) {
        parse_fail("line " + std::to_string(lines[1].first)
                   + ": the size must not be negative");
      }
      return RightMSet(m, table_rows(lines, 2, static_cast<std::size_t>(k),
                                     m.order()));
    }
  }  // namespace

  RightMSet parse_mset(std::string const& text, Monoid const& m) {
    auto const lines = content_lines(text);
    monoid_reference(lines);
    return parse_mset_lines(lines, m);
  }

  MSetFile read_mset(std::filesystem::path const& path) {
    auto const lines = content_lines(read_file(path));
    std::filesystem::path ref(monoid_reference(lines));
    if (ref.is_relative()) {
      ref = path.parent_path() / ref;
    }
    auto const m = read_monoid(ref);
    return MSetFile{ref, parse_mset_lines(lines, m)};
  }

  std::string format_mset(RightMSet const& x, std::string const& monoid_ref) {
    return "monoid " + monoid_ref + "\n" + std::to_string(x.size()) + "\n"
           + format_rows(x.rows());
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounds
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::pair<char const*, std::size_t Bounds::*>> bound_fields() {
      return {{"mset_size", &Bounds::mset_size},
              {"pair_size", &Bounds::pair_size},
              {"morphism_size", &Bounds::morphism_size},
              {"theta_size", &Bounds::theta_size},
              {"points_bound", &Bounds::points_bound},
              {"power_cap", &Bounds::power_cap},
              {"exponential_cap", &Bounds::exponential_cap},
              {"subset_size", &Bounds::subset_size}};
    }
  }  // namespace

  Bounds parse_bounds(std::string const& spec, Bounds base) {
    std::istringstream in(spec);
    std::string        item;
    auto const         fields = bound_fields();
    while (std::getline(in, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto const eq = item.find('=');
      if (eq == std::string::npos) {
        parse_fail("bound '" + item + "' is not key=value");
      }
      auto const key   = item.substr(0, eq);
      auto const value = item.substr(eq + 1);
      auto       it    = std::find_if(fields.begin(), fields.end(),
                               [&](auto const& f) { return key == f.first; });
      if (it == fields.end()) {
        parse_fail("unknown bound '" + key + "'");
      }
      std::size_t number = 0;
      auto const [end, ec]
          = std::from_chars(value.data(), value.data() + value.size(), number);
      if (ec != std::errc() || end != value.data() + value.size()) {
        parse_fail("bound '" + key + "' needs a non-negative integer");
      }
      base.*(it->second) = number;
    }
    return base;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(Monoid const& m) {
    json j;
    j["order"]    = m.order();
    j["identity"] = m.identity();
    j["table"]    = m.rows();
    return j;
  }

  json to_json(RightMSet const& x) {
    json j;
    if (!x.label().empty()) {
      j["label"] = x.label();
    }
    j["size"]   = x.size();
    j["action"] = x.rows();
    return j;
  }

  json to_json(Bounds const& b) {
    json j;
    for (auto const& [name, field] : bound_fields()) {
      j[name] = b.*field;
    }
    return j;
  }

  json to_json(PropertyProfile const& p) {
    json j;
    for (auto const& [name, value] : p.flags()) {
      j[name] = value;
    }
    j["minimal_rf_generating_size"] = p.minimal_rf_generating_size;
    return j;
  }

  json to_json(Witness const& w) {
    json j;
    j["description"] = w.description;
    j["objects"]     = json::array();
    for (auto const& x : w.objects) {
      j["objects"].push_back(to_json(x));
    }
    j["maps"] = w.maps;
    return j;
  }

  json to_json(ConditionResult const& c) {
    json j;
    j["id"]      = c.id;
    j["kind"]    = c.kind == ConditionKind::decidable ? "decidable" : "bounded";
    j["verdict"] = c.skipped ? json(nullptr) : json(c.value);
    if (c.skipped) {
      j["skipped"] = true;
    }
    if (c.kind == ConditionKind::bounded) {
      j["guaranteed"] = c.guaranteed;
      j["guarantee"]  = c.guarantee;
    }
    if (!c.note.empty()) {
      j["note"] = c.note;
    }
    if (c.witness) {
      j["witness"] = to_json(*c.witness);
    }
    return j;
  }

  json to_json(TheoremReport const& t) {
    json j;
    j["id"]         = t.id;
    j["verdict"]    = t.verdict;
    j["agreement"]  = agreement_name(t.agreement);
    j["conditions"] = json::array();
    for (auto const& c : t.conditions) {
      j["conditions"].push_back(to_json(c));
    }
    return j;
  }

  json versions() {
    json j;
    j["mtopos"]        = version();
    j["report_schema"] = report_schema_version;
    return j;
  }

  json report_document(Monoid const&                     m,
                       PropertyProfile const&            p,
                       std::vector<TheoremReport> const& theorems,
                       Bounds const&                     b) {
    json j;
    j["monoid"]   = to_json(m);
    j["profile"]  = to_json(p);
    j["theorems"] = json::array();
    for (auto const& t : theorems) {
      j["theorems"].push_back(to_json(t));
    }
    j["bounds"]   = to_json(b);
    j["versions"] = versions();
    return j;
  }

  json to_json(SuiteReport const& r) {
    json j;
    j["max_order"]    = r.max_order;
    j["bounds"]       = to_json(r.bounds);
    j["out_of_scope"] = r.out_of_scope;
    json per_order;
    for (auto const& [order, count] : r.monoids_per_order) {
      per_order[std::to_string(order)] = count;
    }
    j["monoids_per_order"] = per_order;
    json counts;
    for (auto const& [order, flags] : r.counts) {
      json row;
      for (auto const& [name, count] : flags) {
        row[name] = count;
      }
      counts[std::to_string(order)] = row;
    }
    j["counts"]        = counts;
    j["disagreements"] = r.disagreements;
    j["unconfirmed"]   = r.unconfirmed;
    j["skipped"]       = r.skipped;
    j["monoids"]       = json::array();
    for (auto const& e : r.entries) {
      json entry;
      entry["canonical"]          = e.canonical_hex;
      entry["monoid"]             = to_json(e.monoid);
      entry["profile"]            = to_json(e.profile);
      entry["profile_violations"] = e.profile_violations;
      entry["theorems"]           = json::array();
      for (auto const& t : e.theorems) {
        entry["theorems"].push_back(to_json(t));
      }
      j["monoids"].push_back(std::move(entry));
    }
    j["versions"] = versions();
    return j;
  }

  void write_json(std::filesystem::path const& path, json const& j) {
    write_file(path, j.dump(2) + "\n");
  }

}  // namespace mtopos::io
