// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Text formats for monoids and M-sets, and the JSON reports.
//
// A monoid file holds the order n on the first line, the identity on the
// second and then n rows of n indices, row a listing the products a * b.
// An M-set file starts with a line "monoid <path>" naming a monoid file
// (relative paths are resolved against the M-set file's directory), then
// the size k and k rows of n indices, row x listing x * m. Indices are
// 0-based; blank lines and lines starting with '#' are ignored.

#ifndef MTOPOS_IO_HPP_
#define MTOPOS_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "harness.hpp"
#include "monoid.hpp"
#include "mset.hpp"

namespace mtopos::io {

  using json = nlohmann::ordered_json;

  //! The library version, e.g. "0.1.0".
  char const* version() noexcept;

  //! Version of the JSON report layout.
  inline constexpr int report_schema_version = 1;

  //! Parse and validate a monoid. Throws ParseError or a validation error.
  Monoid parse_monoid(std::string const& text);

  //! Throws IoError if the file cannot be read.
  Monoid read_monoid(std::filesystem::path const& path);

  std::string format_monoid(Monoid const& m);

  //! Throws IoError if the file cannot be written.
  void write_monoid(std::filesystem::path const& path, Monoid const& m);

  //! \brief A parsed M-set file: the monoid reference and the M-set.
  struct MSetFile {
    std::filesystem::path monoid_path;
    RightMSet             mset;
  };

  //! Parse an M-set over a given monoid; the header line is required but
  //! its path is not opened.
  RightMSet parse_mset(std::string const& text, Monoid const& m);

  //! Read an M-set file and the monoid file it names.
  MSetFile read_mset(std::filesystem::path const& path);

  std::string format_mset(RightMSet const& x, std::string const& monoid_ref);

  //! \brief Parse "key=value,key=value" into bounds.
  //!
  //! Keys are the field names of Bounds. Throws ParseError on an unknown
  //! key or a malformed value.
  Bounds parse_bounds(std::string const& spec, Bounds base = {});

  json to_json(Monoid const& m);
  json to_json(RightMSet const& x);
  json to_json(Bounds const& b);
  json to_json(PropertyProfile const& p);
  json to_json(Witness const& w);
  json to_json(ConditionResult const& c);
  json to_json(TheoremReport const& t);

  //! {"mtopos": version, "report_schema": n}
  json versions();

  //! The report for a single monoid: monoid, profile, theorems, bounds,
  //! versions, in that order.
  json report_document(Monoid const&                     m,
                       PropertyProfile const&            p,
                       std::vector<TheoremReport> const& theorems,
                       Bounds const&                     b);

  json to_json(SuiteReport const& r);

  //! Write JSON with two-space indentation and a final newline.
  void write_json(std::filesystem::path const& path, json const& j);

}  // namespace mtopos::io

#endif  // MTOPOS_IO_HPP_
