// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Exhaustive generation of monoids and of right M-sets up to isomorphism.

#ifndef MTOPOS_ENUMERATE_HPP_
#define MTOPOS_ENUMERATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "monoid.hpp"
#include "mset.hpp"

namespace mtopos {

  //! \brief A canonical relabelling of a table.
  //!
  //! For monoids, `bytes` is the order followed by the row-major table of
  //! the lexicographically least relabelling that sends the identity to 0.
  //! For M-sets, `bytes` is the size followed by the row-major action table
  //! of the least relabelling compatible with an invariant ordering of the
  //! elements. Two tables have equal forms iff they are isomorphic.
  struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    //! Number of relabellings that fix the canonical table.
    std::size_t automorphisms = 0;

    bool operator==(CanonicalForm const& that) const {
      return bytes == that.bytes;
    }
    bool operator<(CanonicalForm const& that) const {
      return bytes < that.bytes;
    }
    //! Lower-case hex of `bytes`.
    std::string hex() const;
  };

  CanonicalForm canonical_form(Monoid const& m);

  //! The canonical table itself, identity at index 0.
  Monoid canonical_monoid(Monoid const& m);

  CanonicalForm canonical_form(RightMSet const& x);

  //! The M-set relabelled to its canonical table.
  RightMSet canonical_mset(RightMSet const& x);

  //! Largest order accepted by enumerate_monoids by default.
  inline constexpr std::size_t default_monoid_cap = 5;
  //! Largest size accepted by enumerate_msets by default.
  inline constexpr std::size_t default_mset_cap = 6;

  //! \brief All monoids of order n up to isomorphism.
  //!
  //! Fills the table cell by cell with the identity fixed at 0, pruning as
  //! soon as an associativity triple is fully determined and violated. The
  //! result holds canonical tables sorted by canonical form. Throws
  //! CapExceeded if n > cap, and RangeError if n == 0.
  //!
  //! If the environment variable MTOPOS_CACHE_DIR names a directory, tables
  //! are read from and written to a binary file there (one byte for the
  //! order, then n^2 bytes per table).
  std::vector<Monoid> enumerate_monoids(std::size_t n,
                                        std::size_t cap = default_monoid_cap);

  //! \brief All right M-sets with k elements up to isomorphism.
  //!
  //! An action is a homomorphism from M into the transformations of
  //! {0, ..., k-1}; it is determined by the images of a generating set. The
  //! images are chosen one generator at a time, the first one only up to
  //! conjugacy, and checked against every relation of the submonoid
  //! generated so far. Results are canonical and sorted by canonical form.
  //! Throws CapExceeded if k > cap.
  std::vector<RightMSet> enumerate_msets(Monoid const& m,
                                         std::size_t   k,
                                         std::size_t   cap = default_mset_cap);

  //! All left M-sets with k elements up to isomorphism (via opposite(M)).
  std::vector<LeftMSet> enumerate_left_msets(Monoid const& m,
                                             std::size_t   k,
                                             std::size_t cap = default_mset_cap);

}  // namespace mtopos

#endif  // MTOPOS_ENUMERATE_HPP_
