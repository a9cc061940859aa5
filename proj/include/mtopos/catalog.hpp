// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Small named monoids used throughout the tests, the CLI and the
// acceptance suite.

#ifndef MTOPOS_CATALOG_HPP_
#define MTOPOS_CATALOG_HPP_

#include <cstddef>

#include "monoid.hpp"

namespace mtopos::catalog {

  //! The one-element monoid.
  Monoid trivial();

  //! Z/n under addition, identity 0.
  Monoid cyclic_group(std::size_t n);

  //! {1, e} with e * e = e; index 0 is the identity.
  Monoid two_element_semilattice();

  //! {1} plus k right-absorbing elements (x * y = x for x != 1).
  //!
  //! With k = 2 this is the monoid whose presheaf topos is the topos of
  //! reflexive graphs.
  Monoid with_right_absorbing(std::size_t k);

  //! {1} plus k left-absorbing elements (x * y = y for y != 1).
  Monoid with_left_absorbing(std::size_t k);

  //! {0, ..., n - 1} under max, identity 0; n - 1 is a zero element.
  Monoid max_chain(std::size_t n);

  //! All maps {0, ..., s - 1} -> itself with a * b = a o b (apply b first).
  //!
  //! Maps are indexed by their image lists (f(0), ..., f(s-1)): first the
  //! permutations in lexicographic order (so the identity is 0), then the
  //! remaining maps in lexicographic order. For s = 2 the indices are
  //! 0 = id, 1 = swap, 2 = const 0, 3 = const 1.
  Monoid full_transformation(std::size_t s);

}  // namespace mtopos::catalog

#endif  // MTOPOS_CATALOG_HPP_
