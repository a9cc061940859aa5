// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// The subobject classifier, exponential objects and the comparison maps
// between Gamma, C and the cartesian closed structure.

#ifndef MTOPOS_TOPOS_HPP_
#define MTOPOS_TOPOS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mset.hpp"

namespace mtopos {

  //! \brief Omega: the right ideals of M under the inverse image action.
  //!
  //! Ideal i of the carrier is the bit mask `ideals[i]` (bit m set iff m is
  //! in the ideal); the masks are sorted increasingly, so the empty ideal is
  //! always element 0 and M itself is the last element. The action is
  //! I * m = { m' : m m' in I }.
  struct SubobjectClassifier {
    RightMSet                  omega;
    std::vector<std::uint64_t> ideals;
    index_type                 top;     // the ideal M
    index_type                 bottom;  // the empty ideal

    //! Index of an ideal given as a mask. Throws IndexError if absent.
    index_type index_of(std::uint64_t ideal) const;
  };

  //! \brief Build Omega for M (order at most 64).
  //!
  //! Up to order 12 every subset is tested; above that the lattice is
  //! generated from the principal right ideals by unions.
  SubobjectClassifier omega(Monoid const& m);

  //! \brief The classifying map A -> Omega of a sub-M-set of A.
  //!
  //! Sends a to { m : a m in sub }. Throws NotSubMSet if `sub` is not closed
  //! under the action.
  MSetMorphism classify(SubobjectClassifier const& omega,
                        RightMSet const&           a,
                        ElementSet const&          sub);

  //! The elements sent to the top ideal; inverse to classify().
  ElementSet pullback_of_top(SubobjectClassifier const& omega,
                             MSetMorphism const&        s);

  //! Default bound on the number of maps in an exponential carrier.
  inline constexpr std::size_t default_exponential_cap = 1'000'000;

  //! \brief The exponential Q^P.
  //!
  //! Elements are the equivariant maps f : M x P -> Q, each stored as a
  //! table with entry n * |P| + p equal to f(n, p) (the product indexing of
  //! product()). The action is (f * m)(n, p) = f(m n, p); evaluation sends
  //! (f, p) to f(1, p).
  struct Exponential {
    RightMSet        object;
    RightMSet        exponent;    // P
    RightMSet        base;        // Q
    std::vector<Map> maps;        // sorted
    MSetMorphism     evaluation;  // Q^P x P -> Q

    //! Position of a map in `maps`. Throws IndexError if absent.
    index_type index_of(Map const& f) const;
  };

  //! Throws MonoidMismatch, and CapExceeded if the carrier has more than
  //! `cap` elements.
  Exponential exponential(RightMSet const& p,
                          RightMSet const& q,
                          std::size_t      cap = default_exponential_cap);

  //! \brief The transpose X -> Q^P of f : X x P -> Q.
  //!
  //! x is sent to the map (n, p) |-> f(x n, p). Throws ShapeMismatch unless
  //! the source of f is product(x, exp.exponent).object and its target is
  //! exp.base.
  MSetMorphism exp_transpose(Exponential const&  exp,
                             RightMSet const&    x,
                             MSetMorphism const& f);

  //! The inverse of exp_transpose: (x, p) |-> g(x)(1, p).
  MSetMorphism exp_untranspose(Exponential const& exp, MSetMorphism const& g);

  //! The fixed-point-to-component map of an M-set.
  struct AlphaReport {
    ElementSet fixed;       // Gamma(X)
    Partition  components;  // C(X)
    Map        map;         // fixed[i] |-> component id
    bool       injective  = false;
    bool       surjective = false;

    bool bijective() const noexcept {
      return injective && surjective;
    }
  };

  AlphaReport alpha(RightMSet const& x);

  //! \brief The comparison C(Q^P) -> Set(C(P), C(Q)).
  //!
  //! [g] is sent to the function [p] |-> [g(1, p)]. Functions C(P) -> C(Q)
  //! are encoded as base-|C(Q)| numbers with the value at class 0 most
  //! significant.
  struct ThetaReport {
    std::size_t              components_exponential = 0;  // |C(Q^P)|
    std::size_t              function_count         = 0;  // |C(Q)|^|C(P)|
    std::vector<std::size_t> map;  // one encoded function per class
    bool                     well_defined = true;
    bool                     injective    = false;
    bool                     surjective   = false;

    bool iso() const noexcept {
      return well_defined && injective && surjective;
    }
  };

  ThetaReport theta_for_C(RightMSet const& p,
                          RightMSet const& q,
                          std::size_t      cap = default_exponential_cap);

  //! |C(Omega)|, which is 2 exactly for right Ore monoids.
  std::size_t chi_for_C(Monoid const& m);

}  // namespace mtopos

#endif  // MTOPOS_TOPOS_HPP_
