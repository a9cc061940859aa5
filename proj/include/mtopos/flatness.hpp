// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Tensor products of M-sets, the tensor-hom adjunction, the flatness
// notions for left M-sets and the category of points.

#ifndef MTOPOS_FLATNESS_HPP_
#define MTOPOS_FLATNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mset.hpp"
#include "preservation.hpp"

namespace mtopos {

  //! \brief A tensor product A (x)_M B.
  //!
  //! The pair (a, b) has index a * |B| + b and `classes` is the finest
  //! partition with (a m, b) ~ (a, m b). When B is a biset, `action` is the
  //! induced right action (a (x) b) n = a (x) (b n).
  struct TensorResult {
    Partition                classes;
    std::size_t              left_size  = 0;  // |A|
    std::size_t              right_size = 0;  // |B|
    std::optional<RightMSet> action;

    std::size_t size() const noexcept {
      return classes.count;
    }

    index_type class_of(index_type a, index_type b) const {
      return classes.class_of[a * right_size + b];
    }
  };

  //! Throws MonoidMismatch.
  TensorResult tensor(RightMSet const& a, LeftMSet const& b);

  //! Y (x)_M B as a right N-set. Throws MonoidMismatch.
  TensorResult tensor(RightMSet const& y, BiSet const& b);

  //! The map A (x) B -> A' (x) B induced by f : A -> A'.
  Map tensor_arrow(MSetMorphism const& f, LeftMSet const& b);

  //! The functor - (x)_M B : right M-sets -> sets.
  SetFunctor tensor_functor(LeftMSet const& b);

  //! \brief Hom_N(B, X) as a right M-set.
  //!
  //! Elements are the N-equivariant maps B -> X, sorted, with the action
  //! (k m)(b) = k(m b).
  struct HomIntoResult {
    RightMSet        object;
    std::vector<Map> maps;
  };

  //! Throws MonoidMismatch unless X is over the right monoid of B.
  HomIntoResult hom_into(BiSet const& b, RightMSet const& x);

  //! Result of checking the tensor-hom bijection on one pair (Y, X).
  struct AdjunctionCheck {
    bool        ok          = true;
    std::size_t left_count  = 0;  // |Hom_N(Y (x) B, X)|
    std::size_t right_count = 0;  // |Hom_M(Y, Hom_N(B, X))|
    std::string failure;
  };

  //! \brief Check Hom_N(Y (x)_M B, X) = Hom_M(Y, Hom_N(B, X)).
  //!
  //! Every h on the left is sent to y |-> (b |-> h(y (x) b)), every k on
  //! the right to y (x) b |-> k(y)(b); the check passes when both images
  //! are equivariant and land in the other hom-set, and both composites are
  //! identities.
  AdjunctionCheck tensor_hom_adjunction_check(BiSet const&     b,
                                              RightMSet const& y,
                                              RightMSet const& x);

  //! The filtering conditions for a left M-set, with the first failure.
  struct FilteringResult {
    bool flat = false;
    //! 0 if flat, otherwise the failed condition: 1 nonempty, 2 any two
    //! elements have a common ancestor, 3 any pair m1, m2 agreeing on b is
    //! equalized above b.
    int                     failed_condition = 0;
    std::vector<index_type> witness;  // elements or monoid elements involved
  };

  //! \brief Test the filtering conditions on B:
  //! (1) B is nonempty; (2) for all b1, b2 there are c, m1, m2 with
  //! m1 c = b1 and m2 c = b2; (3) for all m1, m2, b with m1 b = m2 b there
  //! are h, c with m1 h = m2 h and h c = b.
  FilteringResult is_flat(LeftMSet const& b);

  //! \brief The flatness notions of a left M-set, decided two ways.
  //!
  //! The functional flags test whether - (x) B preserves each construction
  //! over the instance streams of check_preservation. The structural flags
  //! use the filtering test: pullback-flat iff every component is flat, and
  //! flat iff indecomposable and pullback-flat. `consistent` records
  //! whether both routes agree; a mismatch is listed in `notes`.
  struct FlatnessProfile {
    bool indecomposable       = false;
    bool mono_flat            = false;
    bool fin_product_flat     = false;
    bool product_flat_bounded = false;
    bool equalizer_flat       = false;
    bool pullback_flat        = false;
    bool flat                 = false;
    bool projective           = false;

    FilteringResult          filtering;
    bool                     consistent = true;
    std::vector<std::string> notes;
  };

  FlatnessProfile flatness_profile(LeftMSet const&     b,
                                   MSetPool&           pool,
                                   StreamBounds const& bounds);

  //! Is X a coproduct of sets M e for idempotents e?
  bool is_projective(LeftMSet const& x);

  //! \brief Flat left M-sets up to a size bound, with all morphisms.
  struct PointsCategory {
    std::size_t           bound = 0;
    std::vector<LeftMSet> objects;
    //! homs[i][j] = number of left M-set maps objects[i] -> objects[j].
    std::vector<std::vector<std::size_t>> homs;
    std::optional<std::size_t>            initial;
    std::optional<std::size_t>            terminal;
    //! The essential points M e, one per isomorphism class.
    std::vector<LeftMSet> essential;
    //! For each entry of `essential`, an idempotent e that produces it.
    std::vector<index_type> essential_idempotent;
    //! Index into `essential` of an essential point that is terminal among
    //! the essential points, if any.
    std::optional<std::size_t> terminal_essential;
  };

  //! Throws RangeError if bound == 0.
  PointsCategory enumerate_points(Monoid const& m, std::size_t bound);

  //! The left M-set M e (labelled "Me").
  LeftMSet principal_left_mset(Monoid const& m, index_type e);

}  // namespace mtopos

#endif  // MTOPOS_FLATNESS_HPP_
