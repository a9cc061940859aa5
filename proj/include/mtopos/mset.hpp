// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Finite right and left M-sets, bisets, equivariant maps, finite limits and
// colimits, decomposition into components and the functors Gamma, Delta
// and C.

#ifndef MTOPOS_MSET_HPP_
#define MTOPOS_MSET_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "common.hpp"
#include "monoid.hpp"

namespace mtopos {

  //! \brief A finite right M-set.
  //!
  //! The carrier is {0, ..., size() - 1} and act(x, m) is x * m. The action
  //! table is shared between copies. The empty M-set (size 0) is allowed
  //! and every operation in this library accepts it.
  class RightMSet {
   public:
    //! Validate a k x n action table (row x holds x * m for every m).
    //!
    //! Throws RangeError for a malformed table, IdentityViolation if
    //! x * 1 != x, and AssocViolation if (x * m) * m' != x * (m m').
    RightMSet(Monoid                                        monoid,
              std::vector<std::vector<std::int64_t>> const& rows);

    //! Wrap a flat row-major k x n table without checking the laws.
    static RightMSet unchecked(Monoid                  monoid,
                               std::size_t             size,
                               std::vector<index_type> action);

    Monoid const& monoid() const noexcept {
      return monoid_;
    }

    std::size_t size() const noexcept {
      return size_;
    }

    bool empty() const noexcept {
      return size_ == 0;
    }

    index_type act(index_type x, index_type m) const noexcept {
      return (*action_)[x * monoid_.order() + m];
    }

    //! Row-major table: entry x * |M| + m is x * m.
    std::span<index_type const> action() const noexcept {
      return *action_;
    }

    std::vector<std::vector<index_type>> rows() const;

    //! Optional human-readable name, used in witnesses.
    std::string const& label() const noexcept {
      return label_;
    }

    RightMSet with_label(std::string label) const;

    //! Same monoid table and same action table (labels are ignored).
    bool operator==(RightMSet const& that) const noexcept;

   private:
    RightMSet(Monoid                                         monoid,
              std::size_t                                    size,
              std::shared_ptr<std::vector<index_type> const> action)
        : monoid_(std::move(monoid)),
          size_(size),
          action_(std::move(action)) {}

    Monoid                                         monoid_;
    std::size_t                                    size_;
    std::shared_ptr<std::vector<index_type> const> action_;
    std::string                                    label_;
  };

  //! \brief A finite left M-set.
  //!
  //! Stored as the right M^op-set with the same action, so every left-set
  //! computation is the corresponding right-set computation over opposite(M).
  class LeftMSet {
   public:
    //! Validate an n x k action table (row m holds m * x for every x).
    LeftMSet(Monoid                                        monoid,
             std::vector<std::vector<std::int64_t>> const& rows);

    //! View a right M^op-set as a left M-set; `monoid` is M itself.
    static LeftMSet from_right(Monoid monoid, RightMSet over_opposite);

    Monoid const& monoid() const noexcept {
      return monoid_;
    }

    std::size_t size() const noexcept {
      return right_.size();
    }

    index_type act(index_type m, index_type x) const noexcept {
      return right_.act(x, m);
    }

    //! The same action regarded as a right M^op-set.
    RightMSet const& as_right() const noexcept {
      return right_;
    }

    bool operator==(LeftMSet const& that) const noexcept {
      return monoid_ == that.monoid_ && right_ == that.right_;
    }

   private:
    LeftMSet(Monoid monoid, RightMSet right)
        : monoid_(std::move(monoid)), right_(std::move(right)) {}

    Monoid    monoid_;
    RightMSet right_;
  };

  //! \brief A left-M right-N biset.
  //!
  //! Both actions are checked, together with (m * b) * n = m * (b * n).
  class BiSet {
   public:
    BiSet(LeftMSet left, RightMSet right);

    Monoid const& left_monoid() const noexcept {
      return left_.monoid();
    }

    Monoid const& right_monoid() const noexcept {
      return right_.monoid();
    }

    std::size_t size() const noexcept {
      return left_.size();
    }

    LeftMSet const& left() const noexcept {
      return left_;
    }

    RightMSet const& right() const noexcept {
      return right_;
    }

   private:
    LeftMSet  left_;
    RightMSet right_;
  };

  //! \brief An equivariant map between right M-sets over the same monoid.
  class MSetMorphism {
   public:
    //! Throws MonoidMismatch, ShapeMismatch, RangeError or NotEquivariant.
    MSetMorphism(RightMSet source, RightMSet target, Map map);

    static MSetMorphism unchecked(RightMSet source, RightMSet target, Map map);

    RightMSet const& source() const noexcept {
      return source_;
    }

    RightMSet const& target() const noexcept {
      return target_;
    }

    Map const& map() const noexcept {
      return map_;
    }

    index_type operator()(index_type x) const noexcept {
      return map_[x];
    }

    bool is_injective() const;
    bool is_surjective() const;

   private:
    struct no_check {};
    MSetMorphism(RightMSet source, RightMSet target, Map map, no_check);

    RightMSet source_;
    RightMSet target_;
    Map       map_;
  };

  //! g after f. Throws EndpointMismatch unless f.target() == g.source().
  MSetMorphism compose(MSetMorphism const& g, MSetMorphism const& f);
  MSetMorphism identity_morphism(RightMSet const& x);

  ////////////////////////////////////////////////////////////////////////
  // Standard objects
  ////////////////////////////////////////////////////////////////////////

  //! M acting on itself by right multiplication.
  RightMSet regular(Monoid const& m);
  //! The one-point M-set.
  RightMSet terminal(Monoid const& m);
  //! The M-set with no elements.
  RightMSet empty_mset(Monoid const& m);
  //! Delta(k): k points, each fixed by every element.
  RightMSet trivial_action(Monoid const& m, std::size_t k);

  //! M acting on itself by left multiplication.
  LeftMSet left_regular(Monoid const& m);
  //! The one-point left M-set.
  LeftMSet left_terminal(Monoid const& m);

  //! x |-> m * x, an endomorphism of the regular right M-set.
  MSetMorphism left_multiplication(Monoid const& m, index_type element);

  //! The unique morphism X -> 1.
  MSetMorphism to_terminal(RightMSet const& x);

  ////////////////////////////////////////////////////////////////////////
  // Gamma, C and related queries
  ////////////////////////////////////////////////////////////////////////

  //! Gamma(X): the fixed points { x : x * m = x for all m }.
  ElementSet fixed_points(RightMSet const& x);
  ElementSet fixed_points(LeftMSet const& x);

  //! C(X): the classes of the equivalence generated by x ~ x * m.
  Partition connected_components(RightMSet const& x);
  Partition connected_components(LeftMSet const& x);

  bool is_indecomposable(RightMSet const& x);
  bool is_indecomposable(LeftMSet const& x);

  //! The cyclic sub-M-set x * M, sorted.
  ElementSet orbit(RightMSet const& x, index_type element);

  //! \brief Length of the shortest scheme joining a to b.
  //!
  //! One step joins a and b when both lie in c * M for some c. Returns 0
  //! when a == b and no value when a and b lie in different components.
  //! Throws IndexError for an element outside the carrier.
  std::optional<std::size_t>
  scheme_distance(RightMSet const& x, index_type a, index_type b);

  ////////////////////////////////////////////////////////////////////////
  // Limits and colimits
  ////////////////////////////////////////////////////////////////////////

  struct Coproduct {
    RightMSet    object;
    MSetMorphism left;   // X -> X + Y, x |-> x
    MSetMorphism right;  // Y -> X + Y, y |-> |X| + y
  };

  //! Throws MonoidMismatch.
  Coproduct coproduct(RightMSet const& x, RightMSet const& y);

  //! Coproduct of left M-sets, computed over the opposite monoid.
  LeftMSet coproduct(LeftMSet const& x, LeftMSet const& y);

  struct Product {
    RightMSet    object;
    MSetMorphism first;   // X x Y -> X
    MSetMorphism second;  // X x Y -> Y
  };

  //! The pair (x, y) has index x * |Y| + y. Throws MonoidMismatch.
  Product product(RightMSet const& x, RightMSet const& y);

  //! \brief X^k with the diagonal action.
  //!
  //! The tuple (x_0, ..., x_{k-1}) has index sum x_i |X|^(k-1-i). Throws
  //! CapExceeded if |X|^k exceeds `cap`.
  RightMSet power(RightMSet const& x, std::size_t k, std::size_t cap);

  //! A sub-M-set together with its inclusion.
  struct SubMSet {
    RightMSet    object;
    MSetMorphism inclusion;
  };

  //! The equalizer of f, g : X -> Y. Throws EndpointMismatch.
  SubMSet equalizer(MSetMorphism const& f, MSetMorphism const& g);

  struct Pullback {
    RightMSet    object;
    MSetMorphism first;   // P -> X
    MSetMorphism second;  // P -> Y
  };

  //! The pullback of f : X -> Z and g : Y -> Z, as a subset of X x Y with
  //! the same pair indexing order. Throws EndpointMismatch.
  Pullback pullback(MSetMorphism const& f, MSetMorphism const& g);

  //! The restriction of X to `elements`. Throws NotSubMSet unless the set is
  //! closed under the action, and IndexError for elements out of range.
  SubMSet sub_mset(RightMSet const& x, ElementSet const& elements);

  //! Is `elements` closed under the action?
  bool is_sub_mset(RightMSet const& x, ElementSet const& elements);

  //! \brief Every sub-M-set of X, as bit masks sorted increasingly.
  //!
  //! Includes the empty set and X itself. Requires |X| <= 64.
  std::vector<std::uint64_t> sub_msets(RightMSet const& x);

  //! Mask to sorted element list.
  ElementSet mask_elements(std::uint64_t mask);

  //! The image of a morphism, as a sub-M-set of the target.
  ElementSet image(MSetMorphism const& f);

  //! A quotient together with its projection.
  struct Quotient {
    RightMSet    object;
    MSetMorphism projection;
  };

  //! Least action-compatible coarsening of a partition.
  Partition close_partition(RightMSet const& x, Partition const& classes);

  //! \brief X divided by the least congruence containing `classes`.
  //!
  //! The partition is first closed under x ~ y => x m ~ y m. Class ids of
  //! the closed partition are the elements of the quotient.
  Quotient quotient(RightMSet const& x, Partition const& classes);

  //! Every action-compatible partition of X, in restricted-growth order.
  std::vector<Partition> congruences(RightMSet const& x);

  //! \brief The restriction of X to each of its components.
  //!
  //! Parts are listed in order of their smallest element.
  std::vector<SubMSet> decompose(RightMSet const& x);

  ////////////////////////////////////////////////////////////////////////
  // Morphism search
  ////////////////////////////////////////////////////////////////////////

  //! \brief All equivariant maps X -> Y, sorted lexicographically.
  //!
  //! Backtracks over one generator of each orbit still unassigned, and
  //! fixes the value on the whole orbit x * M at once. If `limit` is
  //! non-zero the search stops after that many maps. Throws MonoidMismatch.
  std::vector<Map>
  hom_maps(RightMSet const& x, RightMSet const& y, std::size_t limit = 0);

  //! hom_maps wrapped as morphisms.
  std::vector<MSetMorphism> hom_set(RightMSet const& x, RightMSet const& y);

  //! |Hom(X, Y)|.
  std::size_t count_homs(RightMSet const& x, RightMSet const& y);

  //! An isomorphism X -> Y, if any. Rejects on cheap invariants first.
  std::optional<Map> find_isomorphism(RightMSet const& x, RightMSet const& y);

  bool are_isomorphic(RightMSet const& x, RightMSet const& y);

  //! The principal right ideal e * M as a right M-set (labelled "eM").
  RightMSet principal_mset(Monoid const& m, index_type e);

  //! \brief Is X a coproduct of sets e M for idempotents e?
  //!
  //! Each component is compared with every e M up to isomorphism.
  bool is_projective(RightMSet const& x);

  //! The congruence quotient of M that identifies all of m1 M and all of
  //! m2 M. It has two distinct fixed points in one component exactly when
  //! m1 M and m2 M are disjoint.
  Quotient ore_witness_quotient(Monoid const& m, index_type m1, index_type m2);

}  // namespace mtopos

#endif  // MTOPOS_MSET_HPP_
