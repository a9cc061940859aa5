// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Finite monoids given by multiplication tables, and the element-level
// properties and closures that the topos-theoretic characterisations reduce
// to.

#ifndef MTOPOS_MONOID_HPP_
#define MTOPOS_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "common.hpp"

namespace mtopos {

  //! \brief A finite monoid.
  //!
  //! Elements are the indices 0, ..., order() - 1 and the identity may sit at
  //! any index. Instances are immutable and cheap to copy: the table is
  //! shared between copies. Construct them with validate_monoid(), or with
  //! Monoid::unchecked() when the laws are already known to hold.
  class Monoid {
   public:
    //! Wrap a row-major table without checking the monoid laws.
    static Monoid unchecked(std::size_t             order,
                            std::vector<index_type> table,
                            index_type              identity);

    std::size_t order() const noexcept {
      return order_;
    }

    index_type identity() const noexcept {
      return identity_;
    }

    //! The product a * b.
    index_type mul(index_type a, index_type b) const noexcept {
      return (*table_)[a * order_ + b];
    }

    //! Row-major multiplication table: entry a * order() + b is a * b.
    std::span<index_type const> table() const noexcept {
      return *table_;
    }

    std::vector<std::vector<index_type>> rows() const;

    //! Structural equality: same order, identity and table.
    bool operator==(Monoid const& that) const noexcept;

   private:
    Monoid(std::size_t                                    order,
           std::shared_ptr<std::vector<index_type> const> table,
           index_type                                     identity)
        : order_(order), identity_(identity), table_(std::move(table)) {}

    std::size_t                                    order_;
    index_type                                     identity_;
    std::shared_ptr<std::vector<index_type> const> table_;
  };

  //! \brief Check a raw table and return it as a Monoid.
  //!
  //! Checks, in this order: the table is square and non-empty with entries
  //! in range (RangeError), the identity law (IdentityViolation a=...), and
  //! associativity scanning (a, b, c) lexicographically (AssocViolation
  //! a=.. b=.. c=..). The first failure found is thrown.
  Monoid validate_monoid(std::vector<std::vector<std::int64_t>> const& rows,
                         std::int64_t identity);

  //! Element classes found by a direct scan of the table.
  struct ElementClasses {
    ElementSet                idempotents;
    ElementSet                right_absorbing;  // r with r * n = r for all n
    ElementSet                left_absorbing;   // l with n * l = l for all n
    std::optional<index_type> zero;
  };

  ElementClasses element_classes(Monoid const& m);

  //! The opposite monoid, with table'[a][b] = table[b][a].
  Monoid opposite(Monoid const& m);

  //! The direct product M x N; the pair (a, b) has index a * |N| + b.
  Monoid direct_product(Monoid const& m, Monoid const& n);

  bool is_commutative(Monoid const& m);
  bool is_group(Monoid const& m);
  //! m1 M and m2 M intersect for every m1, m2.
  bool is_right_ore(Monoid const& m);
  //! M m1 and M m2 intersect for every m1, m2.
  bool is_left_ore(Monoid const& m);
  //! For every m1, m2 there is m with m1 m = m2 m.
  bool is_right_collapsible(Monoid const& m);
  bool is_left_cancellative(Monoid const& m);
  bool is_right_cancellative(Monoid const& m);

  //! The principal right ideal xM.
  ElementSet principal_right_ideal(Monoid const& m, index_type x);

  //! Least submonoid containing `seed`. Throws EmptySeed if `seed` is empty.
  ElementSet submonoid_closure(Monoid const& m, ElementSet const& seed);

  //! \brief Least right-factorable submonoid containing `seed`.
  //!
  //! Iterates S_{i+1} = { m : t m in <S_i> for some t in <S_i> } from
  //! S_0 = seed until the sets stabilise. A subset S is right-factorable if
  //! x in S and x y in S imply y in S.
  ElementSet right_factorable_closure(Monoid const& m, ElementSet const& seed);

  //! A right congruence on the elements of a monoid.
  struct RightCongruence {
    Partition partition;

    index_type class_of(index_type x) const {
      return partition.class_of[x];
    }
    //! The class containing x, sorted.
    ElementSet class_members(index_type x) const;
  };

  //! Least right congruence relating each given pair.
  RightCongruence
  congruence_from_pairs(Monoid const&                                     m,
                        std::vector<std::pair<index_type, index_type>> const& pairs);

  //! \brief A smallest seed whose right-factorable closure is all of M.
  //!
  //! Subsets are tried by increasing size and, within a size, in
  //! lexicographic order of their sorted index tuples.
  ElementSet minimal_rf_generating_set(Monoid const& m);

  //! A generating set for M as a monoid, chosen greedily by index.
  ElementSet monoid_generators(Monoid const& m);

  //! Is `s` closed under the right-factor rule?
  bool is_right_factorable(Monoid const& m, ElementSet const& s);

}  // namespace mtopos

#endif  // MTOPOS_MONOID_HPP_
