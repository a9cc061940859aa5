// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Shared vocabulary: index types, the error type, partitions and a small
// union-find used by every module.

#ifndef MTOPOS_COMMON_HPP_
#define MTOPOS_COMMON_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtopos {

  //! Elements of monoids and of M-sets are contiguous indices from 0.
  using index_type = std::uint32_t;

  //! A sorted, duplicate-free list of indices.
  using ElementSet = std::vector<index_type>;

  //! A function between finite carriers, stored as its table of values.
  using Map = std::vector<index_type>;

  enum class error_code {
    assoc_violation,
    identity_violation,
    range_error,
    empty_seed,
    monoid_mismatch,
    endpoint_mismatch,
    not_sub_mset,
    not_equivariant,
    shape_mismatch,
    cap_exceeded,
    bound_too_small,
    index_error,
    parse_error,
    io_error
  };

  //! Short stable name of an error code, e.g. "AssocViolation".
  char const* error_name(error_code code) noexcept;

  //! The single exception type thrown by the library.
  //!
  //! `what()` always starts with the error name followed by the details,
  //! so that diagnostics such as "AssocViolation a=1 b=2 c=1" can be shown
  //! verbatim.
  class MtoposError : public std::runtime_error {
   public:
    MtoposError(error_code code, std::string const& detail);

    error_code code() const noexcept {
      return code_;
    }

   private:
    error_code code_;
  };

  //! A partition of {0, ..., n - 1} into classes with ids 0, ..., count - 1.
  //!
  //! Class ids are normalised so that they appear in order of first
  //! occurrence; two partitions are equal iff their class arrays are equal.
  struct Partition {
    std::vector<index_type> class_of;
    std::size_t             count = 0;

    static Partition discrete(std::size_t n);
    //! Renumber arbitrary labels into first-occurrence order.
    static Partition from_labels(std::vector<index_type> const& labels);

    std::size_t size() const noexcept {
      return class_of.size();
    }
    //! The members of each class, each list sorted.
    std::vector<ElementSet> classes() const;

    bool operator==(Partition const&) const = default;
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n);
      index_type find(index_type x);
      //! Returns true if x and y were in different classes.
      bool unite(index_type x, index_type y);
      Partition partition();

     private:
      std::vector<index_type> parent_;
    };

    //! Number of set bits in a 64-bit mask.
    int popcount(std::uint64_t mask) noexcept;
  }  // namespace detail

}  // namespace mtopos

#endif  // MTOPOS_COMMON_HPP_
