// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// Bounded checks that a functor from right M-sets to sets preserves a
// finite limit or colimit construction, over a deterministic stream of
// instances.

#ifndef MTOPOS_PRESERVATION_HPP_
#define MTOPOS_PRESERVATION_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mset.hpp"

namespace mtopos {

  //! Evidence attached to a failed (or notable) check: a description, the
  //! M-sets involved and the maps that exhibit the failure.
  struct Witness {
    std::string            description;
    std::vector<RightMSet> objects;
    std::vector<Map>       maps;
  };

  //! \brief A functor from right M-sets to finite sets.
  //!
  //! `object(X)` is |F(X)| and `arrow(f)` is F(f) as a table of values.
  struct SetFunctor {
    std::string                                  name;
    std::function<std::size_t(RightMSet const&)> object;
    std::function<Map(MSetMorphism const&)>      arrow;
  };

  //! Gamma: fixed points, with F(f) the restriction of f.
  SetFunctor gamma_functor();
  //! C: connected components, with the induced map on components.
  SetFunctor components_functor();

  //! \brief Size limits for the instance streams.
  struct StreamBounds {
    //! Largest M-set from the exhaustive pool used for monos and epis.
    std::size_t mset_size = 5;
    //! Largest factor in blind binary products and powers.
    std::size_t pair_size = 3;
    //! Largest object in blind equalizer and pullback diagrams.
    std::size_t morphism_size = 2;
    //! Largest carrier of a power X^k that will be built.
    std::size_t power_cap = 256;
  };

  //! \brief All right M-sets of each size up to isomorphism, built lazily.
  class MSetPool {
   public:
    explicit MSetPool(Monoid monoid) : monoid_(std::move(monoid)) {}

    Monoid const& monoid() const noexcept {
      return monoid_;
    }

    //! The M-sets with exactly k elements, in canonical order.
    std::vector<RightMSet> const& of_size(std::size_t k);

    //! The M-sets with 0, 1, ..., k elements, smallest first.
    std::vector<RightMSet> up_to(std::size_t k);

   private:
    Monoid                                        monoid_;
    std::map<std::size_t, std::vector<RightMSet>> by_size_;
  };

  enum class Construct { mono, epi, product, equalizer, pullback, power, terminal };

  char const* construct_name(Construct c) noexcept;

  //! Outcome of a preservation check.
  struct PreservationResult {
    bool                   preserved = true;
    std::size_t            instances = 0;
    std::optional<Witness> witness;  // the first failing instance
  };

  //! \brief Check that F preserves a construction on every instance.
  //!
  //! The stream is deterministic. Targeted instances come first:
  //!   mono:      inclusions of the sub-M-sets of M;
  //!   epi:       M -> 1 and the quotients of M;
  //!   product:   M x M;
  //!   equalizer: the pairs of left multiplications m1., m2. : M -> M;
  //!   pullback:  M -> 1 <- M and the cospans m1. : M -> M <- M : m2.;
  //!   power:     M^2 and M^|M| (when within power_cap);
  //!   terminal:  1.
  //! Then the exhaustive pool up to the bounds: sub-M-set inclusions and
  //! congruence quotients of every pooled M-set, products of pairs, powers
  //! X^2 and X^3, and every parallel pair or cospan of morphisms between
  //! pooled M-sets. The first failing instance is returned as the witness.
  //! Throws BoundTooSmall if the stream is empty.
  PreservationResult check_preservation(SetFunctor const&   functor,
                                        Construct           construct,
                                        MSetPool&           pool,
                                        StreamBounds const& bounds);

  //! The comparison test for a single instance of each construction.
  bool preserves_mono(SetFunctor const& f, MSetMorphism const& mono);
  bool preserves_epi(SetFunctor const& f, MSetMorphism const& epi);
  bool preserves_product(SetFunctor const& f, Product const& prod);
  bool preserves_equalizer(SetFunctor const&   f,
                           MSetMorphism const& a,
                           MSetMorphism const& b);
  bool preserves_pullback(SetFunctor const&   f,
                          MSetMorphism const& a,
                          MSetMorphism const& b);
  bool preserves_power(SetFunctor const& f,
                       RightMSet const&  x,
                       std::size_t       k,
                       std::size_t       cap);
  bool preserves_terminal(SetFunctor const& f, Monoid const& m);

  //! The k projections X^k -> X for the indexing of power().
  std::vector<MSetMorphism> power_projections(RightMSet const& x,
                                              RightMSet const& xk,
                                              std::size_t      k);

}  // namespace mtopos

#endif  // MTOPOS_PRESERVATION_HPP_
