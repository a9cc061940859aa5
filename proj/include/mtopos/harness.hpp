// mtopos - finite monoid actions and the structure of their presheaf toposes
//
// For each characterisation theorem, compute every characterising condition
// independently and compare the verdicts, for one monoid or for every
// monoid up to a given order.

#ifndef MTOPOS_HARNESS_HPP_
#define MTOPOS_HARNESS_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monoid.hpp"
#include "preservation.hpp"

namespace mtopos {

  //! Size limits for the conditions that quantify over M-sets.
  struct Bounds {
    //! Largest M-set in the exhaustive pool.
    std::size_t mset_size = 5;
    //! Largest factor in blind products, powers and pairs of M-sets.
    std::size_t pair_size = 3;
    //! Largest object in blind equalizer and pullback diagrams.
    std::size_t morphism_size = 2;
    //! Largest P and Q for the exponential comparison.
    std::size_t theta_size = 2;
    //! Largest flat left M-set in the points category; 0 means |M|.
    std::size_t points_bound = 0;
    //! Largest carrier of a power X^k.
    std::size_t power_cap = 256;
    //! Largest exponential carrier.
    std::size_t exponential_cap = 1'000'000;
    //! Largest seed for the closure identity.
    std::size_t subset_size = 2;

    StreamBounds stream() const {
      return StreamBounds{mset_size, pair_size, morphism_size, power_cap};
    }
  };

  //! \brief The topos properties of the presheaf topos of M.
  //!
  //! Each flag comes from the element-level side of its characterisation.
  struct PropertyProfile {
    bool boolean_atomic         = false;  // M is a group
    bool local                  = false;  // right absorbing element
    bool colocal                = false;  // left absorbing element
    bool bilocal                = false;  // zero element
    bool de_morgan              = false;  // right Ore
    bool strongly_connected     = false;  // M x M indecomposable
    bool totally_connected      = false;  // right collapsible
    bool sufficiently_cohesive  = false;  // two right absorbing elements
    bool punctually_lc          = false;  // alpha epic
    bool copunctually_lc        = false;  // alpha monic
    bool left_cancellative      = false;  // etendue
    bool right_cancellative     = false;  // locally decidable
    bool trivial                = false;
    std::size_t minimal_rf_generating_size = 0;

    //! The flags by name, in declaration order.
    std::vector<std::pair<std::string, bool>> flags() const;
  };

  PropertyProfile profile(Monoid const& m);

  //! \brief Violated profile invariants and dualities, empty if none.
  //!
  //! Checks the implications between the flags and that the left-sided
  //! element properties of M equal the right-sided ones of opposite(M).
  std::vector<std::string> profile_violations(Monoid const&          m,
                                              PropertyProfile const& p);

  enum class ConditionKind { decidable, bounded };

  //! One characterising condition evaluated on one monoid.
  struct ConditionResult {
    std::string   id;
    ConditionKind kind  = ConditionKind::decidable;
    bool          value = false;
    //! True if the condition could not be evaluated within the caps.
    bool skipped = false;
    //! For bounded conditions: whether a failure of the property is
    //! certain to show up within the bounds used.
    bool                   guaranteed = false;
    std::string            guarantee;  // the construction that ensures it
    std::optional<Witness> witness;
    std::string            note;
  };

  enum class Agreement {
    agree,                 // every evaluated condition matches
    unconfirmed_at_bound,  // a bounded check saw no counterexample
    refuted,               // a bounded check found a counterexample
    disagree               // decidable conditions, or a guaranteed bound, differ
  };

  char const* agreement_name(Agreement a) noexcept;

  struct TheoremReport {
    std::string                  id;
    std::vector<ConditionResult> conditions;
    //! The common value of the decidable conditions.
    bool      verdict   = false;
    Agreement agreement = Agreement::agree;

    //! Refuted or disagreeing.
    bool is_disagreement() const noexcept {
      return agreement == Agreement::refuted
             || agreement == Agreement::disagree;
    }
  };

  //! \brief Evaluates the theorems for one monoid, sharing the M-set pool
  //! and other intermediate results between them.
  class TheoremChecker {
   public:
    TheoremChecker(Monoid monoid, Bounds bounds);
    ~TheoremChecker();
    TheoremChecker(TheoremChecker&&) noexcept;
    TheoremChecker& operator=(TheoremChecker&&) noexcept;

    TheoremReport boolean();
    TheoremReport strongly_compact();
    TheoremReport local();
    TheoremReport de_morgan();
    TheoremReport strongly_connected();
    TheoremReport totally_connected();
    TheoremReport colocal();
    TheoremReport bilocal();
    TheoremReport trivial();
    TheoremReport locally_decidable();
    TheoremReport etendue();

    //! All of the above, in that order.
    std::vector<TheoremReport> all();

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
  };

  TheoremReport check_boolean(Monoid const& m, Bounds const& b = {});
  TheoremReport check_strongly_compact(Monoid const& m, Bounds const& b = {});
  TheoremReport check_local(Monoid const& m, Bounds const& b = {});
  TheoremReport check_de_morgan(Monoid const& m, Bounds const& b = {});
  TheoremReport check_strongly_connected(Monoid const& m, Bounds const& b = {});
  TheoremReport check_totally_connected(Monoid const& m, Bounds const& b = {});
  TheoremReport check_colocal(Monoid const& m, Bounds const& b = {});
  TheoremReport check_bilocal(Monoid const& m, Bounds const& b = {});
  TheoremReport check_trivial(Monoid const& m, Bounds const& b = {});
  //! Right cancellativity (locally decidable) and left cancellativity
  //! (etendue), each with its M-set side.
  std::vector<TheoremReport> check_cancellativity(Monoid const& m,
                                                  Bounds const& b = {});

  //! Results for one monoid in a suite run.
  struct MonoidEntry {
    Monoid                     monoid;  // canonical table, identity 0
    std::string                canonical_hex;
    PropertyProfile            profile;
    std::vector<std::string>   profile_violations;
    std::vector<TheoremReport> theorems;
  };

  struct SuiteReport {
    std::size_t              max_order = 0;
    Bounds                   bounds;
    std::vector<MonoidEntry> entries;  // by order, then canonical form
    //! counts[order][flag] = number of monoids of that order with the flag.
    std::map<std::size_t, std::map<std::string, std::size_t>> counts;
    std::map<std::size_t, std::size_t>                        monoids_per_order;
    //! "order/hex/theorem" for every disagreement or profile violation.
    std::vector<std::string> disagreements;
    //! Bounded conditions that were skipped, as "order/hex/theorem/condition".
    std::vector<std::string> skipped;
    //! Bounded conditions left unconfirmed, same format.
    std::vector<std::string> unconfirmed;
    //! Statements of the theory that this suite cannot test.
    std::vector<std::string> out_of_scope;
  };

  //! Largest order accepted by run_suite.
  inline constexpr std::size_t max_suite_order = 5;

  //! \brief Run the profile and every theorem on all monoids up to
  //! `max_order`. Throws CapExceeded above max_suite_order.
  //!
  //! `progress`, if set, is called after each monoid with the number done
  //! and the total.
  SuiteReport run_suite(std::size_t   max_order,
                        Bounds const& bounds = {},
                        std::function<void(std::size_t, std::size_t)> const&
                            progress = {});

}  // namespace mtopos

#endif  // MTOPOS_HARNESS_HPP_
