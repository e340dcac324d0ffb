#pragma once

#include <cstdint>
#include <optional>

#include "cgt/bsgs.hpp"

namespace cgt {

/// Limits for backtrack searches. Exceeding a limit raises BudgetExhausted;
/// a budgeted search either answers definitively or aborts, never guesses.
/// Default is unlimited.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;

  bool unlimited() const { return !max_nodes && !max_seconds; }
};

/// The centralizer of g inside the chain's group, as a verified chain of its
/// own. g must have the chain's degree but need not lie in the group
/// (centralizer-in-subgroup searches pass outside elements).
///
/// Every generator of the result is checked to commute with g by direct
/// composition before returning.
StabilizerChain centralizer(const StabilizerChain& chain, const Perm& g,
                            const SearchBudget& budget = {});

/// Some x in the chain's group with x^-1 g x == h, or nullopt when g and h
/// are not conjugate. Never a false negative: nullopt means the pruned search
/// tree was exhausted. A cycle-type prefilter answers most non-conjugate
/// pairs without searching; any returned element is verified by direct
/// composition.
std::optional<Perm> conjugating_element(const StabilizerChain& chain, const Perm& g,
                                        const Perm& h, const SearchBudget& budget = {});

}  // namespace cgt
