#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

/// Outcome of extending one partial ranking toward the target.
struct ExtensionResult {
    Ranking extended;                                        // complete over the target's support
    long long distance = 0;                                  // kendall_tau(target, extended)
    std::vector<std::pair<CandidateId, std::size_t>> insert_trace; // (candidate, anchor slot) per insertion
};

/// Insert `c` into `current` at anchor slot `j`, where the anchors are the
/// candidates of the original partial ranking. Slot j means: directly after
/// the j-th anchor and after any non-anchor candidates already sitting
/// between that anchor and the next one; j = 0 places c before the first
/// anchor (after any non-anchors already there), j = |anchors| at the very
/// end.
Ranking insert_after_block(const Ranking& current, CandidateId c, std::size_t j, const Ranking& anchors);

/// Extend the partial ranking toward x with minimum Kendall tau distance.
/// Missing candidates are inserted in x-order, each at the leftmost
/// distance-minimizing slot no earlier than the previous insertion's slot.
ExtensionResult optimal_extension(const Ranking& x, const Ranking& partial);

struct PksResult {
    bool yes = false;
    long long total_distance = 0;
    std::vector<ExtensionResult> extensions;
};

/// Possible Kemeny Score: extend every (possibly partial) profile ranking
/// independently and accept iff the summed optimal distances are at most k.
PksResult solve_pks(const ManipulationInstance& inst);

} // namespace kemeny
