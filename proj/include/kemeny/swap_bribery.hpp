#pragma once

#include <cstddef>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

/// Base row of the swap-bribery table: cost of performing exactly s1
/// admissible swaps on the first ranking while ending within distance j of
/// the target, or infinity when s1 swaps cannot reach that distance.
Cost swap_dp_base(const ManipulationInstance& inst, long long s1, long long j);

/// The full four-axis table T[i, s1, s2, j]: minimum cost of admissible
/// swaps on the first i rankings with exactly s1 swaps on ranking i, s2
/// swaps spread over rankings 1..i-1, and the distance of the swapped
/// prefix to the target at most j. Entries breaching the per-axis bounds
/// (s1 > d_i, s2 > sum of earlier d's, s2 > 0 at i = 1) hold infinity.
///
/// The table is quadratic in the total profile distance, so construction is
/// guarded by an entry cap; the production solver below uses a collapsed
/// recurrence instead and is checked against this table on small instances.
class SwapDPTable {
public:
    explicit SwapDPTable(const ManipulationInstance& inst, std::size_t max_entries = std::size_t{1} << 24);

    Cost at(std::size_t i, long long s1, long long s2, long long j) const; // i is 1-based
    Cost min_total_cost() const;                                          // min over s1, s2 of T[n, s1, s2, k]
    std::vector<long long> backtrack_swaps() const;                       // per-ranking counts achieving the min

    std::size_t ranking_count() const { return n_; }
    long long distance(std::size_t i) const { return d_[i - 1]; } // d_i = kendall_tau(X, R_i)
    long long prefix_distance(std::size_t i) const { return prefix_[i - 1]; }

private:
    std::size_t index(std::size_t i, long long s1, long long s2, long long j) const;

    std::size_t n_ = 0;
    long long k_ = 0;
    std::vector<long long> d_;
    std::vector<long long> prefix_; // prefix_[i-1] = d_1 + ... + d_{i-1}
    std::vector<Cost> costs_;
    std::vector<Cost> entries_;
    std::size_t stride_s1_ = 0, stride_s2_ = 0, stride_j_ = 0, per_layer_ = 0;
};

struct SwapWitness {
    std::vector<long long> swaps_per_ranking;
    Cost total_cost = 0;
    std::vector<std::vector<std::size_t>> swap_script; // per ranking, adjacent positions in execution order
};

struct SwapResult {
    bool yes = false;
    Cost min_cost = 0;
    SwapWitness witness;
};

/// Minimum total cost of admissible swaps bringing the profile within
/// distance k of the target; YES iff it fits the budget. A solution always
/// exists because each ranking can be swapped all the way to the target.
/// The swap script repeats the leftmost admissible swap, so every step is
/// admissible at execution time.
SwapResult solve_swap_bribery(const ManipulationInstance& inst);

/// Independent cross-check: every admissible swap in ranking i buys one
/// unit of distance at price cost(R_i), so the cheapest repair allocates
/// the required distance drop to rankings in ascending cost order.
Cost greedy_swap_oracle(const ManipulationInstance& inst);

} // namespace kemeny
