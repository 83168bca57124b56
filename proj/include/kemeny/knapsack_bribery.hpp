#pragma once

#include <cstddef>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

struct KnapsackItem {
    Cost weight = 0;
    Cost value = 0;
};

/// Select items of total weight at most `capacity` with total value at
/// least `target` (maximizing value for the optimization form).
struct KnapsackInstance {
    std::vector<KnapsackItem> items;
    Cost capacity = 0;
    Cost target = 0;
};

/// Item i <- ranking i with weight cost(R_i) and value kendall_tau(X, R_i);
/// capacity = budget, target = max(D - k, 0) where D is the profile distance.
/// The item index doubles as the ranking index for witness mapping.
KnapsackInstance reduce_dollar_to_knapsack(const ManipulationInstance& inst);

struct KnapsackSolution {
    Cost best_value = 0;
    std::vector<std::size_t> chosen; // ascending item indices
};

/// Exact value-indexed DP: for every value v it keeps the minimum weight of
/// a subset reaching total value at least v, then reports the largest value
/// whose minimum weight fits the capacity. Witness ties go to the
/// lexicographically smallest index set among minimum-weight witnesses.
KnapsackSolution solve_knapsack_value_dp(const KnapsackInstance& kp);

struct BriberyResult {
    bool yes = false;
    Cost min_cost = 0;                  // cheapest manipulation reaching distance <= k
    std::vector<std::size_t> rankings;  // bribed / deleted ranking indices, ascending
    long long residual_distance = 0;    // profile distance after applying the witness
};

/// $-bribery: replace a cheapest set of rankings by the target so that the
/// remaining distance is at most k; YES iff that cost fits the budget.
BriberyResult solve_dollar_bribery(const ManipulationInstance& inst);

/// Ranking deletion: same arithmetic as $-bribery (a deleted ranking and a
/// ranking rewritten to the target both contribute zero distance), witness
/// interpreted as the deleted set.
BriberyResult solve_ranking_deletion(const ManipulationInstance& inst);

} // namespace kemeny
