#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

/// Hard limits for the exhaustive solvers. An oracle refuses to run past
/// its cap instead of enumerating unbounded state spaces.
struct OracleBudget {
    std::size_t max_candidates = 6;
    std::size_t max_rankings = 5;
    std::uint64_t max_total_enumeration = 10'000'000;
};

struct PksOracleResult {
    long long min_distance = 0;
    std::vector<Ranking> extensions; // one per profile ranking
};

/// Ground truth for the extension problem: enumerate every complete ranking
/// over the candidate set and keep the ones the partial ranking is a
/// subsequence of. No structural shortcut is used.
PksOracleResult oracle_pks(const ManipulationInstance& inst, const OracleBudget& budget = {});

struct CostOracleResult {
    Cost min_cost = 0;
    std::vector<std::size_t> witness; // ranking indices or candidate ids, ascending
};

/// Minimum budget to reach distance <= k by rewriting a subset of rankings
/// to the target. 2^n subset scan.
CostOracleResult oracle_dollar(const ManipulationInstance& inst, const OracleBudget& budget = {});

struct SwapOracleResult {
    Cost min_cost = 0;
    std::vector<long long> swaps_per_ranking;
};

/// Minimum swap-bribery cost by enumerating every per-ranking swap-count
/// allocation (s_i <= kendall_tau(X, R_i)).
SwapOracleResult oracle_swap(const ManipulationInstance& inst, const OracleBudget& budget = {});

/// Minimum budget to reach distance <= k by deleting candidates, for any k
/// and any profile size. 2^m subset scan; also the only general-case
/// candidate-deletion solver in this library.
CostOracleResult oracle_candidate_deletion(const ManipulationInstance& inst, const OracleBudget& budget = {});

} // namespace kemeny
