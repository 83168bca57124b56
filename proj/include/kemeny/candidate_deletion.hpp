#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

/// Heaviest common increasing subsequence over permutations of 1..m.
struct HCISInstance {
    std::vector<std::vector<int>> sequences; // p permutations, values 1..m
    std::vector<Cost> weight_by_value;       // size m + 1, index 0 unused
    Cost target = 0;                         // may be <= 0 (always satisfiable then)
};

/// The unique match for one value: its position in every sequence, plus the
/// best accumulated weight of a common increasing subsequence ending there.
struct Match {
    int value = 0;
    std::vector<std::size_t> positions;
    Cost rank = 0;
};

/// Positions of every value across the sequences; matches[v - 1] has value v.
std::vector<Match> compute_matches(const HCISInstance& h);

/// Strict dominance: smaller value and strictly smaller position in every
/// sequence.
bool dominates(const Match& a, const Match& b);

struct HCISResult {
    Cost best_weight = 0;
    std::vector<int> values;  // the heaviest common increasing subsequence, ascending
    std::vector<Cost> ranks;  // ranks[v] for v = 1..m (index 0 unused)
};

/// Rank DP in increasing value order: a value's rank is its weight plus the
/// best rank among matches dominating it. The empty selection (weight 0) is
/// tracked as well, so the result is never negative.
HCISResult solve_hcis(const HCISInstance& h);

/// f maps each candidate to its 1-based position in the target ranking;
/// result[id] = position of id in x.
std::vector<int> target_index_map(const Ranking& x);

/// Candidate deletion with k = 0 becomes HCIS: sequence i spells ranking i
/// in target coordinates, value weights are candidate deletion costs, and
/// the weight target is total cost minus the budget (the survivors must be
/// worth keeping).
HCISInstance reduce_cd_to_hcis(const ManipulationInstance& inst);

struct CdResult {
    bool yes = false;
    Cost min_cost = 0;                // cheapest deletion set reaching distance <= k
    std::vector<CandidateId> deleted; // ascending candidate ids
};

CdResult solve_cd_k0(const ManipulationInstance& inst);

/// Vertices are the values of the realizing permutation; edges are exactly
/// its inversion pairs.
struct PermutationGraph {
    std::vector<int> permutation;          // values 1..n
    std::vector<Cost> vertex_weights;      // size n + 1, index 0 unused
    std::vector<std::pair<int, int>> edges; // (x, y) with x < y, reversed in the permutation
};

PermutationGraph build_permutation_graph(const std::vector<int>& perm, const std::vector<Cost>& vertex_weights);

/// Weighted partial vertex cover: a vertex set of weight at most
/// weight_budget covering at least coverage_target edges.
struct WPVCInstance {
    PermutationGraph graph;
    Cost weight_budget = 0;
    long long coverage_target = 0;
};

/// WPVC on a permutation graph as a single-ranking candidate-deletion
/// instance: target = 1 > 2 > ... > n, the one ranking spells the
/// permutation, and k = |E| - t.
ManipulationInstance reduce_wpvc_to_cd(const WPVCInstance& w);

/// The reverse construction for |R| = 1: t = max(|E| - k, 0).
WPVCInstance reduce_cd_to_wpvc(const ManipulationInstance& inst);

struct WpvcResult {
    bool yes = false;
    Cost min_weight = 0;        // lightest set covering coverage_target edges
    std::vector<int> vertices;  // among those, the lexicographically smallest
    long long covered = 0;
};

/// Exhaustive subset scan; the complexity of this problem on permutation
/// graphs is open, so only desk-scale instances are supported.
WpvcResult solve_wpvc_bruteforce(const WPVCInstance& w, std::size_t cap = 20);

/// Single-ranking candidate deletion solved through the WPVC equivalence.
CdResult solve_cd_single_ranking(const ManipulationInstance& inst, std::size_t cap = 20);

} // namespace kemeny
