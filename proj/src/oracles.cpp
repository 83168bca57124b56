#include "kemeny/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace kemeny {

namespace {

void check_cap(std::uint64_t states, const OracleBudget& budget, const char* what) {
    if (states > budget.max_total_enumeration)
        throw instance_too_large_error(std::string(what) + " would enumerate " + std::to_string(states) +
                                       " states, cap is " + std::to_string(budget.max_total_enumeration));
}

// Shape caps apply to the axes an oracle exponentiates over; axes entering
// only polynomially are guarded by the enumeration estimate alone.
void check_candidate_cap(const ManipulationInstance& inst, const OracleBudget& budget) {
    if (inst.candidates.size() > budget.max_candidates)
        throw instance_too_large_error("oracle capped at " + std::to_string(budget.max_candidates) +
                                       " candidates, got " + std::to_string(inst.candidates.size()));
}

void check_ranking_cap(const ManipulationInstance& inst, const OracleBudget& budget) {
    if (inst.profile.size() > budget.max_rankings)
        throw instance_too_large_error("oracle capped at " + std::to_string(budget.max_rankings) +
                                       " rankings, got " + std::to_string(inst.profile.size()));
}

std::uint64_t factorial(std::size_t n) {
    if (n > 20) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// The oracles share nothing with the solvers beyond the pairwise Kendall
// tau scan, including this subsequence check.
bool is_subsequence(const std::vector<CandidateId>& needle, const std::vector<CandidateId>& hay) {
    std::size_t i = 0;
    for (CandidateId c : hay)
        if (i < needle.size() && needle[i] == c) ++i;
    return i == needle.size();
}

} // namespace

PksOracleResult oracle_pks(const ManipulationInstance& inst, const OracleBudget& budget) {
    require_complete_target(inst);
    check_candidate_cap(inst, budget);
    check_ranking_cap(inst, budget);
    std::size_t m = inst.candidates.size();
    check_cap(static_cast<std::uint64_t>(inst.profile.size()) * factorial(m), budget, "oracle_pks");

    PksOracleResult res;
    for (const Ranking& r : inst.profile) {
        for (CandidateId c : r)
            if (c < 0 || static_cast<std::size_t>(c) >= m)
                throw unknown_candidate_error("partial ranking candidate " + std::to_string(c) +
                                              " is outside the candidate set");
        std::vector<CandidateId> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        long long best = -1;
        std::vector<CandidateId> best_perm;
        do {
            if (!is_subsequence(r.order(), perm)) continue;
            long long d = kendall_tau(inst.target, Ranking(perm));
            if (best < 0 || d < best) {
                best = d;
                best_perm = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        res.min_distance += best;
        res.extensions.emplace_back(best_perm);
    }
    return res;
}

CostOracleResult oracle_dollar(const ManipulationInstance& inst, const OracleBudget& budget) {
    require_complete_target(inst);
    require_complete_profile(inst);
    require_cost_kind(inst, CostKind::PerRanking, inst.profile.size());
    std::size_t n = inst.profile.size();
    if (n >= 63) throw instance_too_large_error("oracle_dollar cannot enumerate 2^" + std::to_string(n) + " subsets");
    check_cap(std::uint64_t{1} << n, budget, "oracle_dollar");

    std::vector<long long> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = kendall_tau(inst.target, inst.profile[i]);
    long long total = std::accumulate(d.begin(), d.end(), 0LL);

    CostOracleResult best;
    best.min_cost = kInfiniteCost;
    std::vector<std::size_t> best_set;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        long long residual = total;
        Cost cost = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                residual -= d[i];
                cost += inst.cost.at(i);
            }
        if (residual > inst.k) continue;
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) set.push_back(i);
        if (cost < best.min_cost || (cost == best.min_cost && set < best_set)) {
            best.min_cost = cost;
            best_set = set;
        }
    }
    best.witness = best_set;
    return best;
}

SwapOracleResult oracle_swap(const ManipulationInstance& inst, const OracleBudget& budget) {
    require_complete_target(inst);
    require_complete_profile(inst);
    require_cost_kind(inst, CostKind::PerSwap, inst.profile.size());
    std::size_t n = inst.profile.size();

    std::vector<long long> d(n);
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = kendall_tau(inst.target, inst.profile[i]);
        states *= static_cast<std::uint64_t>(d[i]) + 1;
        check_cap(states, budget, "oracle_swap");
    }
    long long total = std::accumulate(d.begin(), d.end(), 0LL);

    SwapOracleResult best;
    best.min_cost = kInfiniteCost;
    std::vector<long long> alloc(n, 0);
    while (true) {
        long long dropped = std::accumulate(alloc.begin(), alloc.end(), 0LL);
        if (total - dropped <= inst.k) {
            Cost cost = 0;
            for (std::size_t i = 0; i < n; ++i) cost += alloc[i] * inst.cost.at(i);
            if (cost < best.min_cost) {
                best.min_cost = cost;
                best.swaps_per_ranking = alloc;
            }
        }
        // odometer over allocations
        std::size_t pos = 0;
        while (pos < n && alloc[pos] == d[pos]) {
            alloc[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++alloc[pos];
    }
    if (best.min_cost == kInfiniteCost) {
        best.min_cost = 0;
        best.swaps_per_ranking.assign(n, 0);
    }
    return best;
}

CostOracleResult oracle_candidate_deletion(const ManipulationInstance& inst, const OracleBudget& budget) {
    require_complete_target(inst);
    require_complete_profile(inst);
    std::size_t m = inst.candidates.size();
    require_cost_kind(inst, CostKind::PerCandidate, m);
    check_candidate_cap(inst, budget);
    check_cap((std::uint64_t{1} << m) * std::max<std::uint64_t>(inst.profile.size(), 1), budget,
              "oracle_candidate_deletion");

    CostOracleResult best;
    best.min_cost = kInfiniteCost;
    std::vector<std::size_t> best_set;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<CandidateId> survivors;
        Cost cost = 0;
        for (std::size_t c = 0; c < m; ++c) {
            if (mask & (std::uint64_t{1} << c))
                cost += inst.cost.at(c);
            else
                survivors.push_back(static_cast<CandidateId>(c));
        }
        Ranking xr = restrict_to(inst.target, survivors);
        long long residual = 0;
        for (const Ranking& r : inst.profile) residual += kendall_tau(xr, restrict_to(r, survivors));
        if (residual > inst.k) continue;
        std::vector<std::size_t> set;
        for (std::size_t c = 0; c < m; ++c)
            if (mask & (std::uint64_t{1} << c)) set.push_back(c);
        if (cost < best.min_cost || (cost == best.min_cost && set < best_set)) {
            best.min_cost = cost;
            best_set = set;
        }
    }
    best.witness = best_set;
    return best;
}

} // namespace kemeny
