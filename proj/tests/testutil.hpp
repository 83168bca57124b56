#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "kemeny/core.hpp"

namespace testutil {

using kemeny::CandidateId;
using kemeny::Cost;
using kemeny::Ranking;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline Ranking random_ranking(std::mt19937_64& rng, std::size_t m) {
    std::vector<CandidateId> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
    return Ranking(order);
}

// A ranking over a random subset of the ids 0..m-1 (possibly empty).
inline Ranking random_partial_ranking(std::mt19937_64& rng, std::size_t m) {
    Ranking full = random_ranking(rng, m);
    std::vector<CandidateId> kept;
    for (CandidateId c : full)
        if (draw(rng, 2) == 0) kept.push_back(c);
    return Ranking(kept);
}

inline Ranking random_partial_with_size(std::mt19937_64& rng, std::size_t m, std::size_t keep) {
    Ranking full = random_ranking(rng, m);
    std::vector<CandidateId> kept(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(keep));
    return Ranking(kept);
}

inline std::vector<Cost> random_costs(std::mt19937_64& rng, std::size_t n, Cost max_cost) {
    std::vector<Cost> costs(n);
    for (auto& c : costs) c = static_cast<Cost>(draw(rng, static_cast<std::uint64_t>(max_cost) + 1));
    return costs;
}

inline kemeny::Candidates letter_candidates(std::size_t m) {
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = std::string(1, static_cast<char>('a' + i));
    return kemeny::Candidates(labels);
}

// The running example: X = a > c > b against R1 = R2 = R3 = a > b > c,
// R4 = R5 = a > c > b, R6 = c > b > a. Per-ranking distances 1,1,1,0,0,2.
inline kemeny::ManipulationInstance example1(Cost budget, long long k) {
    kemeny::ManipulationInstance inst;
    inst.candidates = letter_candidates(3); // a=0, b=1, c=2
    inst.target = Ranking({0, 2, 1});
    inst.profile = kemeny::Profile{{
        Ranking({0, 1, 2}),
        Ranking({0, 1, 2}),
        Ranking({0, 1, 2}),
        Ranking({0, 2, 1}),
        Ranking({0, 2, 1}),
        Ranking({2, 1, 0}),
    }};
    inst.cost = kemeny::CostModel::per_ranking(std::vector<Cost>(6, 1));
    inst.budget = budget;
    inst.k = k;
    return inst;
}

} // namespace testutil
