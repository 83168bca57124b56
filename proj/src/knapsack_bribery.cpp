#include "kemeny/knapsack_bribery.hpp"

#include <algorithm>
#include <cstdint>

namespace kemeny {

KnapsackInstance reduce_dollar_to_knapsack(const ManipulationInstance& inst) {
    require_complete_target(inst);
    require_complete_profile(inst);
    require_cost_kind(inst, CostKind::PerRanking, inst.profile.size());
    KnapsackInstance kp;
    kp.items.reserve(inst.profile.size());
    long long total_distance = 0;
    for (std::size_t i = 0; i < inst.profile.size(); ++i) {
        long long d = kendall_tau(inst.target, inst.profile[i]);
        total_distance += d;
        kp.items.push_back({inst.cost.at(i), d});
    }
    kp.capacity = inst.budget;
    kp.target = std::max<long long>(total_distance - inst.k, 0);
    return kp;
}

namespace {

// Suffix DP over the clamped value axis 0..cap:
//   weight[v] = minimum total weight of a subset of items i..n-1 with value >= v.
// take(i, v) records whether taking item i is weight-optimal at state (i, v);
// scanning items in ascending order and taking whenever optimal yields the
// lexicographically smallest minimum-weight witness.
struct ValueDp {
    Cost cap = 0;
    std::size_t n = 0;
    std::vector<Cost> weight;
    std::vector<std::uint64_t> take_bits;

    bool take(std::size_t i, Cost v) const {
        std::size_t bit = i * static_cast<std::size_t>(cap + 1) + static_cast<std::size_t>(v);
        return (take_bits[bit >> 6] >> (bit & 63)) & 1u;
    }
};

ValueDp run_value_dp(const std::vector<KnapsackItem>& items, Cost cap) {
    ValueDp dp;
    dp.cap = cap;
    dp.n = items.size();
    dp.weight.assign(static_cast<std::size_t>(cap) + 1, kInfiniteCost);
    dp.weight[0] = 0;
    dp.take_bits.assign((items.size() * static_cast<std::size_t>(cap + 1) + 63) / 64, 0);

    for (std::size_t ii = items.size(); ii-- > 0;) {
        const auto& item = items[ii];
        for (Cost v = cap; v >= 1; --v) {
            Cost rest = std::max<Cost>(v - item.value, 0);
            Cost with = add_cost(item.weight, dp.weight[static_cast<std::size_t>(rest)]);
            if (with <= dp.weight[static_cast<std::size_t>(v)]) {
                dp.weight[static_cast<std::size_t>(v)] = with;
                std::size_t bit = ii * static_cast<std::size_t>(cap + 1) + static_cast<std::size_t>(v);
                dp.take_bits[bit >> 6] |= std::uint64_t{1} << (bit & 63);
            }
        }
    }
    return dp;
}

std::vector<std::size_t> reconstruct(const ValueDp& dp, const std::vector<KnapsackItem>& items, Cost from_value) {
    std::vector<std::size_t> chosen;
    Cost v = from_value;
    for (std::size_t i = 0; i < items.size() && v > 0; ++i) {
        if (dp.take(i, v)) {
            chosen.push_back(i);
            v = std::max<Cost>(v - items[i].value, 0);
        }
    }
    return chosen;
}

} // namespace

KnapsackSolution solve_knapsack_value_dp(const KnapsackInstance& kp) {
    for (const auto& item : kp.items)
        if (item.weight < 0 || item.value < 0)
            throw malformed_instance_error("knapsack weights and values must be non-negative");

    Cost total_value = 0;
    for (const auto& item : kp.items) total_value += item.value;

    ValueDp dp = run_value_dp(kp.items, total_value);
    Cost best = 0;
    for (Cost v = total_value; v >= 0; --v) {
        if (dp.weight[static_cast<std::size_t>(v)] <= kp.capacity) {
            best = v;
            break;
        }
    }
    return {best, reconstruct(dp, kp.items, best)};
}

namespace {

BriberyResult solve_by_knapsack(const ManipulationInstance& inst) {
    require_complete_target(inst);
    require_complete_profile(inst);
    require_cost_kind(inst, CostKind::PerRanking, inst.profile.size());

    KnapsackInstance kp = reduce_dollar_to_knapsack(inst);
    ValueDp dp = run_value_dp(kp.items, kp.target);

    BriberyResult res;
    res.min_cost = dp.weight[static_cast<std::size_t>(kp.target)];
    res.rankings = reconstruct(dp, kp.items, kp.target);
    res.yes = res.min_cost <= inst.budget;

    long long removed = 0;
    for (std::size_t i : res.rankings) removed += kp.items[i].value;
    long long total = 0;
    for (const auto& item : kp.items) total += item.value;
    res.residual_distance = total - removed;
    return res;
}

} // namespace

BriberyResult solve_dollar_bribery(const ManipulationInstance& inst) { return solve_by_knapsack(inst); }

BriberyResult solve_ranking_deletion(const ManipulationInstance& inst) { return solve_by_knapsack(inst); }

} // namespace kemeny
