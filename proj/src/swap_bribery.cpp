#include "kemeny/swap_bribery.hpp"

#include <algorithm>
#include <numeric>

namespace kemeny {

namespace {

void validate_swap_instance(const ManipulationInstance& inst) {
    require_complete_target(inst);
    require_complete_profile(inst);
    require_cost_kind(inst, CostKind::PerSwap, inst.profile.size());
    if (inst.k < 0) throw malformed_instance_error("k must be non-negative");
}

std::vector<long long> ranking_distances(const ManipulationInstance& inst) {
    std::vector<long long> d;
    d.reserve(inst.profile.size());
    for (const Ranking& r : inst.profile) d.push_back(kendall_tau(inst.target, r));
    return d;
}

} // namespace

Cost swap_dp_base(const ManipulationInstance& inst, long long s1, long long j) {
    validate_swap_instance(inst);
    if (inst.profile.size() == 0) throw malformed_instance_error("profile is empty");
    long long d1 = kendall_tau(inst.target, inst.profile[0]);
    if (s1 < 0 || s1 > d1 || j < 0 || j > inst.k) return kInfiniteCost;
    if (d1 - s1 > j) return kInfiniteCost;
    return s1 * inst.cost.at(0);
}

SwapDPTable::SwapDPTable(const ManipulationInstance& inst, std::size_t max_entries) {
    validate_swap_instance(inst);
    n_ = inst.profile.size();
    k_ = inst.k;
    d_ = ranking_distances(inst);
    costs_ = inst.cost.values;
    prefix_.assign(n_, 0);
    for (std::size_t i = 1; i < n_; ++i) prefix_[i] = prefix_[i - 1] + d_[i - 1];
    if (n_ == 0) return;

    long long max_d = *std::max_element(d_.begin(), d_.end());
    long long max_prefix = prefix_.back();
    stride_j_ = 1;
    stride_s2_ = static_cast<std::size_t>(k_ + 1);
    stride_s1_ = stride_s2_ * static_cast<std::size_t>(max_prefix + 1);
    per_layer_ = stride_s1_ * static_cast<std::size_t>(max_d + 1);
    if (n_ > max_entries / per_layer_)
        throw instance_too_large_error("swap DP table would need " + std::to_string(n_) + " layers of " +
                                       std::to_string(per_layer_) + " entries");
    entries_.assign(n_ * per_layer_, kInfiniteCost);

    // Base row: exactly s1 swaps on the first ranking, no earlier rankings.
    for (long long s1 = 0; s1 <= d_[0]; ++s1)
        for (long long j = 0; j <= k_; ++j)
            if (d_[0] - s1 <= j) entries_[index(1, s1, 0, j)] = s1 * costs_[0];

    for (std::size_t i = 2; i <= n_; ++i) {
        long long di = d_[i - 1];
        Cost ci = costs_[i - 1];
        for (long long s1 = 0; s1 <= di; ++s1) {
            for (long long s2 = 0; s2 <= prefix_[i - 1]; ++s2) {
                for (long long j = 0; j <= k_; ++j) {
                    long long jprev = j - di + s1;
                    if (jprev > k_) jprev = k_; // entries are monotone in j, extra slack never helps
                    if (jprev < 0) continue;
                    Cost best = kInfiniteCost;
                    long long lo = std::max<long long>(0, s2 - prefix_[i - 2]);
                    long long hi = std::min<long long>(s2, d_[i - 2]);
                    for (long long split = lo; split <= hi; ++split) {
                        Cost prev = at(i - 1, split, s2 - split, jprev);
                        if (prev == kInfiniteCost) continue;
                        best = std::min(best, add_cost(prev, s1 * ci));
                    }
                    entries_[index(i, s1, s2, j)] = best;
                }
            }
        }
    }
}

std::size_t SwapDPTable::index(std::size_t i, long long s1, long long s2, long long j) const {
    return (i - 1) * per_layer_ + static_cast<std::size_t>(s1) * stride_s1_ +
           static_cast<std::size_t>(s2) * stride_s2_ + static_cast<std::size_t>(j) * stride_j_;
}

Cost SwapDPTable::at(std::size_t i, long long s1, long long s2, long long j) const {
    if (i < 1 || i > n_) throw index_error("table layer out of range");
    if (s1 < 0 || s2 < 0 || j < 0 || j > k_) return kInfiniteCost;
    if (s1 > d_[i - 1] || s2 > prefix_[i - 1]) return kInfiniteCost;
    if (i == 1 && s2 > 0) return kInfiniteCost;
    return entries_[index(i, s1, s2, j)];
}

Cost SwapDPTable::min_total_cost() const {
    if (n_ == 0) return 0;
    Cost best = kInfiniteCost;
    for (long long s1 = 0; s1 <= d_[n_ - 1]; ++s1)
        for (long long s2 = 0; s2 <= prefix_[n_ - 1]; ++s2)
            best = std::min(best, at(n_, s1, s2, k_));
    return best;
}

std::vector<long long> SwapDPTable::backtrack_swaps() const {
    std::vector<long long> swaps(n_, 0);
    if (n_ == 0) return swaps;

    Cost best = min_total_cost();
    long long s1 = 0, s2 = 0;
    bool found = false;
    for (long long a = 0; a <= d_[n_ - 1] && !found; ++a)
        for (long long b = 0; b <= prefix_[n_ - 1] && !found; ++b)
            if (at(n_, a, b, k_) == best) {
                s1 = a;
                s2 = b;
                found = true;
            }

    long long j = k_;
    for (std::size_t i = n_; i >= 1; --i) {
        swaps[i - 1] = s1;
        if (i == 1) break;
        long long jprev = std::min(j - d_[i - 1] + s1, k_);
        Cost remaining = at(i, s1, s2, j) - s1 * costs_[i - 1];
        long long lo = std::max<long long>(0, s2 - prefix_[i - 2]);
        long long hi = std::min<long long>(s2, d_[i - 2]);
        bool stepped = false;
        for (long long split = lo; split <= hi; ++split) {
            if (at(i - 1, split, s2 - split, jprev) == remaining) {
                s1 = split;
                s2 = s2 - split;
                j = jprev;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw error("swap DP backtracking lost the optimal path");
    }
    return swaps;
}

namespace {

// Collapsed recurrence: layer[r] = minimum cost of at least r admissible
// swaps over the rankings seen so far. Equivalent to minimizing the full
// table over the s1/s2 split, which only ever enters through the sum.
struct CollapsedDp {
    long long need = 0;
    std::vector<std::vector<Cost>> layers; // layers[i][r], i = 0..n
};

CollapsedDp run_collapsed_dp(const std::vector<long long>& d, const std::vector<Cost>& costs, long long need) {
    CollapsedDp dp;
    dp.need = need;
    dp.layers.reserve(d.size() + 1);
    std::vector<Cost> layer(static_cast<std::size_t>(need) + 1, kInfiniteCost);
    layer[0] = 0;
    dp.layers.push_back(layer);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::vector<Cost>& prev = dp.layers.back();
        std::vector<Cost> next(static_cast<std::size_t>(need) + 1, kInfiniteCost);
        for (long long r = 0; r <= need; ++r) {
            Cost best = prev[static_cast<std::size_t>(r)];
            long long smax = std::min(d[i], r);
            for (long long s = 1; s <= smax; ++s) {
                Cost cand = add_cost(prev[static_cast<std::size_t>(r - s)], s * costs[i]);
                if (cand < best) best = cand;
            }
            next[static_cast<std::size_t>(r)] = best;
        }
        dp.layers.push_back(std::move(next));
    }
    return dp;
}

std::vector<long long> backtrack_collapsed(const CollapsedDp& dp, const std::vector<long long>& d,
                                           const std::vector<Cost>& costs) {
    std::vector<long long> swaps(d.size(), 0);
    long long r = dp.need;
    for (std::size_t i = d.size(); i-- > 0;) {
        Cost target = dp.layers[i + 1][static_cast<std::size_t>(r)];
        long long smax = std::min(d[i], r);
        for (long long s = 0; s <= smax; ++s) {
            if (add_cost(dp.layers[i][static_cast<std::size_t>(r - s)], s * costs[i]) == target) {
                swaps[i] = s;
                r -= s;
                break;
            }
        }
    }
    return swaps;
}

std::vector<std::vector<std::size_t>> build_swap_script(const ManipulationInstance& inst,
                                                        const std::vector<long long>& swaps) {
    std::vector<std::vector<std::size_t>> script(swaps.size());
    for (std::size_t i = 0; i < swaps.size(); ++i) {
        Ranking r = inst.profile[i];
        for (long long s = 0; s < swaps[i]; ++s) {
            auto p = find_admissible_disagreement(r, inst.target);
            if (!p) throw error("swap script ran out of admissible disagreements");
            script[i].push_back(*p);
            r = apply_adjacent_swap(r, *p);
        }
    }
    return script;
}

} // namespace

SwapResult solve_swap_bribery(const ManipulationInstance& inst) {
    validate_swap_instance(inst);
    std::vector<long long> d = ranking_distances(inst);
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    long long need = std::max<long long>(total - inst.k, 0);

    CollapsedDp dp = run_collapsed_dp(d, inst.cost.values, need);
    SwapResult res;
    res.min_cost = dp.layers.back()[static_cast<std::size_t>(need)];
    res.yes = res.min_cost <= inst.budget;
    res.witness.swaps_per_ranking = backtrack_collapsed(dp, d, inst.cost.values);
    res.witness.total_cost = res.min_cost;
    res.witness.swap_script = build_swap_script(inst, res.witness.swaps_per_ranking);
    return res;
}

Cost greedy_swap_oracle(const ManipulationInstance& inst) {
    validate_swap_instance(inst);
    std::vector<long long> d = ranking_distances(inst);
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    long long need = std::max<long long>(total - inst.k, 0);

    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inst.cost.at(a) < inst.cost.at(b); });

    Cost cost = 0;
    for (std::size_t i : order) {
        if (need == 0) break;
        long long take = std::min(need, d[i]);
        cost += take * inst.cost.at(i);
        need -= take;
    }
    return cost;
}

} // namespace kemeny
