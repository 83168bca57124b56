#include "kemeny/possible_kemeny.hpp"

#include <algorithm>

namespace kemeny {

Ranking insert_after_block(const Ranking& current, CandidateId c, std::size_t j, const Ranking& anchors) {
    if (j > anchors.size())
        throw index_error("insertion slot " + std::to_string(j) + " exceeds anchor count " +
                          std::to_string(anchors.size()));
    if (current.contains(c))
        throw duplicate_candidate_error("candidate " + std::to_string(c) + " is already ranked");

    std::size_t mask_size = anchors.size();
    for (CandidateId a : anchors) mask_size = std::max(mask_size, static_cast<std::size_t>(a) + 1);
    for (CandidateId a : current) mask_size = std::max(mask_size, static_cast<std::size_t>(a) + 1);
    std::vector<char> is_anchor(mask_size, 0);
    for (CandidateId a : anchors) is_anchor[static_cast<std::size_t>(a)] = 1;

    const auto& order = current.order();
    std::size_t idx = 0, anchors_seen = 0;
    while (idx < order.size() && anchors_seen < j) {
        if (is_anchor[static_cast<std::size_t>(order[idx])]) ++anchors_seen;
        ++idx;
    }
    if (anchors_seen < j)
        throw index_error("ranking contains fewer than " + std::to_string(j) + " anchors");
    while (idx < order.size() && !is_anchor[static_cast<std::size_t>(order[idx])]) ++idx;

    std::vector<CandidateId> result = order;
    result.insert(result.begin() + static_cast<std::ptrdiff_t>(idx), c);
    return Ranking(result);
}

ExtensionResult optimal_extension(const Ranking& x, const Ranking& partial) {
    auto pos_x = position_table(x);
    for (CandidateId c : partial) {
        if (static_cast<std::size_t>(c) >= pos_x.size() || pos_x[static_cast<std::size_t>(c)] < 0)
            throw unknown_candidate_error("partial ranking candidate " + std::to_string(c) +
                                          " is not ranked by the target");
    }

    std::vector<char> in_partial(pos_x.size(), 0);
    for (CandidateId c : partial) in_partial[static_cast<std::size_t>(c)] = 1;

    // Missing candidates in target order.
    std::vector<CandidateId> missing;
    for (CandidateId c : x)
        if (!in_partial[static_cast<std::size_t>(c)]) missing.push_back(c);

    ExtensionResult res;
    res.extended = partial;
    res.distance = kendall_tau(x, partial);
    res.insert_trace.reserve(missing.size());

    const auto& anchors = partial.order();
    std::size_t lo = 0; // slots below this can only pick up extra disagreements
    std::vector<long long> marginal(anchors.size() + 1, 0);

    for (CandidateId c : missing) {
        // marginal[j] = disagreements c picks up against the anchors when
        // placed at slot j. Slot-to-slot deltas flip by one per anchor passed.
        long long before = 0;
        auto pc = pos_x[static_cast<std::size_t>(c)];
        for (CandidateId a : anchors)
            if (pos_x[static_cast<std::size_t>(a)] < pc) ++before;
        marginal[0] = before;
        for (std::size_t j = 1; j <= anchors.size(); ++j) {
            auto pa = pos_x[static_cast<std::size_t>(anchors[j - 1])];
            marginal[j] = marginal[j - 1] + (pc < pa ? +1 : -1);
        }

        std::size_t best = lo;
        for (std::size_t j = lo + 1; j <= anchors.size(); ++j)
            if (marginal[j] < marginal[best]) best = j;

        res.extended = insert_after_block(res.extended, c, best, partial);
        res.distance += marginal[best];
        res.insert_trace.emplace_back(c, best);
        lo = best;
    }
    return res;
}

PksResult solve_pks(const ManipulationInstance& inst) {
    require_complete_target(inst);
    PksResult res;
    res.extensions.reserve(inst.profile.size());
    for (const Ranking& r : inst.profile) {
        res.extensions.push_back(optimal_extension(inst.target, r));
        res.total_distance += res.extensions.back().distance;
    }
    res.yes = res.total_distance <= inst.k;
    return res;
}

} // namespace kemeny
