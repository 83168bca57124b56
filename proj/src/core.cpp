#include "kemeny/core.hpp"

#include <algorithm>

namespace kemeny {

Candidates::Candidates(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw malformed_instance_error("candidate label must be non-empty");
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<CandidateId>(i));
        if (!inserted)
            throw duplicate_candidate_error("duplicate candidate label '" + labels_[i] + "'");
    }
}

const std::string& Candidates::label(CandidateId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= labels_.size())
        throw index_error("candidate id " + std::to_string(id) + " out of range");
    return labels_[static_cast<std::size_t>(id)];
}

std::optional<CandidateId> Candidates::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Ranking::Ranking(std::vector<CandidateId> order) : order_(std::move(order)) {
    for (CandidateId c : order_) {
        if (c < 0) throw malformed_instance_error("negative candidate id in ranking");
    }
    std::vector<CandidateId> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw duplicate_candidate_error("duplicate candidate in ranking");
}

CandidateId Ranking::at(std::size_t pos) const {
    if (pos >= order_.size())
        throw index_error("ranking position " + std::to_string(pos) + " out of range");
    return order_[pos];
}

bool Ranking::contains(CandidateId c) const {
    return std::find(order_.begin(), order_.end(), c) != order_.end();
}

std::optional<std::size_t> Ranking::position_of(CandidateId c) const {
    auto it = std::find(order_.begin(), order_.end(), c);
    if (it == order_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - order_.begin());
}

std::vector<std::int32_t> position_table(const Ranking& r, std::size_t min_size) {
    std::size_t n = min_size;
    for (CandidateId c : r) n = std::max(n, static_cast<std::size_t>(c) + 1);
    std::vector<std::int32_t> table(n, -1);
    for (std::size_t i = 0; i < r.size(); ++i) table[static_cast<std::size_t>(r.at(i))] = static_cast<std::int32_t>(i);
    return table;
}

namespace {
std::vector<Cost> checked_costs(std::vector<Cost> v) {
    for (Cost c : v)
        if (c < 0) throw malformed_instance_error("costs must be non-negative");
    return v;
}
} // namespace

CostModel CostModel::per_ranking(std::vector<Cost> v) { return {CostKind::PerRanking, checked_costs(std::move(v))}; }
CostModel CostModel::per_swap(std::vector<Cost> v) { return {CostKind::PerSwap, checked_costs(std::move(v))}; }
CostModel CostModel::per_candidate(std::vector<Cost> v) { return {CostKind::PerCandidate, checked_costs(std::move(v))}; }

Cost CostModel::at(std::size_t i) const {
    if (i >= values.size())
        throw index_error("cost index " + std::to_string(i) + " out of range");
    return values[i];
}

long long kendall_tau(const Ranking& a, const Ranking& b) {
    auto pos_b = position_table(b);
    // Positions (within b) of the common support, in a's order. Counting
    // inversions of this sequence counts exactly the disagreeing pairs.
    std::vector<std::int32_t> proj;
    proj.reserve(a.size());
    for (CandidateId c : a) {
        if (static_cast<std::size_t>(c) < pos_b.size() && pos_b[static_cast<std::size_t>(c)] >= 0)
            proj.push_back(pos_b[static_cast<std::size_t>(c)]);
    }
    long long inversions = 0;
    for (std::size_t i = 0; i < proj.size(); ++i)
        for (std::size_t j = i + 1; j < proj.size(); ++j)
            if (proj[i] > proj[j]) ++inversions;
    return inversions;
}

long long distance_to_profile(const Ranking& x, const Profile& profile) {
    long long total = 0;
    for (const Ranking& r : profile) total += kendall_tau(x, r);
    return total;
}

Ranking restrict_to(const Ranking& pi, const std::vector<CandidateId>& keep) {
    auto pos = position_table(pi);
    std::vector<char> keep_mask(pos.size(), 0);
    for (CandidateId c : keep) {
        if (c < 0 || static_cast<std::size_t>(c) >= pos.size() || pos[static_cast<std::size_t>(c)] < 0)
            throw unknown_candidate_error("candidate " + std::to_string(c) + " is not ranked");
        keep_mask[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<CandidateId> order;
    order.reserve(keep.size());
    for (CandidateId c : pi)
        if (keep_mask[static_cast<std::size_t>(c)]) order.push_back(c);
    return Ranking(order);
}

long long disagreements_wrt(const Ranking& a, const Ranking& b, CandidateId x) {
    auto pos_a = position_table(a);
    auto pos_b = position_table(b, pos_a.size());
    if (pos_a.size() < pos_b.size()) pos_a.resize(pos_b.size(), -1);
    auto ux = static_cast<std::size_t>(x);
    if (x < 0 || ux >= pos_a.size() || pos_a[ux] < 0 || pos_b[ux] < 0)
        throw unknown_candidate_error("candidate " + std::to_string(x) + " is not in the common support");
    long long count = 0;
    for (CandidateId y : a) {
        if (y == x) continue;
        auto uy = static_cast<std::size_t>(y);
        if (pos_b[uy] < 0) continue;
        bool before_a = pos_a[ux] < pos_a[uy];
        bool before_b = pos_b[ux] < pos_b[uy];
        if (before_a != before_b) ++count;
    }
    return count;
}

bool agrees_over(const Ranking& a, const Ranking& b, const std::vector<CandidateId>& s) {
    auto pos_a = position_table(a);
    auto pos_b = position_table(b, pos_a.size());
    if (pos_a.size() < pos_b.size()) pos_a.resize(pos_b.size(), -1);
    for (CandidateId c : s) {
        auto uc = static_cast<std::size_t>(c);
        if (c < 0 || uc >= pos_a.size() || pos_a[uc] < 0 || pos_b[uc] < 0)
            throw unknown_candidate_error("candidate " + std::to_string(c) + " is not in the common support");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto ui = static_cast<std::size_t>(s[i]);
            auto uj = static_cast<std::size_t>(s[j]);
            bool before_a = pos_a[ui] < pos_a[uj];
            bool before_b = pos_b[ui] < pos_b[uj];
            if (before_a != before_b) return false;
        }
    }
    return true;
}

std::optional<std::size_t> find_admissible_disagreement(const Ranking& r, const Ranking& x) {
    auto pos_x = position_table(x);
    for (std::size_t p = 0; p + 1 < r.size(); ++p) {
        auto u = static_cast<std::size_t>(r.at(p));
        auto v = static_cast<std::size_t>(r.at(p + 1));
        if (u >= pos_x.size() || v >= pos_x.size() || pos_x[u] < 0 || pos_x[v] < 0)
            throw unknown_candidate_error("rankings do not share a support");
        if (pos_x[u] > pos_x[v]) return p;
    }
    return std::nullopt;
}

Ranking apply_adjacent_swap(const Ranking& r, std::size_t p) {
    if (p + 1 >= r.size())
        throw index_error("swap position " + std::to_string(p) + " out of range");
    std::vector<CandidateId> order = r.order();
    std::swap(order[p], order[p + 1]);
    return Ranking(order);
}

bool is_complete(const Ranking& r, std::size_t m) {
    if (r.size() != m) return false;
    std::vector<char> seen(m, 0);
    for (CandidateId c : r) {
        if (c < 0 || static_cast<std::size_t>(c) >= m) return false;
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true; // no duplicates by Ranking invariant, so all m ids are present
}

void require_complete_target(const ManipulationInstance& inst) {
    if (!is_complete(inst.target, inst.candidates.size()))
        throw malformed_instance_error("target ranking must be complete over the candidate set");
}

void require_complete_profile(const ManipulationInstance& inst) {
    for (std::size_t i = 0; i < inst.profile.size(); ++i)
        if (!is_complete(inst.profile[i], inst.candidates.size()))
            throw malformed_instance_error("ranking " + std::to_string(i) + " is not complete over the candidate set");
}

void require_cost_kind(const ManipulationInstance& inst, CostKind kind, std::size_t expected_size) {
    if (inst.cost.kind != kind)
        throw malformed_instance_error("cost model kind does not match the requested action");
    if (inst.cost.values.size() != expected_size)
        throw malformed_instance_error("cost model has " + std::to_string(inst.cost.values.size()) +
                                       " entries, expected " + std::to_string(expected_size));
}

} // namespace kemeny
