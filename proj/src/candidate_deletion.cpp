#include "kemeny/candidate_deletion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kemeny {

namespace {

void validate_permutation(const std::vector<int>& seq, std::size_t m, const std::string& what) {
    if (seq.size() != m)
        throw malformed_instance_error(what + " has length " + std::to_string(seq.size()) + ", expected " +
                                       std::to_string(m));
    std::vector<char> seen(m + 1, 0);
    for (int v : seq) {
        if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)])
            throw malformed_instance_error(what + " is not a permutation of 1.." + std::to_string(m));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

} // namespace

std::vector<Match> compute_matches(const HCISInstance& h) {
    std::size_t m = h.weight_by_value.empty() ? 0 : h.weight_by_value.size() - 1;
    for (const auto& seq : h.sequences) validate_permutation(seq, m, "HCIS sequence");

    std::vector<Match> matches(m);
    for (std::size_t v = 1; v <= m; ++v) {
        matches[v - 1].value = static_cast<int>(v);
        matches[v - 1].positions.resize(h.sequences.size());
    }
    for (std::size_t i = 0; i < h.sequences.size(); ++i)
        for (std::size_t pos = 0; pos < m; ++pos)
            matches[static_cast<std::size_t>(h.sequences[i][pos]) - 1].positions[i] = pos;
    return matches;
}

bool dominates(const Match& a, const Match& b) {
    if (a.value >= b.value) return false;
    for (std::size_t i = 0; i < a.positions.size(); ++i)
        if (a.positions[i] >= b.positions[i]) return false;
    return true;
}

HCISResult solve_hcis(const HCISInstance& h) {
    std::size_t m = h.weight_by_value.empty() ? 0 : h.weight_by_value.size() - 1;
    for (Cost w : h.weight_by_value)
        if (w < 0) throw malformed_instance_error("HCIS weights must be non-negative");

    std::vector<Match> matches = compute_matches(h);
    std::vector<int> parent(m + 1, 0); // 0 = chain start

    HCISResult res;
    res.ranks.assign(m + 1, 0);
    for (std::size_t v = 1; v <= m; ++v) {
        Cost best = -1;
        int best_parent = 0;
        for (std::size_t u = 1; u < v; ++u) {
            if (dominates(matches[u - 1], matches[v - 1]) && res.ranks[u] > best) {
                best = res.ranks[u];
                best_parent = static_cast<int>(u);
            }
        }
        res.ranks[v] = h.weight_by_value[v] + (best_parent ? best : 0);
        parent[v] = best_parent;
    }

    int best_value = 0;
    for (std::size_t v = 1; v <= m; ++v)
        if (res.ranks[v] > res.best_weight) {
            res.best_weight = res.ranks[v];
            best_value = static_cast<int>(v);
        }
    for (int v = best_value; v != 0; v = parent[static_cast<std::size_t>(v)])
        res.values.push_back(v);
    std::reverse(res.values.begin(), res.values.end());
    return res;
}

std::vector<int> target_index_map(const Ranking& x) {
    std::vector<int> f(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto id = static_cast<std::size_t>(x.at(i));
        if (id >= f.size()) f.resize(id + 1, 0);
        f[id] = static_cast<int>(i) + 1;
    }
    return f;
}

HCISInstance reduce_cd_to_hcis(const ManipulationInstance& inst) {
    if (inst.k != 0)
        throw unsupported_parameter_error("the HCIS reduction requires k = 0, got k = " + std::to_string(inst.k));
    require_complete_target(inst);
    require_complete_profile(inst);
    std::size_t m = inst.candidates.size();
    require_cost_kind(inst, CostKind::PerCandidate, m);

    std::vector<int> f = target_index_map(inst.target);

    HCISInstance h;
    h.sequences.reserve(inst.profile.size());
    for (const Ranking& r : inst.profile) {
        std::vector<int> seq(m);
        for (std::size_t j = 0; j < m; ++j) seq[j] = f[static_cast<std::size_t>(r.at(j))];
        h.sequences.push_back(std::move(seq));
    }
    h.weight_by_value.assign(m + 1, 0);
    Cost total = 0;
    for (std::size_t v = 1; v <= m; ++v) {
        Cost c = inst.cost.at(static_cast<std::size_t>(inst.target.at(v - 1)));
        h.weight_by_value[v] = c;
        total += c;
    }
    h.target = total - inst.budget;
    return h;
}

CdResult solve_cd_k0(const ManipulationInstance& inst) {
    HCISInstance h = reduce_cd_to_hcis(inst);
    HCISResult hcis = solve_hcis(h);

    Cost total = 0;
    for (std::size_t v = 1; v < h.weight_by_value.size(); ++v) total += h.weight_by_value[v];

    CdResult res;
    res.yes = hcis.best_weight >= h.target;
    res.min_cost = total - hcis.best_weight;

    std::vector<char> kept(h.weight_by_value.size(), 0);
    for (int v : hcis.values) kept[static_cast<std::size_t>(v)] = 1;
    for (std::size_t v = 1; v < h.weight_by_value.size(); ++v)
        if (!kept[v]) res.deleted.push_back(inst.target.at(v - 1));
    std::sort(res.deleted.begin(), res.deleted.end());
    return res;
}

PermutationGraph build_permutation_graph(const std::vector<int>& perm, const std::vector<Cost>& vertex_weights) {
    validate_permutation(perm, perm.size(), "permutation");
    if (vertex_weights.size() != perm.size() + 1)
        throw malformed_instance_error("vertex weight table must have one entry per vertex");

    PermutationGraph g;
    g.permutation = perm;
    g.vertex_weights = vertex_weights;
    std::vector<std::size_t> pos(perm.size() + 1, 0);
    for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = i;
    for (int x = 1; x <= static_cast<int>(perm.size()); ++x)
        for (int y = x + 1; y <= static_cast<int>(perm.size()); ++y)
            if (pos[static_cast<std::size_t>(x)] > pos[static_cast<std::size_t>(y)]) g.edges.emplace_back(x, y);
    return g;
}

ManipulationInstance reduce_wpvc_to_cd(const WPVCInstance& w) {
    std::size_t n = w.graph.permutation.size();
    if (w.coverage_target < 0 || w.coverage_target > static_cast<long long>(w.graph.edges.size()))
        throw malformed_instance_error("coverage target out of range");

    std::vector<std::string> labels(n);
    for (std::size_t v = 1; v <= n; ++v) labels[v - 1] = std::to_string(v);

    std::vector<CandidateId> xorder(n);
    std::iota(xorder.begin(), xorder.end(), 0);
    std::vector<CandidateId> rorder(n);
    for (std::size_t j = 0; j < n; ++j) rorder[j] = w.graph.permutation[j] - 1;

    std::vector<Cost> costs(n);
    for (std::size_t v = 1; v <= n; ++v) costs[v - 1] = w.graph.vertex_weights[v];

    ManipulationInstance inst;
    inst.candidates = Candidates(labels);
    inst.target = Ranking(xorder);
    inst.profile = Profile{{Ranking(rorder)}};
    inst.cost = CostModel::per_candidate(std::move(costs));
    inst.budget = w.weight_budget;
    inst.k = static_cast<long long>(w.graph.edges.size()) - w.coverage_target;
    return inst;
}

WPVCInstance reduce_cd_to_wpvc(const ManipulationInstance& inst) {
    if (inst.profile.size() != 1)
        throw unsupported_parameter_error("the WPVC reduction requires exactly one ranking, got " +
                                          std::to_string(inst.profile.size()));
    require_complete_target(inst);
    require_complete_profile(inst);
    std::size_t m = inst.candidates.size();
    require_cost_kind(inst, CostKind::PerCandidate, m);
    if (inst.k < 0) throw malformed_instance_error("k must be non-negative");

    std::vector<int> f = target_index_map(inst.target);
    std::vector<int> perm(m);
    for (std::size_t j = 0; j < m; ++j) perm[j] = f[static_cast<std::size_t>(inst.profile[0].at(j))];

    std::vector<Cost> weights(m + 1, 0);
    for (std::size_t v = 1; v <= m; ++v) weights[v] = inst.cost.at(static_cast<std::size_t>(inst.target.at(v - 1)));

    WPVCInstance w;
    w.graph = build_permutation_graph(perm, weights);
    w.weight_budget = inst.budget;
    w.coverage_target = std::max<long long>(static_cast<long long>(w.graph.edges.size()) - inst.k, 0);
    return w;
}

WpvcResult solve_wpvc_bruteforce(const WPVCInstance& w, std::size_t cap) {
    std::size_t n = w.graph.permutation.size();
    if (n > cap)
        throw instance_too_large_error("WPVC brute force capped at " + std::to_string(cap) + " vertices, got " +
                                       std::to_string(n));
    if (w.coverage_target < 0 || w.coverage_target > static_cast<long long>(w.graph.edges.size()))
        throw malformed_instance_error("coverage target out of range");

    WpvcResult best;
    best.min_weight = kInfiniteCost;
    std::vector<int> best_set;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Cost weight = 0;
        for (std::size_t v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) weight += w.graph.vertex_weights[v];
        long long covered = 0;
        for (const auto& [x, y] : w.graph.edges) {
            if ((mask & (std::uint64_t{1} << (x - 1))) || (mask & (std::uint64_t{1} << (y - 1)))) ++covered;
        }
        if (covered < w.coverage_target) continue;

        std::vector<int> set;
        for (std::size_t v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) set.push_back(static_cast<int>(v));

        if (weight < best.min_weight || (weight == best.min_weight && set < best_set)) {
            best.min_weight = weight;
            best_set = set;
            best.covered = covered;
        }
    }
    best.vertices = best_set;
    best.yes = best.min_weight <= w.weight_budget;
    return best;
}

CdResult solve_cd_single_ranking(const ManipulationInstance& inst, std::size_t cap) {
    WPVCInstance w = reduce_cd_to_wpvc(inst);
    WpvcResult res = solve_wpvc_bruteforce(w, cap);

    CdResult cd;
    cd.yes = res.yes;
    cd.min_cost = res.min_weight;
    for (int v : res.vertices) cd.deleted.push_back(inst.target.at(static_cast<std::size_t>(v) - 1));
    std::sort(cd.deleted.begin(), cd.deleted.end());
    return cd;
}

} // namespace kemeny
