#include "kemeny/runner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "kemeny/candidate_deletion.hpp"
#include "kemeny/knapsack_bribery.hpp"
#include "kemeny/possible_kemeny.hpp"
#include "kemeny/swap_bribery.hpp"

namespace kemeny {

std::optional<Action> parse_action(const std::string& name) {
    if (name == "pks") return Action::Pks;
    if (name == "dollar") return Action::Dollar;
    if (name == "rdel") return Action::RankingDeletion;
    if (name == "swap") return Action::Swap;
    if (name == "cdel-k0") return Action::CdelK0;
    if (name == "cdel-single") return Action::CdelSingle;
    if (name == "oracle:pks") return Action::OraclePks;
    if (name == "oracle:dollar") return Action::OracleDollar;
    if (name == "oracle:swap") return Action::OracleSwap;
    if (name == "oracle:cdel") return Action::OracleCdel;
    return std::nullopt;
}

std::string action_name(Action action) {
    switch (action) {
    case Action::Pks: return "pks";
    case Action::Dollar: return "dollar";
    case Action::RankingDeletion: return "rdel";
    case Action::Swap: return "swap";
    case Action::CdelK0: return "cdel-k0";
    case Action::CdelSingle: return "cdel-single";
    case Action::OraclePks: return "oracle:pks";
    case Action::OracleDollar: return "oracle:dollar";
    case Action::OracleSwap: return "oracle:swap";
    case Action::OracleCdel: return "oracle:cdel";
    }
    return "?";
}

namespace {

std::vector<std::string> label_ranking(const Candidates& candidates, const Ranking& r) {
    std::vector<std::string> labels;
    labels.reserve(r.size());
    for (CandidateId c : r) labels.push_back(candidates.label(c));
    return labels;
}

std::vector<CandidateId> missing_candidates(const Ranking& target, const Ranking& partial) {
    std::vector<char> have(target.size(), 0);
    for (CandidateId c : partial) have[static_cast<std::size_t>(c)] = 1;
    std::vector<CandidateId> missing;
    for (CandidateId c : target)
        if (!have[static_cast<std::size_t>(c)]) missing.push_back(c);
    return missing;
}

bool verify_extensions(const ManipulationInstance& inst, const std::vector<Ranking>& extensions,
                       long long claimed_total, bool yes) {
    if (extensions.size() != inst.profile.size()) return false;
    long long total = 0;
    for (std::size_t i = 0; i < extensions.size(); ++i) {
        const Ranking& ext = extensions[i];
        const Ranking& input = inst.profile[i];
        if (!is_complete(ext, inst.candidates.size())) return false;
        if (restrict_to(ext, input.order()) != input) return false;
        if (!agrees_over(ext, inst.target, missing_candidates(inst.target, input))) return false;
        total += kendall_tau(inst.target, ext);
    }
    if (total != claimed_total) return false;
    return yes == (total <= inst.k);
}

bool verify_bribe_set(const ManipulationInstance& inst, const std::vector<std::size_t>& set, Cost claimed_cost,
                      bool yes, bool as_deletion) {
    std::vector<char> chosen(inst.profile.size(), 0);
    Cost cost = 0;
    for (std::size_t i : set) {
        if (i >= inst.profile.size() || chosen[i]) return false;
        chosen[i] = 1;
        cost += inst.cost.at(i);
    }
    if (cost != claimed_cost) return false;
    long long residual = 0;
    for (std::size_t i = 0; i < inst.profile.size(); ++i) {
        if (chosen[i]) continue; // rewritten to the target or deleted: contributes zero either way
        residual += kendall_tau(inst.target, inst.profile[i]);
    }
    (void)as_deletion;
    if (residual > inst.k) return false;
    return yes == (cost <= inst.budget);
}

bool verify_swap_solution(const ManipulationInstance& inst, const std::vector<long long>& swaps,
                          const std::vector<std::vector<std::size_t>>& script, Cost claimed_cost, bool yes) {
    if (swaps.size() != inst.profile.size() || script.size() != inst.profile.size()) return false;
    auto pos_x = position_table(inst.target);
    Cost cost = 0;
    long long residual = 0;
    for (std::size_t i = 0; i < inst.profile.size(); ++i) {
        if (static_cast<long long>(script[i].size()) != swaps[i]) return false;
        Ranking r = inst.profile[i];
        for (std::size_t p : script[i]) {
            if (p + 1 >= r.size()) return false;
            auto u = static_cast<std::size_t>(r.at(p));
            auto v = static_cast<std::size_t>(r.at(p + 1));
            if (pos_x[u] < pos_x[v]) return false; // not a disagreement: swap is inadmissible
            r = apply_adjacent_swap(r, p);
        }
        cost += swaps[i] * inst.cost.at(i);
        residual += kendall_tau(inst.target, r);
    }
    if (cost != claimed_cost) return false;
    if (residual > inst.k) return false;
    return yes == (cost <= inst.budget);
}

bool verify_deletion_set(const ManipulationInstance& inst, const std::vector<CandidateId>& deleted,
                         Cost claimed_cost, bool yes) {
    std::vector<char> gone(inst.candidates.size(), 0);
    Cost cost = 0;
    for (CandidateId c : deleted) {
        if (c < 0 || static_cast<std::size_t>(c) >= inst.candidates.size() || gone[static_cast<std::size_t>(c)])
            return false;
        gone[static_cast<std::size_t>(c)] = 1;
        cost += inst.cost.at(static_cast<std::size_t>(c));
    }
    if (cost != claimed_cost) return false;
    std::vector<CandidateId> survivors;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c)
        if (!gone[c]) survivors.push_back(static_cast<CandidateId>(c));
    Ranking xr = restrict_to(inst.target, survivors);
    long long residual = 0;
    for (const Ranking& r : inst.profile) residual += kendall_tau(xr, restrict_to(r, survivors));
    if (residual > inst.k) return false;
    return yes == (cost <= inst.budget);
}

struct Outcome {
    bool yes = false;
    Cost optimum = 0;
    nlohmann::json witness;
    std::string solver;
    bool verified = false;
};

Outcome dispatch(Action action, const InstanceFile& file, const RunOptions& opts) {
    Outcome out;
    switch (action) {
    case Action::Pks: {
        ManipulationInstance inst = file.to_instance(CostKind::PerRanking);
        PksResult res = solve_pks(inst);
        out.yes = res.yes;
        out.optimum = res.total_distance;
        std::vector<Ranking> extensions;
        nlohmann::json exts = nlohmann::json::array();
        for (const auto& e : res.extensions) {
            extensions.push_back(e.extended);
            exts.push_back(label_ranking(file.candidates, e.extended));
        }
        out.witness = {{"total_distance", res.total_distance}, {"extensions", exts}};
        out.solver = "pks/optimal-extension";
        out.verified = verify_extensions(inst, extensions, res.total_distance, res.yes);
        break;
    }
    case Action::OraclePks: {
        ManipulationInstance inst = file.to_instance(CostKind::PerRanking);
        PksOracleResult res = oracle_pks(inst, opts.oracle_budget);
        out.yes = res.min_distance <= inst.k;
        out.optimum = res.min_distance;
        nlohmann::json exts = nlohmann::json::array();
        for (const auto& e : res.extensions) exts.push_back(label_ranking(file.candidates, e));
        out.witness = {{"total_distance", res.min_distance}, {"extensions", exts}};
        out.solver = "oracle/pks-enumeration";
        out.verified = verify_extensions(inst, res.extensions, res.min_distance, out.yes);
        break;
    }
    case Action::Dollar:
    case Action::RankingDeletion: {
        ManipulationInstance inst = file.to_instance(CostKind::PerRanking);
        BriberyResult res =
            action == Action::Dollar ? solve_dollar_bribery(inst) : solve_ranking_deletion(inst);
        out.yes = res.yes;
        out.optimum = res.min_cost;
        const char* field = action == Action::Dollar ? "bribed" : "deleted";
        out.witness = {{field, res.rankings}, {"residual_distance", res.residual_distance}};
        out.solver = action == Action::Dollar ? "dollar/knapsack-value-dp" : "rdel/knapsack-value-dp";
        out.verified = verify_bribe_set(inst, res.rankings, res.min_cost, res.yes,
                                        action == Action::RankingDeletion);
        break;
    }
    case Action::OracleDollar: {
        ManipulationInstance inst = file.to_instance(CostKind::PerRanking);
        CostOracleResult res = oracle_dollar(inst, opts.oracle_budget);
        out.yes = res.min_cost <= inst.budget;
        out.optimum = res.min_cost;
        out.witness = {{"bribed", res.witness}};
        out.solver = "oracle/dollar-subset-scan";
        out.verified = verify_bribe_set(inst, res.witness, res.min_cost, out.yes, false);
        break;
    }
    case Action::Swap: {
        ManipulationInstance inst = file.to_instance(CostKind::PerSwap);
        SwapResult res = solve_swap_bribery(inst);
        out.yes = res.yes;
        out.optimum = res.min_cost;
        out.witness = {{"swaps_per_ranking", res.witness.swaps_per_ranking},
                       {"script", res.witness.swap_script}};
        out.solver = "swap/layered-dp";
        out.verified = verify_swap_solution(inst, res.witness.swaps_per_ranking, res.witness.swap_script,
                                            res.min_cost, res.yes);
        break;
    }
    case Action::OracleSwap: {
        ManipulationInstance inst = file.to_instance(CostKind::PerSwap);
        SwapOracleResult res = oracle_swap(inst, opts.oracle_budget);
        out.yes = res.min_cost <= inst.budget;
        out.optimum = res.min_cost;
        out.witness = {{"swaps_per_ranking", res.swaps_per_ranking}};
        out.solver = "oracle/swap-allocation-scan";
        // counts only; replay the leftmost-admissible script to check them
        std::vector<std::vector<std::size_t>> script(res.swaps_per_ranking.size());
        bool ok = true;
        for (std::size_t i = 0; i < res.swaps_per_ranking.size() && ok; ++i) {
            Ranking r = inst.profile[i];
            for (long long s = 0; s < res.swaps_per_ranking[i]; ++s) {
                auto p = find_admissible_disagreement(r, inst.target);
                if (!p) {
                    ok = false;
                    break;
                }
                script[i].push_back(*p);
                r = apply_adjacent_swap(r, *p);
            }
        }
        out.verified = ok && verify_swap_solution(inst, res.swaps_per_ranking, script, res.min_cost, out.yes);
        break;
    }
    case Action::CdelK0: {
        ManipulationInstance inst = file.to_instance(CostKind::PerCandidate);
        CdResult res = solve_cd_k0(inst);
        out.yes = res.yes;
        out.optimum = res.min_cost;
        nlohmann::json deleted = nlohmann::json::array();
        for (CandidateId c : res.deleted) deleted.push_back(file.candidates.label(c));
        out.witness = {{"deleted_candidates", deleted}};
        out.solver = "cdel-k0/hcis-dp";
        out.verified = verify_deletion_set(inst, res.deleted, res.min_cost, res.yes);
        break;
    }
    case Action::CdelSingle: {
        ManipulationInstance inst = file.to_instance(CostKind::PerCandidate);
        CdResult res = solve_cd_single_ranking(inst, opts.wpvc_cap);
        out.yes = res.yes;
        out.optimum = res.min_cost;
        nlohmann::json deleted = nlohmann::json::array();
        for (CandidateId c : res.deleted) deleted.push_back(file.candidates.label(c));
        out.witness = {{"deleted_candidates", deleted}};
        out.solver = "cdel-single/wpvc-bruteforce";
        out.verified = verify_deletion_set(inst, res.deleted, res.min_cost, res.yes);
        break;
    }
    case Action::OracleCdel: {
        ManipulationInstance inst = file.to_instance(CostKind::PerCandidate);
        CostOracleResult res = oracle_candidate_deletion(inst, opts.oracle_budget);
        out.yes = res.min_cost <= inst.budget;
        out.optimum = res.min_cost;
        std::vector<CandidateId> deleted;
        nlohmann::json labels = nlohmann::json::array();
        for (std::size_t c : res.witness) {
            deleted.push_back(static_cast<CandidateId>(c));
            labels.push_back(file.candidates.label(static_cast<CandidateId>(c)));
        }
        out.witness = {{"deleted_candidates", labels}};
        out.solver = "oracle/cdel-subset-scan";
        out.verified = verify_deletion_set(inst, deleted, res.min_cost, out.yes);
        break;
    }
    }
    return out;
}

} // namespace

int ResultRecord::exit_code() const {
    if (verify == "fail") return 2;
    return yes() ? 0 : 1;
}

nlohmann::json ResultRecord::to_json() const {
    nlohmann::json j{{"action", action},   {"decision", decision}, {"optimum", optimum},
                     {"witness", witness}, {"instance", instance}, {"solver", solver},
                     {"wall_ms", wall_ms}, {"verify", verify}};
    if (seed) j["seed"] = *seed;
    return j;
}

std::string ResultRecord::to_table() const {
    std::ostringstream out;
    out << "action    " << action << '\n'
        << "decision  " << decision << '\n'
        << "optimum   " << optimum << '\n'
        << "witness   " << witness.dump() << '\n'
        << "instance  " << instance << '\n'
        << "solver    " << solver << '\n'
        << "verify    " << verify << '\n'
        << "wall_ms   " << wall_ms << '\n';
    return out.str();
}

ResultRecord run(Action action, const InstanceFile& file, const RunOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = dispatch(action, file, opts);
    auto stop = std::chrono::steady_clock::now();

    ResultRecord record;
    record.action = action_name(action);
    record.decision = out.yes ? "YES" : "NO";
    record.optimum = out.optimum;
    record.witness = out.witness;
    record.instance = instance_digest(file);
    record.solver = out.solver;
    record.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    record.seed = opts.seed;

    // YES answers are always re-checked; NO answers only on request.
    if (out.yes || opts.verify)
        record.verify = out.verified ? "pass" : "fail";
    else
        record.verify = "skipped";
    return record;
}

} // namespace kemeny
