#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kemeny/io.hpp"
#include "kemeny/oracles.hpp"

namespace kemeny {

enum class Action {
    Pks,
    Dollar,
    RankingDeletion,
    Swap,
    CdelK0,
    CdelSingle,
    OraclePks,
    OracleDollar,
    OracleSwap,
    OracleCdel,
};

std::optional<Action> parse_action(const std::string& name);
std::string action_name(Action action);

struct RunOptions {
    bool verify = false;                     // also re-check witnesses of NO answers
    std::optional<std::uint64_t> seed;       // recorded in the result, reserved for randomized passes
    OracleBudget oracle_budget;
    std::size_t wpvc_cap = 20;
};

/// One solver invocation. Witnesses of YES answers are always re-verified
/// against the instance definition; the decision is not trusted otherwise.
struct ResultRecord {
    std::string action;
    std::string decision;      // "YES" or "NO"
    Cost optimum = 0;          // minimum cost (minimum distance for pks)
    nlohmann::json witness;
    std::string instance;      // digest of the canonical rendering
    std::string solver;
    double wall_ms = 0.0;
    std::string verify;        // "pass", "fail", or "skipped"
    std::optional<std::uint64_t> seed;

    bool yes() const { return decision == "YES"; }
    int exit_code() const; // 0 = YES, 1 = NO, 2 = verification failure
    nlohmann::json to_json() const;
    std::string to_table() const;
};

ResultRecord run(Action action, const InstanceFile& file, const RunOptions& opts = {});

} // namespace kemeny
