#include <doctest.h>

#include "kemeny/runner.hpp"
#include "testutil.hpp"

using namespace kemeny;

namespace {

const char* kExample1 =
    "candidates: a b c\n"
    "X: a c b\n"
    "k: 3\n"
    "budget: 1\n"
    "R: a b c\n"
    "R: a b c\n"
    "R: a b c\n"
    "R: a c b\n"
    "R: a c b\n"
    "R: c b a\n";

InstanceFile example_file() { return parse_instance(kExample1); }

} // namespace

TEST_CASE("action names round trip") {
    for (const char* name : {"pks", "dollar", "rdel", "swap", "cdel-k0", "cdel-single", "oracle:pks",
                             "oracle:dollar", "oracle:swap", "oracle:cdel"}) {
        auto action = parse_action(name);
        REQUIRE(action.has_value());
        CHECK(action_name(*action) == name);
    }
    CHECK(!parse_action("nope").has_value());
}

TEST_CASE("ranking deletion on the example file") {
    ResultRecord rec = run(Action::RankingDeletion, example_file());
    CHECK(rec.decision == "YES");
    CHECK(rec.optimum == 1);
    CHECK(rec.witness["deleted"] == nlohmann::json::array({5}));
    CHECK(rec.verify == "pass");
    CHECK(rec.exit_code() == 0);

    nlohmann::json j = rec.to_json();
    for (const char* key : {"action", "decision", "optimum", "witness", "instance", "solver", "wall_ms", "verify"})
        CHECK(j.contains(key));
}

TEST_CASE("decision and optimum part ways below the minimum budget") {
    InstanceFile f = example_file();
    f.budget = 0;
    ResultRecord swap = run(Action::Swap, f);
    CHECK(swap.decision == "NO");
    CHECK(swap.optimum == 2);
    CHECK(swap.exit_code() == 1);
    CHECK(swap.verify == "skipped");

    RunOptions verify_opts;
    verify_opts.verify = true;
    ResultRecord verified = run(Action::Swap, f, verify_opts);
    CHECK(verified.verify == "pass");
}

TEST_CASE("oracle actions emit the same optima as their solvers") {
    InstanceFile f = example_file();
    CHECK(run(Action::Dollar, f).optimum == run(Action::OracleDollar, f).optimum);
    CHECK(run(Action::Swap, f).optimum == run(Action::OracleSwap, f).optimum);
    CHECK(run(Action::Pks, f).optimum == 5);

    InstanceFile pks = parse_instance("candidates: a b c d\nX: a b c d\nk: 3\nbudget: 0\nR: d a\n");
    ResultRecord direct = run(Action::Pks, pks);
    ResultRecord oracle = run(Action::OraclePks, pks);
    CHECK(direct.decision == "YES");
    CHECK(direct.optimum == oracle.optimum);
    CHECK(direct.witness["extensions"][0] == nlohmann::json::array({"b", "c", "d", "a"}));
}

TEST_CASE("mismatched action and instance is a usage error") {
    InstanceFile f = example_file(); // k = 3, six rankings
    CHECK_THROWS_AS(run(Action::CdelK0, f), unsupported_parameter_error);
    CHECK_THROWS_AS(run(Action::CdelSingle, f), unsupported_parameter_error);
}

TEST_CASE("cdel actions on single-ranking files") {
    InstanceFile f = parse_instance("candidates: a b c\nX: a b c\nk: 0\nbudget: 1\nR: b a c\n");
    ResultRecord k0 = run(Action::CdelK0, f);
    CHECK(k0.decision == "YES");
    CHECK(k0.optimum == 1);
    CHECK(k0.verify == "pass");

    ResultRecord single = run(Action::CdelSingle, f);
    CHECK(single.decision == "YES");
    CHECK(single.optimum == 1);

    ResultRecord oracle = run(Action::OracleCdel, f);
    CHECK(oracle.optimum == 1);
}

TEST_CASE("cross-check mode: solver versus oracle on generated instances") {
    std::mt19937_64 rng(20240825);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 2 + testutil::draw(rng, 4);
        std::size_t n = 1 + testutil::draw(rng, 4);
        InstanceFile f;
        f.candidates = testutil::letter_candidates(m);
        f.target = testutil::random_ranking(rng, m);
        std::vector<Ranking> rankings;
        for (std::size_t i = 0; i < n; ++i) rankings.push_back(testutil::random_ranking(rng, m));
        f.profile = Profile{std::move(rankings)};
        f.ranking_costs = testutil::random_costs(rng, n, 4);
        f.candidate_costs = testutil::random_costs(rng, m, 4);
        f.budget = static_cast<Cost>(testutil::draw(rng, 6));
        f.k = static_cast<long long>(testutil::draw(rng, 8));

        RunOptions opts;
        opts.verify = true;

        auto check_pair = [&](Action solver, Action oracle) {
            ResultRecord s = run(solver, f, opts);
            ResultRecord o = run(oracle, f, opts);
            CHECK(s.decision == o.decision);
            CHECK(s.optimum == o.optimum);
            CHECK(s.verify == "pass");
            CHECK(o.verify == "pass");
        };
        check_pair(Action::Dollar, Action::OracleDollar);
        check_pair(Action::RankingDeletion, Action::OracleDollar);
        check_pair(Action::Swap, Action::OracleSwap);
        check_pair(Action::Pks, Action::OraclePks);
        if (n == 1) {
            f.k = 0;
            check_pair(Action::CdelK0, Action::OracleCdel);
            check_pair(Action::CdelSingle, Action::OracleCdel);
        }
    }
}

TEST_CASE("partial rankings are rejected outside pks") {
    InstanceFile f = parse_instance("candidates: a b c\nX: a b c\nk: 0\nbudget: 1\nR: b a\n");
    CHECK_THROWS_AS(run(Action::Dollar, f), malformed_instance_error);
    CHECK_THROWS_AS(run(Action::Swap, f), malformed_instance_error);
    ResultRecord pks = run(Action::Pks, f); // b before a costs one inversion in any extension
    CHECK(pks.decision == "NO");
    CHECK(pks.optimum == 1);
}

TEST_CASE("exit codes") {
    ResultRecord rec;
    rec.decision = "YES";
    rec.verify = "pass";
    CHECK(rec.exit_code() == 0);
    rec.decision = "NO";
    rec.verify = "skipped";
    CHECK(rec.exit_code() == 1);
    rec.decision = "YES";
    rec.verify = "fail";
    CHECK(rec.exit_code() == 2);
}

TEST_CASE("seed is carried into the record") {
    RunOptions opts;
    opts.seed = 1234;
    ResultRecord rec = run(Action::Dollar, example_file(), opts);
    CHECK(rec.to_json()["seed"] == 1234);
}
