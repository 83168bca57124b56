#include <doctest.h>

#include "kemeny/oracles.hpp"
#include "testutil.hpp"

using namespace kemeny;
using testutil::random_ranking;

namespace {

ManipulationInstance with_cost(ManipulationInstance inst, CostModel cost) {
    inst.cost = std::move(cost);
    return inst;
}

} // namespace

TEST_CASE("pks oracle") {
    ManipulationInstance inst;
    inst.candidates = testutil::letter_candidates(4);
    inst.target = Ranking({0, 1, 2, 3});
    inst.profile = Profile{{Ranking({3, 0})}};
    inst.cost = CostModel::per_ranking({1});
    inst.k = 3;

    PksOracleResult res = oracle_pks(inst);
    CHECK(res.min_distance == 3);

    inst.profile = Profile{{Ranking({2, 0, 1, 3})}};
    CHECK(oracle_pks(inst).min_distance == kendall_tau(inst.target, inst.profile[0]));

    inst.profile = Profile{{Ranking(std::vector<CandidateId>{})}};
    CHECK(oracle_pks(inst).min_distance == 0);

    inst.profile = Profile{};
    CHECK(oracle_pks(inst).min_distance == 0);
}

TEST_CASE("dollar oracle") {
    CHECK(oracle_dollar(testutil::example1(1, 3)).min_cost == 1);
    CHECK(oracle_dollar(testutil::example1(0, 5)).min_cost == 0);

    ManipulationInstance empty;
    empty.candidates = testutil::letter_candidates(2);
    empty.target = Ranking({0, 1});
    empty.cost = CostModel::per_ranking({});
    CHECK(oracle_dollar(empty).min_cost == 0);
}

TEST_CASE("swap oracle") {
    auto inst = with_cost(testutil::example1(0, 3), CostModel::per_swap(std::vector<Cost>(6, 1)));
    CHECK(oracle_swap(inst).min_cost == 2);

    auto lax = with_cost(testutil::example1(0, 5), CostModel::per_swap(std::vector<Cost>(6, 1)));
    CHECK(oracle_swap(lax).min_cost == 0);

    ManipulationInstance single;
    single.candidates = testutil::letter_candidates(4);
    single.target = Ranking({0, 1, 2, 3});
    single.profile = Profile{{Ranking({2, 3, 0, 1})}}; // distance 4
    single.cost = CostModel::per_swap({3});
    single.k = 1;
    CHECK(oracle_swap(single).min_cost == (4 - 1) * 3);
}

TEST_CASE("candidate deletion oracle") {
    ManipulationInstance inst;
    inst.candidates = testutil::letter_candidates(3);
    inst.target = Ranking({0, 1, 2});
    inst.profile = Profile{{Ranking({1, 0, 2})}};
    inst.cost = CostModel::per_candidate({1, 1, 1});
    inst.k = 0;
    CHECK(oracle_candidate_deletion(inst).min_cost == 1);

    inst.k = 1;
    CHECK(oracle_candidate_deletion(inst).min_cost == 0);

    // deleting everything always reaches distance zero
    inst.profile = Profile{{Ranking({2, 1, 0}), Ranking({2, 1, 0})}};
    inst.k = 0;
    CostOracleResult res = oracle_candidate_deletion(inst);
    CHECK(res.min_cost == 2);
}

TEST_CASE("oracles are deterministic") {
    std::mt19937_64 rng(20240822);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t m = 2 + testutil::draw(rng, 4);
        std::size_t n = 1 + testutil::draw(rng, 4);
        ManipulationInstance inst;
        inst.candidates = testutil::letter_candidates(m);
        inst.target = random_ranking(rng, m);
        std::vector<Ranking> rankings;
        for (std::size_t i = 0; i < n; ++i) rankings.push_back(random_ranking(rng, m));
        inst.profile = Profile{std::move(rankings)};
        inst.cost = CostModel::per_ranking(testutil::random_costs(rng, n, 3));
        inst.budget = 2;
        inst.k = 1;

        CostOracleResult a = oracle_dollar(inst);
        CostOracleResult b = oracle_dollar(inst);
        CHECK(a.min_cost == b.min_cost);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("feasibility frontier is certified") {
    // the returned minimum is feasible and one unit less is not
    std::mt19937_64 rng(20240823);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = 2 + testutil::draw(rng, 4);
        std::size_t n = 1 + testutil::draw(rng, 4);
        ManipulationInstance inst;
        inst.candidates = testutil::letter_candidates(m);
        inst.target = random_ranking(rng, m);
        std::vector<Ranking> rankings;
        for (std::size_t i = 0; i < n; ++i) rankings.push_back(random_ranking(rng, m));
        inst.profile = Profile{std::move(rankings)};
        inst.cost = CostModel::per_ranking(testutil::random_costs(rng, n, 4));
        inst.k = static_cast<long long>(testutil::draw(rng, 6));

        CostOracleResult res = oracle_dollar(inst);
        ManipulationInstance at = inst;
        at.budget = res.min_cost;
        CHECK(oracle_dollar(at).min_cost <= at.budget);
        if (res.min_cost > 0) {
            ManipulationInstance below = inst;
            below.budget = res.min_cost - 1;
            CHECK(oracle_dollar(below).min_cost > below.budget);
        }
    }
}

TEST_CASE("caps abort oversized enumerations") {
    ManipulationInstance big;
    big.candidates = testutil::letter_candidates(10);
    std::vector<CandidateId> order(10);
    std::iota(order.begin(), order.end(), 0);
    big.target = Ranking(order);
    big.profile = Profile{{Ranking(order)}};
    big.cost = CostModel::per_ranking({1});
    CHECK_THROWS_AS(oracle_pks(big), instance_too_large_error);

    OracleBudget wide;
    wide.max_candidates = 10;
    wide.max_total_enumeration = 1000; // 10! is way past this
    CHECK_THROWS_AS(oracle_pks(big, wide), instance_too_large_error);

    OracleBudget roomy;
    roomy.max_candidates = 10;
    roomy.max_total_enumeration = 10'000'000;
    CHECK(oracle_pks(big, roomy).min_distance == 0);

    big.cost = CostModel::per_candidate(std::vector<Cost>(10, 1));
    CHECK_THROWS_AS(oracle_candidate_deletion(big), instance_too_large_error);
}
