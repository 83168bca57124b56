#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {

using CandidateId = int;
using Cost = long long;

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

/// Saturating addition so that infinity + anything stays infinity.
constexpr Cost add_cost(Cost a, Cost b) {
    return (a == kInfiniteCost || b == kInfiniteCost) ? kInfiniteCost : a + b;
}

struct Candidate {
    CandidateId id;
    std::string label;
};

/// An interned candidate set. Labels are interned to dense ids 0..m-1 at
/// construction; all solver code works on ids, labels appear again only at
/// the I/O boundary.
class Candidates {
public:
    Candidates() = default;
    explicit Candidates(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(CandidateId id) const;
    Candidate at(CandidateId id) const { return {id, label(id)}; }
    std::optional<CandidateId> find(const std::string& label) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Candidates& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, CandidateId> index_;
};

/// A total order over a subset of the candidates. Position 0 is the most
/// preferred candidate. Rankings are immutable values after construction.
class Ranking {
public:
    Ranking() = default;
    explicit Ranking(std::vector<CandidateId> order);

    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }
    CandidateId at(std::size_t pos) const;
    const std::vector<CandidateId>& order() const { return order_; }
    bool contains(CandidateId c) const;
    std::optional<std::size_t> position_of(CandidateId c) const;

    auto begin() const { return order_.begin(); }
    auto end() const { return order_.end(); }

    bool operator==(const Ranking&) const = default;

private:
    std::vector<CandidateId> order_;
};

/// Position lookup table: table[id] = position of id in r, or -1 when id is
/// not ranked. Sized to hold every id in r and at least min_size slots.
std::vector<std::int32_t> position_table(const Ranking& r, std::size_t min_size = 0);

/// An ordered tuple of rankings. Indexing is stable; solvers identify
/// rankings by their index in this tuple.
struct Profile {
    std::vector<Ranking> rankings;

    std::size_t size() const { return rankings.size(); }
    const Ranking& operator[](std::size_t i) const { return rankings[i]; }
    auto begin() const { return rankings.begin(); }
    auto end() const { return rankings.end(); }

    bool operator==(const Profile&) const = default;
};

enum class CostKind {
    PerRanking,   // $-bribery and ranking deletion: price of touching ranking i
    PerSwap,      // swap bribery: price of one adjacent swap inside ranking i
    PerCandidate, // candidate deletion: price of deleting candidate c
};

/// Non-negative integer costs keyed by ranking index or candidate id,
/// depending on the kind.
struct CostModel {
    CostKind kind = CostKind::PerRanking;
    std::vector<Cost> values;

    static CostModel per_ranking(std::vector<Cost> v);
    static CostModel per_swap(std::vector<Cost> v);
    static CostModel per_candidate(std::vector<Cost> v);

    Cost at(std::size_t i) const;
};

/// One bribery problem: manipulate `profile` so that `target` ends up within
/// total Kendall tau distance k, spending at most `budget`.
struct ManipulationInstance {
    Candidates candidates;
    Profile profile;
    Ranking target;
    CostModel cost;
    Cost budget = 0;
    long long k = 0;
};

// --- Kendall tau machinery -------------------------------------------------

/// Number of candidate pairs ordered differently by the two rankings,
/// counted over the common support when the supports differ. Pairwise
/// scan, O(|common|^2); this is the oracle-grade baseline.
long long kendall_tau(const Ranking& a, const Ranking& b);

/// Sum of kendall_tau(x, R_i) over the profile.
long long distance_to_profile(const Ranking& x, const Profile& profile);

/// The ordering of pi restricted to the candidate set keep. Every id in keep
/// must be ranked by pi.
Ranking restrict_to(const Ranking& pi, const std::vector<CandidateId>& keep);

/// Number of candidates y (in the common support) whose order relative to x
/// differs between the two rankings. Summed over all x this counts every
/// disagreeing pair twice.
long long disagreements_wrt(const Ranking& a, const Ranking& b, CandidateId x);

/// True iff every pair within s has the same relative order in both rankings.
bool agrees_over(const Ranking& a, const Ranking& b, const std::vector<CandidateId>& s);

/// Leftmost position p (0-based) such that the adjacent pair (r[p], r[p+1])
/// is ordered the other way around in x, or nullopt when no adjacent pair
/// disagrees. For equal supports, nullopt iff kendall_tau(r, x) == 0.
std::optional<std::size_t> find_admissible_disagreement(const Ranking& r, const Ranking& x);

/// r with the elements at positions p and p+1 exchanged (0-based). When the
/// swapped pair disagreed with some target x, the distance to x drops by
/// exactly one.
Ranking apply_adjacent_swap(const Ranking& r, std::size_t p);

// --- Instance validation helpers --------------------------------------------

/// True iff r ranks exactly the ids 0..m-1.
bool is_complete(const Ranking& r, std::size_t m);

void require_complete_target(const ManipulationInstance& inst);
void require_complete_profile(const ManipulationInstance& inst);
void require_cost_kind(const ManipulationInstance& inst, CostKind kind, std::size_t expected_size);

} // namespace kemeny
