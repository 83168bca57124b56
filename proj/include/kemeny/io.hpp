#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

/// One parsed instance file. A single file feeds every solver; the action
/// (and with it the relevant cost vector) is chosen at run time.
struct InstanceFile {
    Candidates candidates;
    Ranking target;
    long long k = 0;
    Cost budget = 0;
    std::vector<Cost> ranking_costs;   // aligned with the profile, default all 1
    std::vector<Cost> candidate_costs; // indexed by candidate id, default all 1
    Profile profile;

    ManipulationInstance to_instance(CostKind kind) const;

    bool operator==(const InstanceFile&) const = default;
};

/// Parse the line-oriented instance format. '#' starts a comment, blank
/// lines are ignored. Reports 1-based line/column positions on errors.
InstanceFile parse_instance(std::string_view text);

/// Canonical rendering; parse_instance(render_instance(f)) == f.
std::string render_instance(const InstanceFile& f);

/// FNV-1a 64-bit digest of the canonical rendering, as 16 hex digits.
std::string instance_digest(const InstanceFile& f);

struct UniformModel {};
struct MallowsModel {
    Ranking reference;
    double phi = 0.5; // dispersion, 0 < phi <= 1; 1 is uniform
};
using ProfileModel = std::variant<UniformModel, MallowsModel>;

/// Deterministic profile sampler. Mallows uses repeated insertion: the i-th
/// reference item lands j positions from the bottom with probability
/// proportional to phi^j. Uniform is the phi = 1 special case.
Profile generate_profile(std::size_t m, std::size_t n, const ProfileModel& model, std::uint64_t seed);

} // namespace kemeny
