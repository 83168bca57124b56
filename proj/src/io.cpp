#include "kemeny/io.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace kemeny {

ManipulationInstance InstanceFile::to_instance(CostKind kind) const {
    ManipulationInstance inst;
    inst.candidates = candidates;
    inst.profile = profile;
    inst.target = target;
    inst.budget = budget;
    inst.k = k;
    switch (kind) {
    case CostKind::PerRanking: inst.cost = CostModel::per_ranking(ranking_costs); break;
    case CostKind::PerSwap: inst.cost = CostModel::per_swap(ranking_costs); break;
    case CostKind::PerCandidate: inst.cost = CostModel::per_candidate(candidate_costs); break;
    }
    return inst;
}

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

long long parse_number(const Token& tok, int line, const char* what) {
    if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos) {
        if (!tok.text.empty() && tok.text[0] == '-')
            throw parse_error(line, tok.column, std::string(what) + " must be non-negative, got '" + tok.text + "'");
        throw parse_error(line, tok.column, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                                tok.text + "'");
    }
    try {
        return std::stoll(tok.text);
    } catch (const std::out_of_range&) {
        throw parse_error(line, tok.column, std::string(what) + " '" + tok.text + "' is out of range");
    }
}

void check_label(const Token& tok, int line) {
    if (tok.text.find_first_of(":=") != std::string::npos)
        throw parse_error(line, tok.column, "candidate label '" + tok.text + "' may not contain ':' or '='");
}

} // namespace

InstanceFile parse_instance(std::string_view text) {
    std::optional<Candidates> candidates;
    std::optional<Ranking> target;
    std::optional<long long> k;
    std::optional<Cost> budget;
    std::optional<std::vector<Cost>> ranking_costs;
    std::optional<std::vector<std::optional<Cost>>> candidate_costs;
    std::vector<Ranking> rankings;

    auto resolve = [&](const Token& tok, int line) -> CandidateId {
        if (!candidates)
            throw parse_error(line, tok.column, "the candidates line must appear before any line naming candidates");
        auto id = candidates->find(tok.text);
        if (!id) throw parse_error(line, tok.column, "unknown candidate '" + tok.text + "'");
        return *id;
    };

    auto parse_ranking_line = [&](const std::vector<Token>& tokens, int line, const char* what) -> Ranking {
        std::vector<CandidateId> order;
        std::vector<char> seen(candidates ? candidates->size() : 0, 0);
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            CandidateId id = resolve(tokens[t], line);
            if (seen[static_cast<std::size_t>(id)])
                throw parse_error(line, tokens[t].column,
                                  "duplicate candidate '" + tokens[t].text + "' in " + std::string(what));
            seen[static_cast<std::size_t>(id)] = 1;
            order.push_back(id);
        }
        return Ranking(order);
    };

    int line_no = 0;
    std::size_t cursor = 0;
    while (cursor <= text.size()) {
        std::size_t eol = text.find('\n', cursor);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(cursor, eol - cursor);
        cursor = eol + 1;
        ++line_no;

        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) {
            if (cursor > text.size()) break;
            continue;
        }

        const std::string& key = tokens[0].text;
        if (key == "candidates:") {
            if (candidates) throw parse_error(line_no, tokens[0].column, "duplicate candidates line");
            std::vector<std::string> labels;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                check_label(tokens[t], line_no);
                if (std::find(labels.begin(), labels.end(), tokens[t].text) != labels.end())
                    throw parse_error(line_no, tokens[t].column, "duplicate candidate '" + tokens[t].text + "'");
                labels.push_back(tokens[t].text);
            }
            if (labels.empty()) throw parse_error(line_no, tokens[0].column, "candidate set must be non-empty");
            candidates = Candidates(labels);
        } else if (key == "X:") {
            if (target) throw parse_error(line_no, tokens[0].column, "duplicate X line");
            target = parse_ranking_line(tokens, line_no, "X");
        } else if (key == "k:") {
            if (k) throw parse_error(line_no, tokens[0].column, "duplicate k line");
            if (tokens.size() != 2) throw parse_error(line_no, tokens[0].column, "expected exactly one value for k");
            k = parse_number(tokens[1], line_no, "k");
        } else if (key == "budget:") {
            if (budget) throw parse_error(line_no, tokens[0].column, "duplicate budget line");
            if (tokens.size() != 2)
                throw parse_error(line_no, tokens[0].column, "expected exactly one value for budget");
            budget = parse_number(tokens[1], line_no, "budget");
        } else if (key == "ranking-costs:") {
            if (ranking_costs) throw parse_error(line_no, tokens[0].column, "duplicate ranking-costs line");
            std::vector<Cost> costs;
            for (std::size_t t = 1; t < tokens.size(); ++t)
                costs.push_back(parse_number(tokens[t], line_no, "ranking cost"));
            ranking_costs = std::move(costs);
        } else if (key == "candidate-costs:") {
            if (candidate_costs) throw parse_error(line_no, tokens[0].column, "duplicate candidate-costs line");
            if (!candidates)
                throw parse_error(line_no, tokens[0].column,
                                  "the candidates line must appear before candidate-costs");
            std::vector<std::optional<Cost>> costs(candidates->size());
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                std::size_t eq = tokens[t].text.find('=');
                if (eq == std::string::npos)
                    throw parse_error(line_no, tokens[t].column,
                                      "expected label=cost, got '" + tokens[t].text + "'");
                std::string label = tokens[t].text.substr(0, eq);
                auto id = candidates->find(label);
                if (!id) throw parse_error(line_no, tokens[t].column, "unknown candidate '" + label + "'");
                if (costs[static_cast<std::size_t>(*id)])
                    throw parse_error(line_no, tokens[t].column, "duplicate cost for candidate '" + label + "'");
                Token value{tokens[t].text.substr(eq + 1), tokens[t].column + static_cast<int>(eq) + 1};
                costs[static_cast<std::size_t>(*id)] = parse_number(value, line_no, "candidate cost");
            }
            candidate_costs = std::move(costs);
        } else if (key == "R:") {
            rankings.push_back(parse_ranking_line(tokens, line_no, "R"));
        } else {
            throw parse_error(line_no, tokens[0].column, "unknown key '" + key + "'");
        }
        if (cursor > text.size()) break;
    }

    if (!candidates) throw parse_error(line_no, 1, "missing candidates line");
    if (!target) throw parse_error(line_no, 1, "missing X line");
    if (!k) throw parse_error(line_no, 1, "missing k line");
    if (!budget) throw parse_error(line_no, 1, "missing budget line");
    if (!is_complete(*target, candidates->size()))
        throw parse_error(line_no, 1, "X must rank every candidate exactly once");

    InstanceFile f;
    f.candidates = *candidates;
    f.target = *target;
    f.k = *k;
    f.budget = *budget;
    f.profile = Profile{std::move(rankings)};

    if (ranking_costs) {
        if (ranking_costs->size() != f.profile.size())
            throw parse_error(line_no, 1,
                              "ranking-costs lists " + std::to_string(ranking_costs->size()) +
                                  " values but there are " + std::to_string(f.profile.size()) + " R lines");
        f.ranking_costs = *ranking_costs;
    } else {
        f.ranking_costs.assign(f.profile.size(), 1);
    }
    f.candidate_costs.assign(f.candidates.size(), 1);
    if (candidate_costs)
        for (std::size_t i = 0; i < candidate_costs->size(); ++i)
            if ((*candidate_costs)[i]) f.candidate_costs[i] = *(*candidate_costs)[i];
    return f;
}

std::string render_instance(const InstanceFile& f) {
    std::ostringstream out;
    out << "candidates:";
    for (const auto& label : f.candidates.labels()) out << ' ' << label;
    out << "\nX:";
    for (CandidateId c : f.target) out << ' ' << f.candidates.label(c);
    out << "\nk: " << f.k;
    out << "\nbudget: " << f.budget;
    if (!f.ranking_costs.empty()) {
        out << "\nranking-costs:";
        for (Cost c : f.ranking_costs) out << ' ' << c;
    }
    out << "\ncandidate-costs:";
    for (std::size_t i = 0; i < f.candidate_costs.size(); ++i)
        out << ' ' << f.candidates.label(static_cast<CandidateId>(i)) << '=' << f.candidate_costs[i];
    out << '\n';
    for (const Ranking& r : f.profile) {
        out << "R:";
        for (CandidateId c : r) out << ' ' << f.candidates.label(c);
        out << '\n';
    }
    return out.str();
}

std::string instance_digest(const InstanceFile& f) {
    std::string text = render_instance(f);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

// Portable canonical double in [0, 1): top 53 bits of the generator output.
double canonical(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<CandidateId> sample_insertion(const Ranking& reference, double phi, std::mt19937_64& rng) {
    std::vector<CandidateId> out;
    out.reserve(reference.size());
    std::vector<double> weight; // weight[j] for position j from the bottom
    for (std::size_t i = 0; i < reference.size(); ++i) {
        weight.resize(i + 1);
        double total = 0;
        double w = 1.0;
        for (std::size_t j = 0; j <= i; ++j) {
            weight[j] = w;
            total += w;
            w *= phi;
        }
        double u = canonical(rng) * total;
        std::size_t from_bottom = i;
        for (std::size_t j = 0; j <= i; ++j) {
            if (u < weight[j]) {
                from_bottom = j;
                break;
            }
            u -= weight[j];
        }
        out.insert(out.end() - static_cast<std::ptrdiff_t>(from_bottom), reference.at(i));
    }
    return out;
}

} // namespace

Profile generate_profile(std::size_t m, std::size_t n, const ProfileModel& model, std::uint64_t seed) {
    if (m < 1) throw malformed_instance_error("profile generation needs at least one candidate");

    Ranking reference;
    double phi = 1.0;
    if (const auto* mallows = std::get_if<MallowsModel>(&model)) {
        if (!(mallows->phi > 0.0) || mallows->phi > 1.0)
            throw malformed_instance_error("mallows dispersion must satisfy 0 < phi <= 1");
        if (!is_complete(mallows->reference, m))
            throw malformed_instance_error("mallows reference must be a complete ranking over the candidates");
        reference = mallows->reference;
        phi = mallows->phi;
    } else {
        std::vector<CandidateId> identity(m);
        std::iota(identity.begin(), identity.end(), 0);
        reference = Ranking(identity);
    }

    std::mt19937_64 rng(seed);
    Profile profile;
    profile.rankings.reserve(n);
    for (std::size_t i = 0; i < n; ++i) profile.rankings.push_back(Ranking(sample_insertion(reference, phi, rng)));
    return profile;
}

} // namespace kemeny
