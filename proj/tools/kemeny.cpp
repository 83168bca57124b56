#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kemeny/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kemeny::error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    std::string dir = ".";
    std::string file_pattern = pattern;
    std::size_t slash = pattern.find_last_of('/');
    if (slash != std::string::npos) {
        dir = pattern.substr(0, slash);
        file_pattern = pattern.substr(slash + 1);
    }
    std::vector<std::string> paths;
    if (!fs::is_directory(dir)) return paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (fnmatch(file_pattern.c_str(), name.c_str(), 0) == 0) paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

struct GenOptions {
    std::size_t m = 0;
    std::size_t n = 0;
    std::string model = "uniform";
    double phi = 0.5;
    std::uint64_t seed = 0;
    long long k = -1; // -1: half the profile distance
    kemeny::Cost budget = 1;
    double drop = 0.0;
    kemeny::Cost max_cost = 1;
    std::string output;
};

std::string generate_instance(const GenOptions& g) {
    using namespace kemeny;
    std::vector<std::string> labels(g.m);
    for (std::size_t i = 0; i < g.m; ++i)
        labels[i] = g.m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i + 1);

    std::vector<CandidateId> identity(g.m);
    std::iota(identity.begin(), identity.end(), 0);
    Ranking reference(identity);

    ProfileModel model;
    if (g.model == "uniform")
        model = UniformModel{};
    else if (g.model == "mallows")
        model = MallowsModel{reference, g.phi};
    else
        throw error("unknown model '" + g.model + "' (expected uniform or mallows)");

    Profile profile = generate_profile(g.m, g.n, model, g.seed);

    std::mt19937_64 rng(g.seed ^ 0x9e3779b97f4a7c15ull);
    auto draw_cost = [&]() -> Cost {
        return g.max_cost <= 1 ? 1 : 1 + static_cast<Cost>(rng() % static_cast<std::uint64_t>(g.max_cost));
    };

    if (g.drop > 0.0) {
        std::vector<Ranking> partial;
        for (const Ranking& r : profile) {
            std::vector<CandidateId> kept;
            for (CandidateId c : r) {
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u >= g.drop) kept.push_back(c);
            }
            partial.push_back(Ranking(kept));
        }
        profile = Profile{std::move(partial)};
    }

    InstanceFile f;
    f.candidates = Candidates(labels);
    f.target = reference;
    f.profile = profile;
    f.budget = g.budget;
    f.ranking_costs.resize(g.n);
    for (auto& c : f.ranking_costs) c = draw_cost();
    f.candidate_costs.resize(g.m);
    for (auto& c : f.candidate_costs) c = draw_cost();
    f.k = g.k >= 0 ? g.k : distance_to_profile(f.target, f.profile) / 2;
    return render_instance(f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers, oracles and instance tooling for Kemeny-score manipulation"};
    app.require_subcommand(0, 1);

    GenOptions g;
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--m", g.m, "number of candidates")->required();
    gen->add_option("--n", g.n, "number of rankings")->required();
    gen->add_option("--model", g.model, "uniform or mallows")->default_val("uniform");
    gen->add_option("--phi", g.phi, "mallows dispersion in (0, 1]")->default_val(0.5);
    gen->add_option("--seed", g.seed, "rng seed")->default_val(0);
    gen->add_option("--k", g.k, "score bound (default: half the profile distance)");
    gen->add_option("--budget", g.budget, "budget")->default_val(1);
    gen->add_option("--drop", g.drop, "probability of dropping a candidate from a ranking")->default_val(0.0);
    gen->add_option("--max-cost", g.max_cost, "costs are drawn uniformly from 1..max-cost")->default_val(1);
    gen->add_option("-o,--output", g.output, "write to a file instead of stdout");

    std::string action_arg, file_arg, glob_arg;
    bool json_out = false, verify = false;
    std::uint64_t seed_arg = 0;
    std::uint64_t cap_arg = 0;
    std::size_t wpvc_cap = 20;
    app.add_option("action", action_arg,
                   "pks | dollar | rdel | swap | cdel-k0 | cdel-single | oracle:{pks,dollar,swap,cdel}");
    app.add_option("file", file_arg, "instance file");
    app.add_flag("--json", json_out, "emit one JSON line instead of the table");
    app.add_flag("--verify", verify, "also re-check witnesses of NO answers; fail hard on mismatch");
    auto* seed_opt = app.add_option("--seed", seed_arg, "recorded in the result record");
    auto* cap_opt = app.add_option("--cap", cap_arg, "oracle enumeration cap (beats KEMENY_ORACLE_CAP)");
    app.add_option("--wpvc-cap", wpvc_cap, "vertex cap for the WPVC brute force")->default_val(20);
    app.add_option("--glob", glob_arg, "solve every matching file, one JSON line each");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::string text = generate_instance(g);
            if (g.output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(g.output, std::ios::binary);
                if (!out) throw kemeny::error("cannot write '" + g.output + "'");
                out << text;
            }
            return 0;
        }

        if (action_arg.empty()) {
            std::cerr << "error: missing action (see --help)\n";
            return 2;
        }
        auto action = kemeny::parse_action(action_arg);
        if (!action) {
            std::cerr << "error: unknown action '" << action_arg << "'\n";
            return 2;
        }

        kemeny::RunOptions opts;
        opts.verify = verify;
        opts.wpvc_cap = wpvc_cap;
        if (*seed_opt) opts.seed = seed_arg;
        if (const char* env = std::getenv("KEMENY_ORACLE_CAP"))
            opts.oracle_budget.max_total_enumeration = std::strtoull(env, nullptr, 10);
        if (*cap_opt) opts.oracle_budget.max_total_enumeration = cap_arg;

        if (!glob_arg.empty()) {
            std::vector<std::string> paths = expand_glob(glob_arg);
            if (paths.empty()) throw kemeny::error("no files match '" + glob_arg + "'");
            int worst = 0;
            for (const std::string& path : paths) {
                kemeny::InstanceFile file = kemeny::parse_instance(read_file(path));
                kemeny::ResultRecord record = kemeny::run(*action, file, opts);
                nlohmann::json j = record.to_json();
                j["file"] = path;
                std::cout << j.dump() << '\n' << std::flush;
                worst = std::max(worst, record.exit_code());
            }
            return worst;
        }

        if (file_arg.empty()) {
            std::cerr << "error: missing instance file (see --help)\n";
            return 2;
        }
        kemeny::InstanceFile file = kemeny::parse_instance(read_file(file_arg));
        kemeny::ResultRecord record = kemeny::run(*action, file, opts);
        if (json_out)
            std::cout << record.to_json().dump() << '\n';
        else
            std::cout << record.to_table();
        if (record.verify == "fail")
            std::cerr << "error: witness failed re-verification\n";
        return record.exit_code();
    } catch (const kemeny::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
