#ifndef MAXMINPB_TESTS_SUPPORT_HPP
#define MAXMINPB_TESTS_SUPPORT_HPP

#include "maxminpb/core.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using maxminpb::Cost;
using maxminpb::Instance;
using maxminpb::Project;

inline Instance make(const std::vector<std::pair<std::string, Cost>>& projects,
                     Cost budget,
                     const std::vector<std::vector<std::string>>& votes) {
    std::vector<Project> ps;
    for (const auto& [id, cost] : projects) ps.push_back(Project{id, cost});
    return Instance::create(std::move(ps), budget, votes);
}

// ---- canonical hand-built instances shared across suites ----

// unanimous cheap project that never wins
inline Instance narrow_top() {
    return make({{"p1", 1}, {"p2", 3}, {"p3", 3}}, 6,
                {{"p1", "p2"}, {"p1", "p3"}});
}

// four equal-cost projects; discounting a winner can eject it
inline Instance discount_quads() {
    return make({{"p1", 4}, {"p2", 4}, {"p3", 4}, {"p4", 4}}, 12,
                {{"p1", "p2"}, {"p3"}, {"p4"}});
}

// optimum 0 at b=12, positive at b=13, and raising the budget drops p1
inline Instance budget_limit(Cost b = 12) {
    return make({{"p1", 3}, {"p2", 1}, {"p3", 3}, {"p4", 3}, {"p5", 3},
                 {"p6", 6}},
                b, {{"p1", "p2"}, {"p3", "p4"}, {"p5"}, {"p6"}});
}

// two voting blocs, 5 versus 3 voters; utilitarian and maxmin winners differ
inline Instance two_counties() {
    std::vector<std::vector<std::string>> votes;
    for (int i = 0; i < 5; ++i) votes.push_back({"X1", "X2", "X3"});
    for (int i = 0; i < 3; ++i) votes.push_back({"Y1", "Y2", "Y3"});
    return make({{"X1", 50}, {"X2", 100}, {"X3", 100}, {"Y1", 70},
                 {"Y2", 70}, {"Y3", 80}},
                225, votes);
}

inline Instance three_villages() {
    std::vector<std::vector<std::string>> votes;
    for (int i = 0; i < 5; ++i) votes.push_back({"X1", "X2", "X3", "X4"});
    for (int i = 0; i < 3; ++i) votes.push_back({"Y1", "Y2", "Y3"});
    votes.push_back({"Z1"});
    return make({{"X1", 10}, {"X2", 20}, {"X3", 20}, {"X4", 60}, {"Y1", 14},
                 {"Y2", 14}, {"Y3", 16}, {"Z1", 6}},
                50, votes);
}

// min fill 1, max fill 2
inline Instance order_gap() {
    return make({{"p1", 2}, {"p2", 3}, {"p3", 2}}, 4, {{"p1"}, {"p3"}});
}

inline Instance hcbp_demo() {
    return make({{"p1", 1}, {"p2", 2}, {"p3", 3}, {"p4", 1}, {"p5", 2},
                 {"p6", 3}},
                9, {{"p1", "p2"}, {"p4", "p6"}, {"p3", "p5"}});
}

// ---- seeded random instances for the sweeps ----

struct RandomParams {
    std::size_t max_projects = 12;
    std::size_t max_voters = 8;
    Cost max_cost = 20;
    Cost max_budget = 40;
    bool allow_empty_votes = true;
};

inline std::string padded(std::size_t k) {
    std::string s = std::to_string(k);
    while (s.size() < 2) s = "0" + s;
    return "p" + s;
}

// uses raw engine draws so the sampled instance is identical on every
// platform; modulo bias is irrelevant here
inline Instance random_instance(std::mt19937_64& rng,
                                const RandomParams& params = {}) {
    std::size_t m = 2 + rng() % (params.max_projects - 1);
    std::size_t n = 1 + rng() % params.max_voters;

    std::vector<std::pair<std::string, Cost>> projects;
    for (std::size_t k = 1; k <= m; ++k)
        projects.emplace_back(padded(k),
                              1 + static_cast<Cost>(rng() % params.max_cost));
    Cost budget = 1 + static_cast<Cost>(rng() % params.max_budget);

    std::vector<std::vector<std::string>> votes(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (params.allow_empty_votes && rng() % 20 == 0) continue;
        std::size_t size = 1 + rng() % m;
        std::vector<std::size_t> pool(m);
        for (std::size_t k = 0; k < m; ++k) pool[k] = k + 1;
        for (std::size_t k = 0; k < size; ++k)
            std::swap(pool[k], pool[k + rng() % (m - k)]);
        for (std::size_t k = 0; k < size; ++k)
            votes[i].push_back(padded(pool[k]));
    }
    return make(projects, budget, votes);
}

inline std::string env_or(const char* var, const std::string& fallback) {
    const char* v = std::getenv(var);
    return v ? v : fallback;
}

inline std::string fixtures_dir() {
    return env_or("MAXMINPB_FIXTURES", "data/fixtures");
}

inline std::string cli_path() {
    return env_or("MAXMINPB_CLI", "build/tools/maxminpb");
}

} // namespace testsupport

#endif
