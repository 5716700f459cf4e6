#include "doctest.h"

#include "maxminpb/approx.hpp"
#include "maxminpb/lp.hpp"
#include "maxminpb/solvers.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace maxminpb;
using namespace testsupport;

TEST_SUITE_BEGIN("solvers");

namespace {

std::vector<std::string> id_set(const Instance& inst,
                                const std::vector<ProjectIndex>& ps) {
    std::vector<std::string> out;
    for (ProjectIndex p : ps) out.push_back(inst.id(p));
    return out;
}

std::vector<std::vector<std::string>> id_family(const Instance& inst,
                                                const SolveResult& res) {
    std::vector<std::vector<std::string>> fam;
    REQUIRE(res.all_optimal.has_value());
    for (const Outcome& s : *res.all_optimal)
        fam.push_back(id_set(inst, s.selected));
    return fam;
}

// independent reference: straight mask enumeration, no shared code with the
// production enumerator beyond the Instance accessors
Cost reference_optimum(const Instance& inst) {
    const std::size_t m = inst.num_projects();
    Cost best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        Cost cost = 0;
        for (std::size_t p = 0; p < m; ++p)
            if (mask >> p & 1) cost += inst.cost(static_cast<ProjectIndex>(p));
        if (cost > inst.budget()) continue;
        Cost worst = -1;
        for (std::size_t i = 0; i < inst.num_voters(); ++i) {
            Cost covered = 0;
            for (ProjectIndex p : inst.votes()[i])
                if (mask >> p & 1) covered += inst.cost(p);
            if (worst < 0 || covered < worst) worst = covered;
        }
        best = std::max(best, worst);
    }
    return best;
}

} // namespace

TEST_CASE("brute force on the three canonical instances") {
    SolveResult nt = brute_force_solve(narrow_top(), true);
    CHECK(nt.value == 3);
    CHECK(id_family(narrow_top(), nt) ==
          std::vector<std::vector<std::string>>{{"p2", "p3"}});
    CHECK(id_set(narrow_top(), *nt.winners) ==
          std::vector<std::string>{"p2", "p3"});

    SolveResult dc = brute_force_solve(discount_quads(), true);
    CHECK(dc.value == 4);
    CHECK(id_family(discount_quads(), dc) ==
          std::vector<std::vector<std::string>>{{"p1", "p3", "p4"},
                                                {"p2", "p3", "p4"}});
    CHECK(id_set(discount_quads(), *dc.winners) ==
          std::vector<std::string>{"p1", "p2", "p3", "p4"});

    // blocs of 5 and 3 voters fighting over 225: the 3-bloc caps the
    // minimum at 80 via its most expensive project
    SolveResult tc = brute_force_solve(two_counties(), true);
    CHECK(tc.value == 80);
    CHECK(id_family(two_counties(), tc) ==
          std::vector<std::vector<std::string>>{{"X2", "Y3"}, {"X3", "Y3"}});
    CHECK(id_set(two_counties(), *tc.winners) ==
          std::vector<std::string>{"X2", "X3", "Y3"});
}

TEST_CASE("brute force agrees with plain mask enumeration") {
    std::mt19937_64 rng(12);
    RandomParams params;
    params.max_projects = 10;
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst = random_instance(rng, params);
        CHECK(brute_force_solve(inst).value == reference_optimum(inst));
    }
}

TEST_CASE("witness is the lexicographically smallest optimal set") {
    SolveResult dc = brute_force_solve(discount_quads());
    CHECK(id_set(discount_quads(), dc.witness.selected) ==
          std::vector<std::string>{"p1", "p3", "p4"});

    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        Instance inst = random_instance(rng);
        SolveResult res = brute_force_solve(inst, true);
        if (res.zero_optimum) {
            CHECK(res.witness.selected.empty());
            continue;
        }
        REQUIRE(!res.all_optimal->empty());
        // family is lex-sorted and the witness is its head
        CHECK(res.witness.selected == res.all_optimal->front().selected);
        for (std::size_t k = 1; k < res.all_optimal->size(); ++k)
            CHECK(set_lex_less((*res.all_optimal)[k - 1].selected,
                               (*res.all_optimal)[k].selected));
    }
}

TEST_CASE("zero optimum short-circuits the family") {
    Instance inst = budget_limit(12);
    SolveResult res = brute_force_solve(inst, true);
    CHECK(res.value == 0);
    CHECK(res.zero_optimum);
    CHECK(res.witness.selected.empty());
    CHECK(!res.all_optimal.has_value());
    // winners collapse to affordability
    CHECK(id_set(inst, *res.winners) ==
          std::vector<std::string>{"p1", "p2", "p3", "p4", "p5", "p6"});

    // a project priced above the budget is excluded from those winners
    Instance pricey = make({{"p1", 2}, {"p2", 9}}, 5, {{"p1"}, {"p2"}});
    SolveResult pres = brute_force_solve(pricey, true);
    CHECK(pres.zero_optimum);
    CHECK(id_set(pricey, *pres.winners) == std::vector<std::string>{"p1"});
}

TEST_CASE("brute force refuses oversized instances") {
    std::vector<std::pair<std::string, Cost>> projects;
    for (int k = 0; k < 23; ++k)
        projects.emplace_back("p" + std::to_string(100 + k), 1);
    Instance inst = make(projects, 5, {{"p100"}});
    CHECK_THROWS_AS(brute_force_solve(inst), SizeError);
    BruteOptions wide;
    wide.max_projects = 23;
    CHECK(brute_force_solve(inst, false, wide).value == 1);
}

TEST_CASE("all-optimal cap truncates but winners stay exact") {
    // 12 unit-cost projects, one voter approving all, b=6: C(12,6) = 924
    // optimal sets of value 6
    std::vector<std::pair<std::string, Cost>> projects;
    std::vector<std::string> all;
    for (int k = 10; k < 22; ++k) {
        projects.emplace_back("p" + std::to_string(k), 1);
        all.push_back("p" + std::to_string(k));
    }
    Instance inst = make(projects, 6, {all});
    BruteOptions opts;
    opts.all_optimal_cap = 50;
    SolveResult res = brute_force_solve(inst, true, opts);
    CHECK(res.value == 6);
    REQUIRE(res.all_optimal.has_value());
    CHECK(res.all_optimal->size() == 50);
    CHECK(res.all_optimal_truncated);
    CHECK(res.winners->size() == 12); // every project is in some optimal set

    SolveResult bres = branch_and_bound_solve(inst, true, {});
    CHECK(bres.value == 6);
    CHECK(bres.all_optimal->size() == 924);
    CHECK(!bres.all_optimal_truncated);
    CHECK(bres.winners->size() == 12);
}

TEST_CASE("dp value on canonical and subset-sum instances") {
    CHECK(dp_solve(narrow_top()).value == 3);
    CHECK(dp_solve(budget_limit(13)).value == 1);
    // single voter approving everything degenerates to subset-sum
    Instance ss = make({{"p1", 2}, {"p2", 3}, {"p3", 4}}, 5,
                       {{"p1", "p2", "p3"}});
    CHECK(dp_solve(ss).value == 5);
}

TEST_CASE("dp witness attains the value and is feasible") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst = random_instance(rng);
        SolveResult res = dp_solve(inst);
        CHECK(res.witness.total_cost <= inst.budget());
        CHECK(maxmin_value(inst, res.witness) == res.value);
        CHECK(!res.all_optimal.has_value());
        CHECK(!res.winners.has_value());
    }
}

TEST_CASE("dp state cap raises a resource error") {
    Instance inst = two_counties();
    DpOptions opts;
    opts.max_states = 1;
    CHECK_THROWS_AS(dp_solve(inst, opts), ResourceLimitError);
    CHECK(dp_state_bound(inst) > 0);
    CHECK(dp_state_bound(inst, 100) <= 100);
}

TEST_CASE("dominance pruning never changes the dp value") {
    std::mt19937_64 rng(441);
    RandomParams params;
    params.max_projects = 8;
    params.max_voters = 5;
    for (int trial = 0; trial < 80; ++trial) {
        Instance inst = random_instance(rng, params);
        DpOptions raw;
        raw.prune = false;
        CHECK(dp_solve(inst).value == dp_solve(inst, raw).value);
    }
}

TEST_CASE("branch and bound on the canonical instances") {
    SolveResult nt = branch_and_bound_solve(narrow_top(), true);
    CHECK(nt.value == 3);
    CHECK(id_family(narrow_top(), nt) ==
          std::vector<std::vector<std::string>>{{"p2", "p3"}});

    SolveResult tc = branch_and_bound_solve(two_counties(), true);
    CHECK(tc.value == 80);
    CHECK(id_family(two_counties(), tc) ==
          std::vector<std::vector<std::string>>{{"X2", "Y3"}, {"X3", "Y3"}});
    CHECK(id_set(two_counties(), *tc.winners) ==
          std::vector<std::string>{"X2", "X3", "Y3"});
}

TEST_CASE("warm start closes the search at the root") {
    // greedy incumbent already equals the root bound, so no branching
    Instance inst = make({{"p1", 1}, {"p2", 1}, {"p3", 1}}, 2,
                         {{"p1", "p2", "p3"}});
    BnbStats stats;
    BnbOptions opts;
    opts.stats = &stats;
    SolveResult res = branch_and_bound_solve(inst, false, opts);
    CHECK(res.value == 2);
    CHECK(stats.nodes == 1);
}

TEST_CASE("uncoverable voter pins the optimum at zero") {
    Instance inst = make({{"p1", 2}, {"p2", 9}}, 5, {{"p1"}, {"p2"}});
    SolveResult res = branch_and_bound_solve(inst);
    CHECK(res.value == 0);
    CHECK(res.zero_optimum);
}

TEST_CASE("node cap raises a resource error") {
    std::mt19937_64 rng(7777);
    Instance inst = random_instance(rng);
    BnbOptions opts;
    opts.node_cap = 1;
    // a cap of one node only survives if the root is integral
    try {
        SolveResult res = branch_and_bound_solve(inst, false, opts);
        CHECK(res.value == brute_force_solve(inst).value);
    } catch (const ResourceLimitError&) {
        // expected on any instance that needs branching
    }
}

TEST_CASE("explored nodes carry sound bounds") {
    std::mt19937_64 rng(515);
    RandomParams params;
    params.max_projects = 9;
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = random_instance(rng, params);
        std::vector<BnbNode> trace;
        BnbOptions opts;
        opts.trace = &trace;
        SolveResult res = branch_and_bound_solve(inst, false, opts);
        CHECK(!trace.empty());
        for (const BnbNode& node : trace) {
            // best integral completion under the node's fixings
            const std::size_t m = inst.num_projects();
            std::uint64_t in_mask = 0, out_mask = 0;
            for (ProjectIndex p : node.fixed_in) in_mask |= 1ull << p;
            for (ProjectIndex p : node.fixed_out) out_mask |= 1ull << p;
            Cost best = -1;
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m);
                 ++mask) {
                if ((mask & in_mask) != in_mask || (mask & out_mask)) continue;
                Cost cost = 0;
                for (std::size_t p = 0; p < m; ++p)
                    if (mask >> p & 1)
                        cost += inst.cost(static_cast<ProjectIndex>(p));
                if (cost > inst.budget()) continue;
                Cost worst = -1;
                for (std::size_t i = 0; i < inst.num_voters(); ++i) {
                    Cost covered = 0;
                    for (ProjectIndex p : inst.votes()[i])
                        if (mask >> p & 1) covered += inst.cost(p);
                    if (worst < 0 || covered < worst) worst = covered;
                }
                best = std::max(best, worst);
            }
            if (best >= 0) CHECK(node.lp_bound >= make_bigrat(best));
        }
        CHECK(res.value == brute_force_solve(inst).value);
    }
}

TEST_CASE("oracle equivalence across all three solvers") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 300; ++trial) {
        Instance inst = random_instance(rng);
        Cost expect = brute_force_solve(inst).value;
        CHECK(dp_solve(inst).value == expect);
        CHECK(branch_and_bound_solve(inst).value == expect);
    }
}

TEST_CASE("full families agree between brute force and branch and bound") {
    std::mt19937_64 rng(271828);
    RandomParams params;
    params.max_projects = 10;
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = random_instance(rng, params);
        SolveResult a = brute_force_solve(inst, true);
        SolveResult b = branch_and_bound_solve(inst, true);
        CHECK(a.value == b.value);
        CHECK(a.zero_optimum == b.zero_optimum);
        if (a.zero_optimum) {
            CHECK(*a.winners == *b.winners);
            continue;
        }
        REQUIRE(a.all_optimal.has_value());
        REQUIRE(b.all_optimal.has_value());
        REQUIRE(a.all_optimal->size() == b.all_optimal->size());
        for (std::size_t k = 0; k < a.all_optimal->size(); ++k)
            CHECK((*a.all_optimal)[k].selected ==
                  (*b.all_optimal)[k].selected);
        CHECK(*a.winners == *b.winners);
        CHECK(a.witness.selected == b.witness.selected);
    }
}

TEST_CASE("winners helper matches both solver paths") {
    std::mt19937_64 rng(99);
    RandomParams params;
    params.max_projects = 9;
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst = random_instance(rng, params);
        std::vector<ProjectIndex> wb = winners(inst, SolverKind::Brute);
        std::vector<ProjectIndex> wn =
            winners(inst, SolverKind::BranchAndBound);
        CHECK(wb == wn);
    }
    CHECK(id_set(two_counties(),
                 winners(two_counties(), SolverKind::BranchAndBound)) ==
          std::vector<std::string>{"X2", "X3", "Y3"});
}

TEST_CASE("scaling commutes with solving") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        Instance base = scale_down(random_instance(rng)).instance;
        const Cost factors[] = {2, 5, 10};
        Cost g = factors[trial % 3];
        std::vector<std::pair<std::string, Cost>> projects;
        for (ProjectIndex p = 0; p < base.num_projects(); ++p)
            projects.emplace_back(base.id(p), base.cost(p) * g);
        std::vector<std::vector<std::string>> votes;
        for (const auto& vote : base.votes()) {
            std::vector<std::string> ids;
            for (ProjectIndex p : vote) ids.push_back(base.id(p));
            votes.push_back(std::move(ids));
        }
        Instance scaled_up = make(projects, base.budget() * g, votes);

        ScaledInstance back = scale_down(scaled_up);
        CHECK(back.factor == g);
        CHECK(back.instance == base);
        CHECK(branch_and_bound_solve(scaled_up).value ==
              g * branch_and_bound_solve(base).value);
    }
}

TEST_CASE("scaled instances keep their optimal families") {
    Instance big = make({{"p1", 100}, {"p2", 300}, {"p3", 300}}, 600,
                        {{"p1", "p2"}, {"p1", "p3"}});
    SolveResult bres = brute_force_solve(big, true);
    ScaledInstance scaled = scale_down(big);
    SolveResult sres = brute_force_solve(scaled.instance, true);
    CHECK(bres.value == scaled.factor * sres.value);
    REQUIRE(bres.all_optimal.has_value());
    REQUIRE(sres.all_optimal.has_value());
    REQUIRE(bres.all_optimal->size() == sres.all_optimal->size());
    for (std::size_t k = 0; k < bres.all_optimal->size(); ++k)
        CHECK((*bres.all_optimal)[k].selected ==
              (*sres.all_optimal)[k].selected);
}

TEST_CASE("utilitarian foil maximizes the popular bloc") {
    SolveResult res = utilitarian_solve(two_counties(), true);
    CHECK(res.value == 1000); // 5 voters * 200 approved spend
    CHECK(id_family(two_counties(), res) ==
          std::vector<std::vector<std::string>>{{"X2", "X3"}});
    CHECK(id_set(two_counties(), *res.winners) ==
          std::vector<std::string>{"X2", "X3"});

    // {p1,p2,p3} is over budget; p1 counts twice but only carries weight 2,
    // so the pair of expensive projects wins on total utility
    SolveResult nv = utilitarian_solve(narrow_top(), true);
    CHECK(nv.value == 6);
    CHECK(id_family(narrow_top(), nv) ==
          std::vector<std::vector<std::string>>{{"p2", "p3"}});
}

TEST_SUITE_END();
