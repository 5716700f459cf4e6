#include "doctest.h"

#include "maxminpb/lp.hpp"
#include "maxminpb/solvers.hpp"
#include "support.hpp"

#include <random>

using namespace maxminpb;
using namespace testsupport;

TEST_SUITE_BEGIN("lp");

TEST_CASE("relaxation of the unanimous-cheap-project instance") {
    Instance inst = narrow_top();
    LpSolution lp = lp_solve(inst);
    CHECK(lp.objective == make_bigrat(7, 2));
    CHECK(lp.selection[0] == make_bigrat(1));
    CHECK(lp.selection[1] == make_bigrat(5, 6));
    CHECK(lp.selection[2] == make_bigrat(5, 6));
    CHECK(lp.verify(inst));
    CHECK(!lp.used_bigint_fallback);
}

TEST_CASE("single voter approving everything") {
    // budget binds
    Instance tight = make({{"p1", 4}, {"p2", 5}}, 6, {{"p1", "p2"}});
    CHECK(lp_solve(tight).objective == make_bigrat(6));
    // box constraints bind
    Instance slack = make({{"p1", 4}, {"p2", 5}}, 20, {{"p1", "p2"}});
    CHECK(lp_solve(slack).objective == make_bigrat(9));
}

TEST_CASE("fixings pin variables and shift the optimum") {
    Instance inst = narrow_top();
    LpSolution pinned = lp_solve_fixed(inst, {0}, {});
    CHECK(pinned.objective == make_bigrat(7, 2)); // x_p1 = 1 already optimal
    CHECK(pinned.selection[0] == make_bigrat(1));
    CHECK(pinned.verify(inst));

    LpSolution excluded = lp_solve_fixed(inst, {}, {0});
    CHECK(excluded.objective == make_bigrat(3));
    CHECK(excluded.selection[0] == make_bigrat(0));
    CHECK(excluded.verify(inst));
}

TEST_CASE("inconsistent fixings are rejected") {
    Instance inst = narrow_top();
    CHECK_THROWS_AS(lp_solve_fixed(inst, {0}, {0}), InfeasibleError);
    Instance small = make({{"p1", 3}, {"p2", 3}}, 5, {{"p1", "p2"}});
    CHECK_THROWS_AS(lp_solve_fixed(small, {0, 1}, {}), InfeasibleError);
}

TEST_CASE("empty fixings reduce to the plain solve") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = random_instance(rng);
        LpSolution a = lp_solve(inst);
        LpSolution b = lp_solve_fixed(inst, {}, {});
        CHECK(a.objective == b.objective);
        CHECK(a.selection == b.selection);
        // the profile-reusing overload matches too
        DistinctProfile prof = distinct_profile(inst);
        LpSolution c = lp_solve_fixed(inst, prof, {}, {});
        CHECK(c.objective == a.objective);
        CHECK(c.selection == a.selection);
    }
}

TEST_CASE("solutions verify exactly and dominate every integral optimum") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst = random_instance(rng);
        LpSolution lp = lp_solve(inst);
        CHECK(lp.verify(inst));
        for (ProjectIndex p = 0; p < inst.num_projects(); ++p) {
            CHECK(lp.selection[p] >= make_bigrat(0));
            CHECK(lp.selection[p] <= make_bigrat(1));
        }
        SolveResult exact = brute_force_solve(inst);
        CHECK(lp.objective >= make_bigrat(exact.value));
    }
}

TEST_CASE("fixed variables keep their pinned values in the solution") {
    std::mt19937_64 rng(9090);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = random_instance(rng);
        ProjectIndex a = rng() % inst.num_projects();
        ProjectIndex b = rng() % inst.num_projects();
        if (a == b) continue;
        if (inst.cost(a) > inst.budget()) continue;
        LpSolution lp = lp_solve_fixed(inst, {a}, {b});
        CHECK(lp.selection[a] == make_bigrat(1));
        CHECK(lp.selection[b] == make_bigrat(0));
        CHECK(lp.verify(inst));
    }
}

TEST_CASE("mirrored objective shares the selection") {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = random_instance(rng);
        LpSolution direct = lp_solve(inst);
        MinimaxLpSolution mirrored = lp_solve_minimax(inst);
        CHECK(mirrored.objective ==
              make_bigrat(inst.budget()) - direct.objective);
        CHECK(mirrored.selection == direct.selection);
    }
}

TEST_SUITE_END();
