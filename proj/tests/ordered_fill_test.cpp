#include "doctest.h"

#include "maxminpb/ordered_fill.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace maxminpb;
using namespace testsupport;

TEST_SUITE_BEGIN("ordered_fill");

TEST_CASE("fill stops permanently at the first project that does not fit") {
    Instance inst = order_gap(); // costs {2,3,2}, b=4
    OrderedFillResult res = ordered_fill(inst, {0, 1, 2});
    CHECK(res.selected.selected == std::vector<ProjectIndex>{0});
    REQUIRE(res.stop_project.has_value());
    CHECK(*res.stop_project == 1);
    // p3 would still fit (2+2=4) but the walk already stopped
    CHECK(res.selected.total_cost == 2);
}

TEST_CASE("fill degenerate budgets") {
    Instance roomy = make({{"p1", 1}, {"p2", 2}}, 10, {{"p1"}});
    OrderedFillResult all = ordered_fill(roomy, {1, 0});
    CHECK(all.selected.selected.size() == 2);
    CHECK(!all.stop_project.has_value());

    Instance tight = make({{"p1", 5}, {"p2", 7}}, 3, {{"p1"}});
    OrderedFillResult none = ordered_fill(tight, {0, 1});
    CHECK(none.selected.selected.empty());
    CHECK(*none.stop_project == 0);
}

TEST_CASE("fill rejects non-permutations") {
    Instance inst = order_gap();
    CHECK_THROWS_AS(ordered_fill(inst, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ordered_fill(inst, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ordered_fill(inst, {0, 1, 9}), std::invalid_argument);
}

TEST_CASE("selection is a prefix of the order") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = random_instance(rng);
        std::vector<ProjectIndex> order(inst.num_projects());
        std::iota(order.begin(), order.end(), 0u);
        std::shuffle(order.begin(), order.end(), rng);
        OrderedFillResult res = ordered_fill(inst, order);

        std::size_t len = res.selected.selected.size();
        std::vector<ProjectIndex> prefix(order.begin(), order.begin() + len);
        std::sort(prefix.begin(), prefix.end());
        CHECK(prefix == res.selected.selected);
        if (res.stop_project) CHECK(*res.stop_project == order[len]);
        CHECK(res.selected.total_cost <= inst.budget());
    }
}

TEST_CASE("fill size range on the three-project example") {
    Instance inst = order_gap();
    FillSizeRange range = fill_size_range(inst);
    CHECK(range.min_fill == 1);
    CHECK(range.max_fill == 2);

    // every one of the six orders lands inside [1, 2]
    std::vector<ProjectIndex> order{0, 1, 2};
    std::sort(order.begin(), order.end());
    do {
        std::size_t picked = ordered_fill(inst, order).selected.selected.size();
        CHECK(picked >= range.min_fill);
        CHECK(picked <= range.max_fill);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("fill size range degenerate cases") {
    // unit costs: every order selects exactly b projects
    Instance unit = make({{"p1", 1}, {"p2", 1}, {"p3", 1}, {"p4", 1}}, 3,
                         {{"p1"}});
    CHECK(fill_size_range(unit).min_fill == 3);
    CHECK(fill_size_range(unit).max_fill == 3);

    Instance roomy = make({{"p1", 2}, {"p2", 5}}, 10, {{"p1"}});
    CHECK(fill_size_range(roomy).min_fill == 2);
    CHECK(fill_size_range(roomy).max_fill == 2);
}

TEST_CASE("cost orders break ties by project id") {
    Instance inst = make({{"z", 2}, {"a", 2}, {"m", 5}}, 9, {{"a"}});
    // descending: m first, then the two cost-2 projects in id order
    std::vector<ProjectIndex> desc = order_by_cost_descending(inst);
    CHECK(inst.id(desc[0]) == "m");
    CHECK(inst.id(desc[1]) == "a");
    CHECK(inst.id(desc[2]) == "z");
    std::vector<ProjectIndex> asc = order_by_cost_ascending(inst);
    CHECK(inst.id(asc[0]) == "a");
    CHECK(inst.id(asc[1]) == "z");
    CHECK(inst.id(asc[2]) == "m");
}

TEST_CASE("descending and ascending fills bound every other order") {
    std::mt19937_64 rng(977);
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst = random_instance(rng);
        FillSizeRange range = fill_size_range(inst);
        CHECK(range.min_fill <= range.max_fill);
        for (int k = 0; k < 10; ++k) {
            std::vector<ProjectIndex> order(inst.num_projects());
            std::iota(order.begin(), order.end(), 0u);
            std::shuffle(order.begin(), order.end(), rng);
            std::size_t picked =
                ordered_fill(inst, order).selected.selected.size();
            CHECK(range.min_fill <= picked);
            CHECK(picked <= range.max_fill);
        }
    }
}

TEST_CASE("max vote size and the high-cardinality property") {
    CHECK(max_vote_size(narrow_top()) == 2);
    CHECK(max_vote_size(order_gap()) == 1);

    // unit costs with b = m and small votes: every fill takes everything
    Instance unit = make({{"p1", 1}, {"p2", 1}, {"p3", 1}}, 3,
                         {{"p1"}, {"p2"}});
    CHECK(hcbp_check(unit));

    // one voter approving all projects can never be beaten by the fill size
    Instance wide = make({{"p1", 2}, {"p2", 2}, {"p3", 2}}, 4,
                         {{"p1", "p2", "p3"}});
    CHECK(!hcbp_check(wide));

    CHECK(!hcbp_check(order_gap())); // min fill 1, max vote 1
    CHECK(hcbp_check(hcbp_demo()));  // min fill 3, max vote 2
}

TEST_SUITE_END();
