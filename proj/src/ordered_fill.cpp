#include "maxminpb/ordered_fill.hpp"

#include <algorithm>
#include <numeric>

namespace maxminpb {

OrderedFillResult ordered_fill(const Instance& inst,
                               const std::vector<ProjectIndex>& order) {
    if (order.size() != inst.num_projects())
        throw std::invalid_argument("order must cover every project exactly once");
    std::vector<bool> seen(inst.num_projects(), false);
    for (ProjectIndex p : order) {
        if (p >= inst.num_projects() || seen[p])
            throw std::invalid_argument("order is not a permutation of the projects");
        seen[p] = true;
    }

    OrderedFillResult res;
    res.order_used = order;
    std::vector<ProjectIndex> picked;
    Cost spent = 0;
    for (ProjectIndex p : order) {
        if (spent + inst.cost(p) > inst.budget()) {
            res.stop_project = p;
            break; // permanent stop, later projects are never considered
        }
        picked.push_back(p);
        spent += inst.cost(p);
    }
    res.selected = Outcome::of(inst, std::move(picked));
    return res;
}

namespace {

std::vector<ProjectIndex> cost_order(const Instance& inst, bool ascending) {
    std::vector<ProjectIndex> order(inst.num_projects());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](ProjectIndex a, ProjectIndex b) {
                         if (inst.cost(a) != inst.cost(b))
                             return ascending ? inst.cost(a) < inst.cost(b)
                                              : inst.cost(a) > inst.cost(b);
                         return inst.id(a) < inst.id(b); // cost ties by id
                     });
    return order;
}

} // namespace

std::vector<ProjectIndex> order_by_cost_descending(const Instance& inst) {
    return cost_order(inst, false);
}

std::vector<ProjectIndex> order_by_cost_ascending(const Instance& inst) {
    return cost_order(inst, true);
}

FillSizeRange fill_size_range(const Instance& inst) {
    FillSizeRange r;
    r.min_fill =
        ordered_fill(inst, order_by_cost_descending(inst)).selected.selected.size();
    r.max_fill =
        ordered_fill(inst, order_by_cost_ascending(inst)).selected.selected.size();
    return r;
}

std::size_t max_vote_size(const Instance& inst) {
    std::size_t h = 0;
    for (const auto& v : inst.votes()) h = std::max(h, v.size());
    return h;
}

bool hcbp_check(const Instance& inst) {
    return fill_size_range(inst).min_fill > max_vote_size(inst);
}

} // namespace maxminpb
