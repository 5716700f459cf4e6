#include "maxminpb/approx.hpp"

#include "maxminpb/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace maxminpb {

OrderedRelaxResult ordered_relax(const Instance& inst, PivotRule rule) {
    OrderedRelaxResult res;
    res.lp = lp_solve(inst, rule);

    // weight = c(p)*x*_p, sorted descending; ties cheaper-first then by id
    std::vector<BigRat> weight(inst.num_projects());
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        weight[p] = BigRat(static_cast<long long>(inst.cost(p))) *
                    res.lp.selection[p];
    std::vector<ProjectIndex> order(inst.num_projects());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](ProjectIndex a, ProjectIndex b) {
                         if (weight[a] != weight[b]) return weight[a] > weight[b];
                         if (inst.cost(a) != inst.cost(b))
                             return inst.cost(a) < inst.cost(b);
                         return inst.id(a) < inst.id(b);
                     });

    res.fill = ordered_fill(inst, order);
    res.value = maxmin_value(inst, res.fill.selected);
    return res;
}

AdditiveBoundCertificate additive_bound_certificate(const Instance& inst,
                                                    const Outcome& outcome,
                                                    Cost opt_value) {
    AdditiveBoundCertificate cert;
    cert.alg_value = maxmin_value(inst, outcome);
    cert.opt_value = opt_value;
    if (opt_value < cert.alg_value)
        throw std::invalid_argument(
            "opt_value " + std::to_string(opt_value) +
            " is below the outcome's own maxmin value " +
            std::to_string(cert.alg_value));

    // worst-off voter: first index attaining the minimum utility
    Cost worst = -1;
    for (std::size_t i = 0; i < inst.num_voters(); ++i) {
        Cost u = utility(inst, i, outcome);
        if (worst < 0 || u < worst) {
            worst = u;
            cert.worst_voter = i;
        }
    }

    const auto& vote = inst.votes()[cert.worst_voter];
    std::size_t approved_missing = 0; // |A_j \ S|
    for (ProjectIndex p : vote)
        if (!outcome.contains(p)) ++approved_missing;
    std::size_t selected_foreign = outcome.selected.size(); // |S \ A_j|
    for (ProjectIndex p : vote)
        if (outcome.contains(p)) --selected_foreign;

    if (selected_foreign == 0) {
        cert.ratio_undefined = true;
        cert.holds = true; // the bound degenerates; nothing to check
        return cert;
    }
    cert.ratio = BigRat(static_cast<long long>(approved_missing),
                        static_cast<long long>(selected_foreign));
    cert.bound_rhs =
        BigRat(static_cast<long long>(opt_value)) -
        *cert.ratio *
            BigRat(static_cast<long long>(inst.budget() - opt_value));
    cert.holds = BigRat(static_cast<long long>(cert.alg_value)) >= *cert.bound_rhs;
    return cert;
}

DisutilityBoundReport disutility_bound_check(const Instance& inst,
                                             PivotRule rule) {
    DisutilityBoundReport rep;
    rep.applicable = hcbp_check(inst);
    rep.max_fill = fill_size_range(inst).max_fill;
    OrderedRelaxResult relax = ordered_relax(inst, rule);
    rep.selected = relax.fill.selected;
    rep.alg_disutility = minimax_disutility_value(inst, relax.fill.selected);
    SolveResult exact = brute_force_solve(inst);
    rep.opt_disutility = inst.budget() - exact.value;
    if (rep.max_fill == 0) return rep; // nothing affordable; bound undefined
    // (2 - 1/h)*opt compared exactly
    rep.bound = (BigRat(2) - BigRat(1, static_cast<long long>(rep.max_fill))) *
                BigRat(static_cast<long long>(rep.opt_disutility));
    rep.holds =
        BigRat(static_cast<long long>(rep.alg_disutility)) <= *rep.bound;
    return rep;
}

} // namespace maxminpb
