#include "maxminpb/lp.hpp"

#include <algorithm>

namespace maxminpb {

namespace {

// Builds the relaxed maxmin program over the free projects only.
// Variable layout: column 0 is q, then one column per free project in
// canonical order. Rows: one per distinct vote, then the budget, then one
// upper-bound row per free project. All right-hand sides are non-negative,
// which is what keeps the all-slack start feasible.
template <class Num>
SimplexProblem<Num> build_problem(const Instance& inst,
                                  const DistinctProfile& prof,
                                  const std::vector<char>& in_mask,
                                  const std::vector<char>& out_mask,
                                  const std::vector<ProjectIndex>& free_projects,
                                  Cost fixed_cost) {
    const std::size_t m = free_projects.size();
    std::vector<int> col_of(inst.num_projects(), -1);
    for (std::size_t j = 0; j < m; ++j) col_of[free_projects[j]] = (int)j + 1;

    SimplexProblem<Num> prob;
    prob.num_vars = 1 + m;
    prob.objective.assign(prob.num_vars, Num(0));
    prob.objective[0] = Num(1); // maximize q

    for (const auto& vote : prof.votes) {
        std::vector<Num> row(prob.num_vars, Num(0));
        row[0] = Num(1);
        Cost base = 0;
        for (ProjectIndex p : vote) {
            if (in_mask[p]) base += inst.cost(p);
            else if (!out_mask[p]) row[col_of[p]] = Num(-(std::int64_t)inst.cost(p));
        }
        prob.rows.push_back(std::move(row));
        prob.rhs.push_back(Num((std::int64_t)base));
    }
    {
        std::vector<Num> row(prob.num_vars, Num(0));
        for (std::size_t j = 0; j < m; ++j)
            row[j + 1] = Num((std::int64_t)inst.cost(free_projects[j]));
        prob.rows.push_back(std::move(row));
        prob.rhs.push_back(Num((std::int64_t)(inst.budget() - fixed_cost)));
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Num> row(prob.num_vars, Num(0));
        row[j + 1] = Num(1);
        prob.rows.push_back(std::move(row));
        prob.rhs.push_back(Num(1));
    }
    return prob;
}

template <class Num>
LpSolution solve_with(const Instance& inst, const DistinctProfile& prof,
                      const std::vector<char>& in_mask,
                      const std::vector<char>& out_mask,
                      const std::vector<ProjectIndex>& free_projects,
                      Cost fixed_cost, PivotRule rule) {
    auto prob = build_problem<Num>(inst, prof, in_mask, out_mask,
                                   free_projects, fixed_cost);
    auto res = simplex_maximize(prob, rule);

    LpSolution sol;
    sol.objective = to_bigrat(res.objective_value);
    sol.basis = std::move(res.basis);
    sol.pivots = res.pivots;
    sol.selection.assign(inst.num_projects(), BigRat(0));
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        if (in_mask[p]) sol.selection[p] = BigRat(1);
    for (std::size_t j = 0; j < free_projects.size(); ++j)
        sol.selection[free_projects[j]] = to_bigrat(res.solution[j + 1]);
    return sol;
}

LpSolution solve_impl(const Instance& inst, const DistinctProfile& prof,
                      const std::vector<ProjectIndex>& fixed_in,
                      const std::vector<ProjectIndex>& fixed_out,
                      PivotRule rule) {
    std::vector<char> in_mask(inst.num_projects(), 0);
    std::vector<char> out_mask(inst.num_projects(), 0);
    Cost fixed_cost = 0;
    for (ProjectIndex p : fixed_in) {
        if (p >= inst.num_projects())
            throw std::out_of_range("fixed_in references an unknown project");
        if (!in_mask[p]) { in_mask[p] = 1; fixed_cost += inst.cost(p); }
    }
    for (ProjectIndex p : fixed_out) {
        if (p >= inst.num_projects())
            throw std::out_of_range("fixed_out references an unknown project");
        if (in_mask[p])
            throw InfeasibleError("project '" + inst.id(p) +
                                  "' is fixed both in and out");
        out_mask[p] = 1;
    }
    if (fixed_cost > inst.budget())
        throw InfeasibleError("fixed-in projects already cost " +
                              std::to_string(fixed_cost) + " > budget " +
                              std::to_string(inst.budget()));

    std::vector<ProjectIndex> free_projects;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        if (!in_mask[p] && !out_mask[p]) free_projects.push_back(p);

    try {
        return solve_with<Rat64>(inst, prof, in_mask, out_mask, free_projects,
                                 fixed_cost, rule);
    } catch (const RatOverflow&) {
        LpSolution sol = solve_with<BigRat>(inst, prof, in_mask, out_mask,
                                            free_projects, fixed_cost, rule);
        sol.used_bigint_fallback = true;
        return sol;
    }
}

} // namespace

LpSolution lp_solve(const Instance& inst, PivotRule rule) {
    return solve_impl(inst, distinct_profile(inst), {}, {}, rule);
}

LpSolution lp_solve_fixed(const Instance& inst,
                          const std::vector<ProjectIndex>& fixed_in,
                          const std::vector<ProjectIndex>& fixed_out,
                          PivotRule rule) {
    return solve_impl(inst, distinct_profile(inst), fixed_in, fixed_out, rule);
}

LpSolution lp_solve_fixed(const Instance& inst, const DistinctProfile& prof,
                          const std::vector<ProjectIndex>& fixed_in,
                          const std::vector<ProjectIndex>& fixed_out,
                          PivotRule rule) {
    return solve_impl(inst, prof, fixed_in, fixed_out, rule);
}

bool LpSolution::verify(const Instance& inst) const {
    if (selection.size() != inst.num_projects()) return false;
    BigRat spend(0);
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p) {
        if (selection[p] < 0 || selection[p] > 1) return false;
        spend += BigRat(static_cast<long long>(inst.cost(p))) * selection[p];
    }
    if (spend > BigRat(static_cast<long long>(inst.budget()))) return false;
    for (const auto& vote : inst.votes()) {
        BigRat u(0);
        for (ProjectIndex p : vote)
            u += BigRat(static_cast<long long>(inst.cost(p))) * selection[p];
        if (objective > u) return false;
    }
    return objective >= 0;
}

MinimaxLpSolution lp_solve_minimax(const Instance& inst, PivotRule rule) {
    // With every x feasible, each voter's relaxed utility is at most the
    // total spend and hence at most b, so the disutility program has the
    // same optimal x as the maxmin program with objective b - q*.
    LpSolution base = lp_solve(inst, rule);
    MinimaxLpSolution sol;
    sol.objective = BigRat(static_cast<long long>(inst.budget())) - base.objective;
    sol.selection = std::move(base.selection);
    return sol;
}

} // namespace maxminpb
