#ifndef MAXMINPB_LP_HPP
#define MAXMINPB_LP_HPP

#include "maxminpb/core.hpp"
#include "maxminpb/rational.hpp"
#include "maxminpb/simplex.hpp"

#include <vector>

namespace maxminpb {

// Exact solution of the relaxed maxmin program
//   max q  s.t.  q <= sum_{p in A_i} c(p) x_p  for every voter,
//                sum c(p) x_p <= b,  0 <= x_p <= 1,  q >= 0.
// `selection` holds x* per project in canonical order; fixed projects keep
// their fixed value. objective/selection are exact rationals, so feasibility
// can be re-verified by substitution (verify()).
struct LpSolution {
    BigRat objective;              // q*
    std::vector<BigRat> selection; // x*, one entry per project
    std::vector<int> basis;        // final simplex basis, determinism witness
    std::size_t pivots = 0;
    bool used_bigint_fallback = false; // int64 path overflowed and was retried

    bool verify(const Instance& inst) const;
};

LpSolution lp_solve(const Instance& inst,
                    PivotRule rule = PivotRule::Bland);

// Same LP with x_p pinned to 1 (fixed_in) or 0 (fixed_out); the
// branch-and-bound bound. Throws InfeasibleError when the fixings overlap
// or fixed_in alone overruns the budget.
LpSolution lp_solve_fixed(const Instance& inst,
                          const std::vector<ProjectIndex>& fixed_in,
                          const std::vector<ProjectIndex>& fixed_out,
                          PivotRule rule = PivotRule::Bland);

// Hot-path variant for callers that solve many fixings of one instance
// (branch and bound): reuses a precomputed distinct profile.
LpSolution lp_solve_fixed(const Instance& inst, const DistinctProfile& prof,
                          const std::vector<ProjectIndex>& fixed_in,
                          const std::vector<ProjectIndex>& fixed_out,
                          PivotRule rule = PivotRule::Bland);

// Relaxation of the mirrored objective (minimize the largest voter
// disutility b - sum_{p in A_i} c(p) x_p). Substituting w = b - q turns it
// into the maxmin LP above, so the fractional selection coincides and the
// optimal objective is b - q*; solved that way, exactly.
struct MinimaxLpSolution {
    BigRat objective;              // min over x of max_i (b - u_i), relaxed
    std::vector<BigRat> selection; // same x* as the maxmin LP
};

MinimaxLpSolution lp_solve_minimax(const Instance& inst,
                                   PivotRule rule = PivotRule::Bland);

} // namespace maxminpb

#endif
