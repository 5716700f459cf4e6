#ifndef MAXMINPB_APPROX_HPP
#define MAXMINPB_APPROX_HPP

#include "maxminpb/core.hpp"
#include "maxminpb/lp.hpp"
#include "maxminpb/ordered_fill.hpp"

#include <optional>

namespace maxminpb {

// LP-guided rounding: solve the relaxed maxmin program, order projects by
// descending c(p)*x*_p (ties: cheaper project first, then id), ordered-fill
// that order.
struct OrderedRelaxResult {
    OrderedFillResult fill;
    LpSolution lp;
    Cost value = 0; // maxmin value of fill.selected
};

OrderedRelaxResult ordered_relax(const Instance& inst,
                                 PivotRule rule = PivotRule::Bland);

// Additive guarantee for a rounded outcome against the exact optimum:
//   ALG >= OPT - ratio * (b - OPT),  ratio = |A_j \ S| / |S \ A_j|
// for j a worst-off voter under S. When S \ A_j is empty the ratio is
// undefined and the certificate holds trivially (flagged).
struct AdditiveBoundCertificate {
    Cost alg_value = 0;
    Cost opt_value = 0;
    std::size_t worst_voter = 0;        // original voter index, first minimum
    std::optional<BigRat> ratio;        // absent when undefined
    std::optional<BigRat> bound_rhs;    // opt - ratio*(b - opt)
    bool ratio_undefined = false;
    bool holds = false;
};

// opt_value must be the exact optimum (or any valid lower bound no smaller
// than the outcome's own value); std::invalid_argument otherwise.
AdditiveBoundCertificate additive_bound_certificate(const Instance& inst,
                                                    const Outcome& outcome,
                                                    Cost opt_value);

// Multiplicative guarantee for the mirrored objective on instances with
// the high-cardinality budget property: rounded disutility is at most
// (2 - 1/max_fill) * optimal disutility. Exact optimum comes from the
// brute-force solver.
struct DisutilityBoundReport {
    bool applicable = false;   // hcbp_check(inst)
    std::size_t max_fill = 0;
    Cost alg_disutility = 0;
    Cost opt_disutility = 0;
    std::optional<BigRat> bound; // (2 - 1/max_fill) * opt
    bool holds = false;
    Outcome selected;
};

DisutilityBoundReport disutility_bound_check(const Instance& inst,
                                             PivotRule rule = PivotRule::Bland);

} // namespace maxminpb

#endif
