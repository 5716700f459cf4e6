#ifndef MAXMINPB_SOLVERS_HPP
#define MAXMINPB_SOLVERS_HPP

#include "maxminpb/core.hpp"
#include "maxminpb/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace maxminpb {

//======================================================================
// brute force
//======================================================================

struct BruteOptions {
    std::size_t max_projects = 22;     // SizeError above this
    std::size_t all_optimal_cap = 10000;
};

// Enumerates every feasible set in lexicographic order (by sorted index
// sequence). Witness is therefore the lex-smallest optimal set, and
// all_optimal comes back lex-sorted. Winners are exact even when the
// stored all_optimal list is truncated at the cap.
SolveResult brute_force_solve(const Instance& inst, bool want_all = false,
                              const BruteOptions& opts = {});

//======================================================================
// distinct-vote dynamic program
//======================================================================

// One reachable state: the utility vector over distinct votes, and the
// cheapest cost that realizes it. States with the same utility vector and
// higher cost are dominated and dropped.
struct DpState {
    std::vector<Cost> utility_vector;
    Cost min_cost = 0;
};

struct DpOptions {
    // total states created across all layers; ResourceLimitError beyond
    std::size_t max_states = 4000000;
    // test hook: disable dominance pruning (keeps equal-vector duplicates)
    bool prune = true;
};

// Worst-case frontier size bound (min(2^m, prod of per-vote utility range)),
// saturated at max. Callers can consult this before running.
std::uint64_t dp_state_bound(const Instance& inst,
                             std::uint64_t saturate = UINT64_MAX);

// Sparse-frontier DP over projects in canonical order. Value is exact.
// The witness is a deterministic optimal set reconstructed from
// backpointers; unlike the other two solvers it is not guaranteed to be
// the lex-smallest optimal set (dominance pruning can discard that one).
// Does not materialize all_optimal or winners.
SolveResult dp_solve(const Instance& inst, const DpOptions& opts = {});

//======================================================================
// branch and bound
//======================================================================

// Explored node, reported through BnbOptions::trace: the fixings plus the
// LP bound that was computed there.
struct BnbNode {
    std::vector<ProjectIndex> fixed_in;
    std::vector<ProjectIndex> fixed_out;
    BigRat lp_bound;
};

struct BnbStats {
    std::size_t nodes = 0;     // LP evaluations during the value search
    std::size_t lp_fallbacks = 0;
};

struct BnbOptions {
    std::size_t node_cap = 10000000;   // ResourceLimitError beyond
    std::size_t all_optimal_cap = 10000;
    std::vector<BnbNode>* trace = nullptr; // value-search nodes, if wanted
    BnbStats* stats = nullptr;
};

// LP-bounded search: bound = relaxed maxmin under the node's fixings,
// branching on the most fractional x_p (ties by project id), include
// branch first, incumbent seeded from ordered_relax. Witness is the
// lex-smallest optimal set (extracted by a guided descent after the value
// search). want_all enumerates the full optimal family (cap + truncation
// flag); winners stay exact regardless of truncation.
SolveResult branch_and_bound_solve(const Instance& inst, bool want_all = false,
                                   const BnbOptions& opts = {});

//======================================================================
// winners + utilitarian foil
//======================================================================

enum class SolverKind { Brute, BranchAndBound };

// Union of all optimal sets, computed exactly. At zero optimum this is
// every affordable project, via the closed form (no enumeration).
std::vector<ProjectIndex> winners(const Instance& inst, SolverKind solver);

// Total-utility-maximizing rule (voter multiplicities count), used as the
// comparison rule in the axiom audit. Same enumeration machinery and the
// same degenerate-optimum policy as brute_force_solve; `value` is the
// total utility, not a maxmin value.
SolveResult utilitarian_solve(const Instance& inst, bool want_all = false,
                              const BruteOptions& opts = {});

} // namespace maxminpb

#endif
