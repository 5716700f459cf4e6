#ifndef MAXMINPB_AXIOMS_HPP
#define MAXMINPB_AXIOMS_HPP

#include "maxminpb/core.hpp"
#include "maxminpb/solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxminpb {

// The rules the axiom checkers can exercise. Both MPB realizations return
// the same family; the brute one is the default for audit-sized instances.
enum class Rule { MpbBrute, MpbBnb, Utilitarian };

// A rule's full output on one instance. For the utilitarian rule `value`
// is the total utility (multiplicities included), not a maxmin value.
// degenerate = the optimum is 0, so every feasible set is optimal and the
// family is not materialized; winners then use the closed form.
struct RuleOutput {
    Cost value = 0;
    std::vector<Outcome> optimal_sets;
    bool truncated = false;
    bool degenerate = false;
    std::vector<ProjectIndex> winners;
};

RuleOutput run_rule(const Instance& inst, Rule rule,
                    const BruteOptions& opts = {});

enum class Verdict { Holds, Violated, NotApplicable };

std::string verdict_name(Verdict v);

// Violations carry the transformed instance plus enough description to
// replay the check through the solver and reproduce the verdict.
struct AxiomWitness {
    std::string description;
    std::optional<Instance> transformed;
    std::vector<std::string> detail;
};

struct AxiomReport {
    std::string axiom;
    Verdict verdict = Verdict::NotApplicable;
    std::optional<AxiomWitness> witness;
    std::vector<std::string> notes;
};

//----------------------------------------------------------------------
// instance transformations (exposed for tests and witness replay)
//----------------------------------------------------------------------

// Replace p by fresh projects with the given positive costs summing to
// c(p); every vote approving p approves all parts instead.
Instance split_project(const Instance& inst, ProjectIndex p,
                       const std::vector<Cost>& parts);

// Replace the projects in merge_set by one project of their combined cost.
// Every vote must approve all of merge_set or none of it.
Instance merge_projects(const Instance& inst,
                        const std::vector<ProjectIndex>& merge_set);

Instance discount_project(const Instance& inst, ProjectIndex p); // cost - 1
Instance with_budget(const Instance& inst, Cost new_budget);
Instance dedup_votes(const Instance& inst); // one voter per distinct vote

//----------------------------------------------------------------------
// checkers
//----------------------------------------------------------------------

// Splitting a winner: some part must win in the split instance.
AxiomReport check_splitting_monotonicity(const Instance& inst, Rule rule,
                                         ProjectIndex p,
                                         const std::vector<Cost>& parts);

// Merging a uniformly-approved part of an optimal set: the merged project
// must win. S must be in the rule's optimal family.
AxiomReport check_merging_monotonicity(const Instance& inst, Rule rule,
                                       const Outcome& S,
                                       const std::vector<ProjectIndex>& merge_set);

// Cheapening a winner must keep it winning.
AxiomReport check_discount_monotonicity(const Instance& inst, Rule rule,
                                        ProjectIndex p);

// Raising the budget by one must keep every winner winning. Guarded: not
// applicable when some project costs exactly b+1 (it would newly enter).
AxiomReport check_limit_monotonicity(const Instance& inst, Rule rule);

// strong: no optimal set has an affordable extension.
// weak: every affordable extension of an optimal set is optimal too.
AxiomReport check_exhaustiveness(const Instance& inst, Rule rule, bool strong);

// Unanimously approved projects must all win.
AxiomReport check_narrow_top(const Instance& inst, Rule rule);

// Collapsing duplicate votes must not change the optimal family.
AxiomReport check_clone_independence(const Instance& inst, Rule rule);

// No optimal set may contain a redundant project whose removal would free
// enough budget for an approved project of an uncovered voter.
AxiomReport check_maximal_coverage(const Instance& inst, Rule rule);

//----------------------------------------------------------------------
// audit
//----------------------------------------------------------------------

struct AuditOptions {
    std::size_t max_projects = 20; // SizeError above (audit re-solves a lot)
    BruteOptions brute;
    std::size_t family_cap = 20;   // optimal sets examined per battery
    std::size_t merge_checks_cap = 50;
};

// Runs every checker in a fixed order, with automatic batteries for the
// parameterized axioms (binary splits of each winner, bloc pairs of each
// optimal set, each winner discounted). Returns one report per axiom.
std::vector<AxiomReport> audit(const Instance& inst, Rule rule,
                               const AuditOptions& opts = {});

} // namespace maxminpb

#endif
