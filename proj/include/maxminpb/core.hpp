#ifndef MAXMINPB_CORE_HPP
#define MAXMINPB_CORE_HPP

#include "maxminpb/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace maxminpb {

using Cost = std::int64_t;
using ProjectIndex = std::uint32_t;

struct Project {
    std::string id;
    Cost cost = 0;
};

// Approval-vote budgeting instance. Projects keep their input order; that
// order is the canonical project ordering used by every deterministic
// tie-break in the library. Votes are stored as sorted lists of project
// indices into projects().
class Instance {
public:
    // Validates and canonicalizes. Throws ValidationError on: empty project
    // or voter list, non-positive cost or budget, duplicate project id,
    // empty id, unknown project id in a vote, duplicate project in a vote.
    // Empty votes are legal but reported through warnings().
    static Instance create(std::vector<Project> projects, Cost budget,
                           const std::vector<std::vector<std::string>>& votes);

    // Same, but votes arrive as project indices (already canonical).
    static Instance from_indices(std::vector<Project> projects, Cost budget,
                                 std::vector<std::vector<ProjectIndex>> votes);

    const std::vector<Project>& projects() const { return projects_; }
    Cost budget() const { return budget_; }
    const std::vector<std::vector<ProjectIndex>>& votes() const { return votes_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    std::size_t num_projects() const { return projects_.size(); }
    std::size_t num_voters() const { return votes_.size(); }
    Cost cost(ProjectIndex p) const { return projects_[p].cost; }
    const std::string& id(ProjectIndex p) const { return projects_[p].id; }

    // Index lookup by id; throws std::out_of_range for unknown ids.
    ProjectIndex index_of(const std::string& id) const;
    bool has_project(const std::string& id) const {
        return index_.find(id) != index_.end();
    }

    Cost total_cost() const;

    bool operator==(const Instance& o) const {
        if (budget_ != o.budget_ || votes_ != o.votes_) return false;
        if (projects_.size() != o.projects_.size()) return false;
        for (std::size_t i = 0; i < projects_.size(); ++i)
            if (projects_[i].id != o.projects_[i].id ||
                projects_[i].cost != o.projects_[i].cost)
                return false;
        return true;
    }

private:
    std::vector<Project> projects_;
    Cost budget_ = 0;
    std::vector<std::vector<ProjectIndex>> votes_;
    std::vector<std::string> warnings_;
    std::unordered_map<std::string, ProjectIndex> index_;

    void build_index();
};

// A feasible selection of projects. Construction checks the budget, so an
// Outcome in hand is always feasible for the instance it was built from.
struct Outcome {
    std::vector<ProjectIndex> selected; // sorted ascending
    Cost total_cost = 0;

    static Outcome of(const Instance& inst, std::vector<ProjectIndex> selected);
    static Outcome of_ids(const Instance& inst,
                          const std::vector<std::string>& ids);
    static Outcome empty() { return Outcome{}; }

    bool contains(ProjectIndex p) const;
    std::vector<std::string> ids(const Instance& inst) const;
    bool operator==(const Outcome& o) const { return selected == o.selected; }
};

// Ascending-sequence comparison; the library's "lexicographically smallest
// set" tie-break. The empty set precedes everything.
bool set_lex_less(const std::vector<ProjectIndex>& a,
                  const std::vector<ProjectIndex>& b);

// Voters collapsed to distinct approval sets with multiplicities, in order
// of first appearance. Solvers iterate these instead of raw voters.
struct DistinctProfile {
    std::vector<std::vector<ProjectIndex>> votes; // distinct, first-seen order
    std::vector<std::uint32_t> multiplicity;      // parallel; sums to n
    std::vector<std::uint32_t> voter_class;       // original voter -> class

    std::size_t size() const { return votes.size(); }
};

DistinctProfile distinct_profile(const Instance& inst);

// approved spend c(S intersect A_i) for original voter voter_index;
// throws std::out_of_range.
Cost utility(const Instance& inst, std::size_t voter_index, const Outcome& out);

// min over voters of utility(); the quantity the rule maximizes.
Cost maxmin_value(const Instance& inst, const Outcome& out);

// max over voters of b - utility(); the mirrored objective.
Cost minimax_disutility_value(const Instance& inst, const Outcome& out);

// Instance with all costs and the budget divided by their common gcd.
// Optimal sets are preserved; objective values scale by factor.
struct ScaledInstance {
    Instance instance;
    Cost factor = 1; // gcd of all costs and the budget
};

ScaledInstance scale_down(const Instance& inst);

// max cost divided by the gcd above: how coarse the instance really is
// after normalization. Drives the DP state-space size.
Cost scalable_limit(const Instance& inst);

// Solver output. `witness` is one optimal set; brute force and
// branch-and-bound return the lexicographically smallest optimal set, the
// DP returns a deterministic optimal set (see solvers.hpp).
//
// When the optimum is 0 every feasible set is optimal: zero_optimum is set,
// witness is the empty set, all_optimal is not materialized, and winners
// uses the closed form {p : c(p) <= b}.
struct SolveResult {
    Cost value = 0;
    Outcome witness;
    std::optional<std::vector<Outcome>> all_optimal; // lex-sorted when present
    bool all_optimal_truncated = false;
    std::optional<std::vector<ProjectIndex>> winners; // sorted ascending
    bool zero_optimum = false;
};

} // namespace maxminpb

#endif
