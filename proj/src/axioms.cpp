#include "maxminpb/axioms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace maxminpb {

namespace {

std::string join_ids(const Instance& inst, const std::vector<ProjectIndex>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += inst.id(ps[i]);
    }
    return s.empty() ? std::string("(none)") : s;
}

bool vote_contains(const std::vector<ProjectIndex>& vote, ProjectIndex p) {
    return std::binary_search(vote.begin(), vote.end(), p);
}

bool is_winner(const RuleOutput& out, ProjectIndex p) {
    return std::binary_search(out.winners.begin(), out.winners.end(), p);
}

// Projects of `after` whose id does not occur in `before`: the ones a
// transformation introduced.
std::vector<ProjectIndex> fresh_projects(const Instance& before,
                                         const Instance& after) {
    std::vector<ProjectIndex> out;
    for (ProjectIndex p = 0; p < after.num_projects(); ++p)
        if (!before.has_project(after.id(p))) out.push_back(p);
    return out;
}

// Every vote must treat `group` as a bloc: approve all of it or none.
bool votes_all_or_nothing(const Instance& inst,
                          const std::vector<ProjectIndex>& group) {
    for (const auto& vote : inst.votes()) {
        std::size_t hit = 0;
        for (ProjectIndex p : group)
            if (vote_contains(vote, p)) ++hit;
        if (hit != 0 && hit != group.size()) return false;
    }
    return true;
}

AxiomReport make_na(std::string axiom, std::string note) {
    AxiomReport rep;
    rep.axiom = std::move(axiom);
    rep.verdict = Verdict::NotApplicable;
    rep.notes.push_back(std::move(note));
    return rep;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

RuleOutput run_rule(const Instance& inst, Rule rule, const BruteOptions& opts) {
    SolveResult res;
    switch (rule) {
    case Rule::MpbBrute:
        res = brute_force_solve(inst, true, opts);
        break;
    case Rule::Utilitarian:
        res = utilitarian_solve(inst, true, opts);
        break;
    case Rule::MpbBnb: {
        BnbOptions bo;
        bo.all_optimal_cap = opts.all_optimal_cap;
        res = branch_and_bound_solve(inst, true, bo);
        break;
    }
    }
    RuleOutput out;
    out.value = res.value;
    out.degenerate = res.zero_optimum;
    if (res.all_optimal) out.optimal_sets = std::move(*res.all_optimal);
    out.truncated = res.all_optimal_truncated;
    if (res.winners) out.winners = std::move(*res.winners);
    return out;
}

//----------------------------------------------------------------------
// transformations
//----------------------------------------------------------------------

Instance split_project(const Instance& inst, ProjectIndex p,
                       const std::vector<Cost>& parts) {
    if (p >= inst.num_projects())
        throw std::out_of_range("split: no such project");
    if (parts.empty())
        throw std::invalid_argument("split needs at least one part");
    Cost sum = 0;
    for (Cost c : parts) {
        if (c <= 0)
            throw std::invalid_argument("split parts must cost at least 1");
        sum += c;
    }
    if (sum != inst.cost(p))
        throw std::invalid_argument("split parts must sum to the project cost");

    // fresh ids derived from the original; lengthen the separator until
    // nothing collides with the surviving projects
    std::string sep = ".";
    std::vector<std::string> part_ids;
    for (;;) {
        part_ids.clear();
        bool clash = false;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            std::string cand = inst.id(p) + sep + std::to_string(k + 1);
            if (inst.has_project(cand) && inst.index_of(cand) != p) clash = true;
            part_ids.push_back(std::move(cand));
        }
        if (!clash) break;
        sep += ".";
    }

    std::vector<Project> projects;
    for (ProjectIndex q = 0; q < inst.num_projects(); ++q) {
        if (q == p) {
            for (std::size_t k = 0; k < parts.size(); ++k)
                projects.push_back(Project{part_ids[k], parts[k]});
        } else {
            projects.push_back(inst.projects()[q]);
        }
    }

    std::vector<std::vector<std::string>> votes;
    votes.reserve(inst.num_voters());
    for (const auto& vote : inst.votes()) {
        std::vector<std::string> ids;
        for (ProjectIndex q : vote) {
            if (q == p)
                ids.insert(ids.end(), part_ids.begin(), part_ids.end());
            else
                ids.push_back(inst.id(q));
        }
        votes.push_back(std::move(ids));
    }
    return Instance::create(std::move(projects), inst.budget(), votes);
}

Instance merge_projects(const Instance& inst,
                        const std::vector<ProjectIndex>& merge_set) {
    if (merge_set.size() < 2)
        throw std::invalid_argument("merge needs at least two projects");
    std::vector<ProjectIndex> group = merge_set;
    std::sort(group.begin(), group.end());
    if (std::adjacent_find(group.begin(), group.end()) != group.end())
        throw std::invalid_argument("merge set has a duplicate project");
    if (group.back() >= inst.num_projects())
        throw std::out_of_range("merge: no such project");
    if (!votes_all_or_nothing(inst, group))
        throw std::invalid_argument(
            "merge set is not approved as a bloc by every vote");

    Cost merged_cost = 0;
    std::string merged_id;
    for (std::size_t i = 0; i < group.size(); ++i) {
        merged_cost += inst.cost(group[i]);
        if (i) merged_id += "+";
        merged_id += inst.id(group[i]);
    }
    while (inst.has_project(merged_id)) merged_id += "+";

    // merged project takes the slot of the first member
    std::vector<Project> projects;
    for (ProjectIndex q = 0; q < inst.num_projects(); ++q) {
        if (q == group.front())
            projects.push_back(Project{merged_id, merged_cost});
        else if (!std::binary_search(group.begin(), group.end(), q))
            projects.push_back(inst.projects()[q]);
    }

    std::vector<std::vector<std::string>> votes;
    votes.reserve(inst.num_voters());
    for (const auto& vote : inst.votes()) {
        std::vector<std::string> ids;
        bool took_merged = false;
        for (ProjectIndex q : vote) {
            if (std::binary_search(group.begin(), group.end(), q)) {
                if (!took_merged) {
                    ids.push_back(merged_id);
                    took_merged = true;
                }
            } else {
                ids.push_back(inst.id(q));
            }
        }
        votes.push_back(std::move(ids));
    }
    return Instance::create(std::move(projects), inst.budget(), votes);
}

Instance discount_project(const Instance& inst, ProjectIndex p) {
    if (p >= inst.num_projects())
        throw std::out_of_range("discount: no such project");
    if (inst.cost(p) < 2)
        throw std::invalid_argument("discount would drop the cost below 1");
    std::vector<Project> projects = inst.projects();
    projects[p].cost -= 1;
    return Instance::from_indices(std::move(projects), inst.budget(),
                                  inst.votes());
}

Instance with_budget(const Instance& inst, Cost new_budget) {
    return Instance::from_indices(inst.projects(), new_budget, inst.votes());
}

Instance dedup_votes(const Instance& inst) {
    DistinctProfile prof = distinct_profile(inst);
    return Instance::from_indices(inst.projects(), inst.budget(),
                                  std::move(prof.votes));
}

//----------------------------------------------------------------------
// checkers
//----------------------------------------------------------------------

AxiomReport check_splitting_monotonicity(const Instance& inst, Rule rule,
                                         ProjectIndex p,
                                         const std::vector<Cost>& parts) {
    const char* name = "splitting-monotonicity";
    Instance split = split_project(inst, p, parts); // validates p and parts

    RuleOutput base = run_rule(inst, rule);
    AxiomReport rep;
    rep.axiom = name;
    if (!is_winner(base, p)) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes.push_back("project " + inst.id(p) + " is not a winner");
        return rep;
    }
    if (base.degenerate)
        rep.notes.push_back("optimum is 0 before the split");

    RuleOutput after = run_rule(split, rule);
    std::vector<ProjectIndex> part_idx = fresh_projects(inst, split);
    bool some_part_wins = false;
    for (ProjectIndex q : part_idx)
        if (is_winner(after, q)) some_part_wins = true;

    if (some_part_wins) {
        rep.verdict = Verdict::Holds;
        return rep;
    }
    rep.verdict = Verdict::Violated;
    AxiomWitness w;
    w.description = "winner " + inst.id(p) +
                    " was split into parts none of which wins";
    w.transformed = split;
    w.detail.push_back("parts: " + join_ids(split, part_idx));
    w.detail.push_back("winners before: " + join_ids(inst, base.winners));
    w.detail.push_back("winners after: " + join_ids(split, after.winners));
    rep.witness = std::move(w);
    return rep;
}

AxiomReport check_merging_monotonicity(const Instance& inst, Rule rule,
                                       const Outcome& S,
                                       const std::vector<ProjectIndex>& merge_set) {
    const char* name = "merging-monotonicity";
    std::vector<ProjectIndex> group = merge_set;
    std::sort(group.begin(), group.end());
    for (ProjectIndex q : group)
        if (!S.contains(q))
            return make_na(name, "merge set is not contained in the given set");
    if (!votes_all_or_nothing(inst, group))
        return make_na(name, "merge set is not approved as a bloc by every vote");

    RuleOutput base = run_rule(inst, rule);
    if (!base.degenerate) {
        if (base.truncated)
            return make_na(name, "optimal family truncated; cannot certify "
                                 "the given set is optimal");
        bool found = false;
        for (const auto& T : base.optimal_sets)
            if (T == S) found = true;
        if (!found)
            return make_na(name, "the given set is not optimal");
    }

    Instance merged = merge_projects(inst, group);
    RuleOutput after = run_rule(merged, rule);
    std::vector<ProjectIndex> fresh = fresh_projects(inst, merged);
    // merge introduces exactly one project
    ProjectIndex mp = fresh.front();

    AxiomReport rep;
    rep.axiom = name;
    if (base.degenerate)
        rep.notes.push_back("optimum is 0 before the merge; every feasible "
                            "set is optimal");
    if (is_winner(after, mp)) {
        rep.verdict = Verdict::Holds;
        return rep;
    }
    rep.verdict = Verdict::Violated;
    AxiomWitness w;
    w.description = "projects " + join_ids(inst, group) +
                    " from an optimal set merge into " + merged.id(mp) +
                    " which does not win";
    w.transformed = merged;
    w.detail.push_back("optimal set used: " + join_ids(inst, S.selected));
    w.detail.push_back("winners after: " + join_ids(merged, after.winners));
    rep.witness = std::move(w);
    return rep;
}

AxiomReport check_discount_monotonicity(const Instance& inst, Rule rule,
                                        ProjectIndex p) {
    const char* name = "discount-monotonicity";
    if (p >= inst.num_projects())
        throw std::out_of_range("discount: no such project");
    if (inst.cost(p) < 2)
        return make_na(name, "project " + inst.id(p) +
                                 " costs 1 and cannot be discounted");

    RuleOutput base = run_rule(inst, rule);
    if (!is_winner(base, p))
        return make_na(name, "project " + inst.id(p) + " is not a winner");

    Instance cheap = discount_project(inst, p);
    RuleOutput after = run_rule(cheap, rule);
    ProjectIndex pc = cheap.index_of(inst.id(p));

    AxiomReport rep;
    rep.axiom = name;
    if (base.degenerate)
        rep.notes.push_back("optimum is 0 before the discount");
    if (is_winner(after, pc)) {
        rep.verdict = Verdict::Holds;
        return rep;
    }
    rep.verdict = Verdict::Violated;
    AxiomWitness w;
    w.description = "winner " + inst.id(p) +
                    " stops winning when its cost drops by 1";
    w.transformed = cheap;
    w.detail.push_back("winners before: " + join_ids(inst, base.winners));
    w.detail.push_back("winners after: " + join_ids(cheap, after.winners));
    rep.witness = std::move(w);
    return rep;
}

AxiomReport check_limit_monotonicity(const Instance& inst, Rule rule) {
    const char* name = "limit-monotonicity";
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        if (inst.cost(p) == inst.budget() + 1)
            return make_na(name, "project " + inst.id(p) +
                                     " costs exactly budget+1 and would newly "
                                     "become affordable");

    RuleOutput base = run_rule(inst, rule);
    Instance raised = with_budget(inst, inst.budget() + 1);
    RuleOutput after = run_rule(raised, rule);

    AxiomReport rep;
    rep.axiom = name;
    std::vector<ProjectIndex> lost;
    for (ProjectIndex p : base.winners)
        if (!is_winner(after, p)) lost.push_back(p);
    if (lost.empty()) {
        rep.verdict = Verdict::Holds;
        return rep;
    }
    rep.verdict = Verdict::Violated;
    AxiomWitness w;
    w.description = "raising the budget from " +
                    std::to_string(inst.budget()) + " to " +
                    std::to_string(inst.budget() + 1) + " drops winners";
    w.transformed = raised;
    w.detail.push_back("lost winners: " + join_ids(inst, lost));
    w.detail.push_back("winners before: " + join_ids(inst, base.winners));
    w.detail.push_back("winners after: " + join_ids(raised, after.winners));
    rep.witness = std::move(w);
    return rep;
}

AxiomReport check_exhaustiveness(const Instance& inst, Rule rule, bool strong) {
    const char* name = strong ? "strong-exhaustiveness" : "weak-exhaustiveness";
    RuleOutput base = run_rule(inst, rule);

    AxiomReport rep;
    rep.axiom = name;
    if (base.degenerate) {
        // every feasible set is optimal, so any affordable extension of an
        // optimal set is itself optimal
        if (!strong) {
            rep.verdict = Verdict::Holds;
            rep.notes.push_back("optimum is 0: extensions of feasible sets "
                                "stay feasible, hence optimal");
            return rep;
        }
        for (ProjectIndex p = 0; p < inst.num_projects(); ++p) {
            if (inst.cost(p) <= inst.budget()) {
                rep.verdict = Verdict::Violated;
                AxiomWitness w;
                w.description = "the empty set is optimal yet " + inst.id(p) +
                                " still fits the budget";
                w.detail.push_back("optimal set: (none)");
                w.detail.push_back("affordable extension: " + inst.id(p));
                rep.witness = std::move(w);
                return rep;
            }
        }
        rep.verdict = Verdict::Holds;
        rep.notes.push_back("optimum is 0 and no project is affordable");
        return rep;
    }
    if (base.truncated)
        return make_na(name, "optimal family truncated; verdict would not "
                             "cover every optimal set");

    std::set<std::vector<ProjectIndex>> family;
    for (const auto& S : base.optimal_sets) family.insert(S.selected);

    for (const auto& S : base.optimal_sets) {
        for (ProjectIndex p = 0; p < inst.num_projects(); ++p) {
            if (S.contains(p)) continue;
            if (S.total_cost + inst.cost(p) > inst.budget()) continue;
            if (strong) {
                rep.verdict = Verdict::Violated;
                AxiomWitness w;
                w.description = "an optimal set leaves room for " + inst.id(p);
                w.detail.push_back("optimal set: " + join_ids(inst, S.selected));
                w.detail.push_back("affordable extension: " + inst.id(p));
                rep.witness = std::move(w);
                return rep;
            }
            std::vector<ProjectIndex> ext = S.selected;
            ext.insert(std::lower_bound(ext.begin(), ext.end(), p), p);
            if (family.find(ext) == family.end()) {
                rep.verdict = Verdict::Violated;
                AxiomWitness w;
                w.description = "adding " + inst.id(p) +
                                " to an optimal set fits the budget but is "
                                "not optimal";
                w.detail.push_back("optimal set: " + join_ids(inst, S.selected));
                w.detail.push_back("extension: " + join_ids(inst, ext));
                rep.witness = std::move(w);
                return rep;
            }
        }
    }
    rep.verdict = Verdict::Holds;
    return rep;
}

AxiomReport check_narrow_top(const Instance& inst, Rule rule) {
    const char* name = "narrow-top";
    std::vector<ProjectIndex> unanimous;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p) {
        bool all = true;
        for (const auto& vote : inst.votes())
            if (!vote_contains(vote, p)) {
                all = false;
                break;
            }
        if (all && inst.cost(p) <= inst.budget()) unanimous.push_back(p);
    }
    if (unanimous.empty())
        return make_na(name, "no affordable project is approved by every voter");

    RuleOutput base = run_rule(inst, rule);
    AxiomReport rep;
    rep.axiom = name;
    rep.notes.push_back("unanimous projects: " + join_ids(inst, unanimous));
    std::vector<ProjectIndex> missing;
    for (ProjectIndex p : unanimous)
        if (!is_winner(base, p)) missing.push_back(p);
    if (missing.empty()) {
        rep.verdict = Verdict::Holds;
        return rep;
    }
    rep.verdict = Verdict::Violated;
    AxiomWitness w;
    w.description = "unanimously approved projects fail to win";
    w.detail.push_back("missing: " + join_ids(inst, missing));
    w.detail.push_back("winners: " + join_ids(inst, base.winners));
    rep.witness = std::move(w);
    return rep;
}

AxiomReport check_clone_independence(const Instance& inst, Rule rule) {
    const char* name = "clone-independence";
    Instance dedup = dedup_votes(inst);
    if (dedup.num_voters() == inst.num_voters())
        return make_na(name, "votes are already pairwise distinct");

    RuleOutput base = run_rule(inst, rule);
    RuleOutput after = run_rule(dedup, rule);

    AxiomReport rep;
    rep.axiom = name;
    if (rule == Rule::Utilitarian)
        rep.notes.push_back("total utilities shift with multiplicities; only "
                            "the optimal family is compared");

    auto violated = [&](std::string why, std::vector<std::string> detail) {
        rep.verdict = Verdict::Violated;
        AxiomWitness w;
        w.description = "collapsing duplicate votes changes the outcome: " +
                        std::move(why);
        w.transformed = dedup;
        w.detail = std::move(detail);
        rep.witness = std::move(w);
        return rep;
    };

    if (base.degenerate != after.degenerate)
        return violated("one side has optimum 0 and the other does not", {});
    if (base.degenerate) {
        // both sides: every feasible set optimal over identical projects
        rep.verdict = Verdict::Holds;
        rep.notes.push_back("optimum is 0 on both sides");
        return rep;
    }
    if (rule != Rule::Utilitarian && base.value != after.value)
        return violated("the optimum moved",
                        {"value before: " + std::to_string(base.value),
                         "value after: " + std::to_string(after.value)});
    if (base.truncated || after.truncated)
        return make_na(name, "optimal family truncated; families cannot be "
                             "compared in full");
    if (base.optimal_sets != after.optimal_sets) {
        std::vector<std::string> detail;
        detail.push_back("families differ");
        detail.push_back("sets before: " +
                         std::to_string(base.optimal_sets.size()));
        detail.push_back("sets after: " +
                         std::to_string(after.optimal_sets.size()));
        return violated("the optimal family changed", std::move(detail));
    }
    rep.verdict = Verdict::Holds;
    return rep;
}

AxiomReport check_maximal_coverage(const Instance& inst, Rule rule) {
    const char* name = "maximal-coverage";
    RuleOutput base = run_rule(inst, rule);

    AxiomReport rep;
    rep.axiom = name;
    if (base.degenerate) {
        // winners are exactly the affordable projects, so an uncovered
        // voter's approved projects all exceed any budget a removal frees
        rep.verdict = Verdict::Holds;
        rep.notes.push_back("optimum is 0: uncovered voters approve only "
                            "unaffordable projects");
        return rep;
    }
    if (base.truncated)
        return make_na(name, "optimal family truncated; verdict would not "
                             "cover every optimal set");

    std::vector<std::size_t> uncovered;
    for (std::size_t i = 0; i < inst.num_voters(); ++i) {
        bool covered = false;
        for (ProjectIndex p : inst.votes()[i])
            if (std::binary_search(base.winners.begin(), base.winners.end(), p))
                covered = true;
        if (!covered) uncovered.push_back(i);
    }
    if (uncovered.empty()) {
        rep.verdict = Verdict::Holds;
        rep.notes.push_back("every voter approves some winner");
        return rep;
    }
    rep.notes.push_back(std::to_string(uncovered.size()) +
                        " voters approve no winner");

    for (const auto& S : base.optimal_sets) {
        for (ProjectIndex p : S.selected) {
            // p is redundant in S when every approver of p also approves
            // something else in S
            bool redundant = true;
            for (const auto& vote : inst.votes()) {
                if (!vote_contains(vote, p)) continue;
                bool other = false;
                for (ProjectIndex q : S.selected)
                    if (q != p && vote_contains(vote, q)) other = true;
                if (!other) {
                    redundant = false;
                    break;
                }
            }
            if (!redundant) continue;
            Cost room = inst.budget() - (S.total_cost - inst.cost(p));
            for (std::size_t i : uncovered) {
                for (ProjectIndex a : inst.votes()[i]) {
                    if (inst.cost(a) > room) continue;
                    rep.verdict = Verdict::Violated;
                    AxiomWitness w;
                    w.description =
                        "dropping redundant " + inst.id(p) +
                        " from an optimal set frees room for " + inst.id(a) +
                        ", which would cover a voter with no winner";
                    w.detail.push_back("optimal set: " +
                                       join_ids(inst, S.selected));
                    w.detail.push_back("redundant project: " + inst.id(p));
                    w.detail.push_back("uncovered voter index: " +
                                       std::to_string(i));
                    w.detail.push_back("their affordable project: " +
                                       inst.id(a));
                    rep.witness = std::move(w);
                    return rep;
                }
            }
        }
    }
    rep.verdict = Verdict::Holds;
    return rep;
}

//----------------------------------------------------------------------
// audit
//----------------------------------------------------------------------

namespace {

// One report per axiom: first violation wins, otherwise any pass means
// the axiom was exercised.
AxiomReport aggregate(const std::string& axiom,
                      const std::vector<AxiomReport>& parts,
                      const std::string& empty_note) {
    AxiomReport rep;
    rep.axiom = axiom;
    if (parts.empty()) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes.push_back(empty_note);
        return rep;
    }
    std::size_t held = 0, violated = 0;
    for (const auto& part : parts) {
        if (part.verdict == Verdict::Violated) {
            if (violated == 0) {
                rep.witness = part.witness;
                rep.notes = part.notes;
            }
            ++violated;
        } else if (part.verdict == Verdict::Holds) {
            ++held;
        }
    }
    if (violated > 0) {
        rep.verdict = Verdict::Violated;
        rep.notes.push_back(std::to_string(violated) + " of " +
                            std::to_string(parts.size()) +
                            " parameterizations violated");
        return rep;
    }
    if (held > 0) {
        rep.verdict = Verdict::Holds;
        rep.notes.push_back(std::to_string(held) + " of " +
                            std::to_string(parts.size()) +
                            " parameterizations checked");
        return rep;
    }
    rep.verdict = Verdict::NotApplicable;
    for (const auto& part : parts)
        for (const auto& n : part.notes) rep.notes.push_back(n);
    return rep;
}

} // namespace

std::vector<AxiomReport> audit(const Instance& inst, Rule rule,
                               const AuditOptions& opts) {
    if (inst.num_projects() > opts.max_projects)
        throw SizeError("audit re-solves many instances; the cap is " +
                        std::to_string(opts.max_projects) + " projects");

    RuleOutput base = run_rule(inst, rule, opts.brute);
    std::vector<AxiomReport> out;

    // splitting: binary split of every winner that can be split
    {
        std::vector<AxiomReport> parts;
        for (ProjectIndex p : base.winners) {
            if (inst.cost(p) < 2) continue;
            Cost half = inst.cost(p) / 2;
            parts.push_back(check_splitting_monotonicity(
                inst, rule, p, {half, inst.cost(p) - half}));
        }
        out.push_back(aggregate("splitting-monotonicity", parts,
                                "no winner costs at least 2"));
    }

    // merging: bloc pairs (and the full set) from each optimal set
    {
        std::vector<AxiomReport> parts;
        if (base.degenerate) {
            out.push_back(make_na("merging-monotonicity",
                                  "optimum is 0: the optimal family is not "
                                  "materialized"));
        } else if (base.truncated) {
            out.push_back(make_na("merging-monotonicity",
                                  "optimal family truncated"));
        } else {
            std::size_t examined = 0;
            for (const auto& S : base.optimal_sets) {
                if (examined >= opts.family_cap) break;
                ++examined;
                std::vector<std::vector<ProjectIndex>> groups;
                for (std::size_t i = 0; i + 1 < S.selected.size(); ++i)
                    for (std::size_t j = i + 1; j < S.selected.size(); ++j)
                        groups.push_back({S.selected[i], S.selected[j]});
                if (S.selected.size() > 2) groups.push_back(S.selected);
                for (const auto& g : groups) {
                    if (parts.size() >= opts.merge_checks_cap) break;
                    if (!votes_all_or_nothing(inst, g)) continue;
                    parts.push_back(
                        check_merging_monotonicity(inst, rule, S, g));
                }
            }
            out.push_back(aggregate("merging-monotonicity", parts,
                                    "no optimal set contains a bloc to merge"));
        }
    }

    // discount: every winner that can get cheaper
    {
        std::vector<AxiomReport> parts;
        for (ProjectIndex p : base.winners) {
            if (inst.cost(p) < 2) continue;
            parts.push_back(check_discount_monotonicity(inst, rule, p));
        }
        out.push_back(aggregate("discount-monotonicity", parts,
                                "no winner costs at least 2"));
    }

    out.push_back(check_limit_monotonicity(inst, rule));
    out.push_back(check_exhaustiveness(inst, rule, true));
    out.push_back(check_exhaustiveness(inst, rule, false));
    out.push_back(check_narrow_top(inst, rule));
    out.push_back(check_clone_independence(inst, rule));
    out.push_back(check_maximal_coverage(inst, rule));
    return out;
}

} // namespace maxminpb
