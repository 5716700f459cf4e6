#include "maxminpb/solvers.hpp"

#include "maxminpb/approx.hpp"
#include "maxminpb/lp.hpp"

#include <algorithm>
#include <map>

namespace maxminpb {

namespace {

std::vector<ProjectIndex> affordable_projects(const Instance& inst) {
    std::vector<ProjectIndex> out;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        if (inst.cost(p) <= inst.budget()) out.push_back(p);
    return out;
}

// distinct-vote classes touched by each project
std::vector<std::vector<std::uint32_t>>
classes_per_project(const Instance& inst, const DistinctProfile& prof) {
    std::vector<std::vector<std::uint32_t>> touch(inst.num_projects());
    for (std::uint32_t t = 0; t < prof.size(); ++t)
        for (ProjectIndex p : prof.votes[t]) touch[p].push_back(t);
    return touch;
}

Cost min_class_utility(const std::vector<Cost>& u) {
    Cost best = u[0];
    for (Cost v : u) best = std::min(best, v);
    return best;
}

//======================================================================
// lexicographic feasible-set enumeration (brute force + utilitarian)
//======================================================================

// Walks every feasible set in lexicographic order of its sorted index
// sequence (the empty set first). `value_of` maps the running per-class
// utility vector to the objective; both rules here maximize it.
class Enumerator {
public:
    Enumerator(const Instance& inst, bool want_all, const BruteOptions& opts,
               std::function<Cost(const std::vector<Cost>&)> value_of)
        : inst_(inst), want_all_(want_all), opts_(opts),
          value_of_(std::move(value_of)), prof_(distinct_profile(inst)),
          touch_(classes_per_project(inst, prof_)),
          u_(prof_.size(), 0), winner_mask_(inst.num_projects(), 0) {}

    SolveResult run() {
        consider();   // the empty set
        descend(0);

        SolveResult res;
        res.value = best_;
        if (best_ == 0) {
            res.zero_optimum = true;
            res.witness = Outcome::empty();
            res.winners = affordable_projects(inst_);
            return res; // all_optimal deliberately absent
        }
        res.witness = Outcome::of(inst_, witness_);
        if (want_all_) {
            std::vector<Outcome> all;
            all.reserve(optimal_.size());
            for (auto& s : optimal_) all.push_back(Outcome::of(inst_, s));
            res.all_optimal = std::move(all);
            res.all_optimal_truncated = truncated_;
        }
        std::vector<ProjectIndex> win;
        for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
            if (winner_mask_[p]) win.push_back(p);
        res.winners = std::move(win);
        return res;
    }

private:
    void consider() {
        Cost v = value_of_(u_);
        if (v > best_) {
            best_ = v;
            witness_ = cur_;
            optimal_.clear();
            truncated_ = false;
            if (want_all_) optimal_.push_back(cur_);
            std::fill(winner_mask_.begin(), winner_mask_.end(), 0);
            for (ProjectIndex p : cur_) winner_mask_[p] = 1;
        } else if (v == best_ && best_ > 0) {
            for (ProjectIndex p : cur_) winner_mask_[p] = 1;
            if (want_all_) {
                if (optimal_.size() < opts_.all_optimal_cap)
                    optimal_.push_back(cur_);
                else
                    truncated_ = true;
            }
        }
    }

    void descend(ProjectIndex start) {
        for (ProjectIndex j = start; j < inst_.num_projects(); ++j) {
            if (cost_ + inst_.cost(j) > inst_.budget()) continue;
            cur_.push_back(j);
            cost_ += inst_.cost(j);
            for (std::uint32_t t : touch_[j]) u_[t] += inst_.cost(j);
            consider();
            descend(j + 1);
            for (std::uint32_t t : touch_[j]) u_[t] -= inst_.cost(j);
            cost_ -= inst_.cost(j);
            cur_.pop_back();
        }
    }

    const Instance& inst_;
    bool want_all_;
    BruteOptions opts_;
    std::function<Cost(const std::vector<Cost>&)> value_of_;
    DistinctProfile prof_;
    std::vector<std::vector<std::uint32_t>> touch_;

    std::vector<Cost> u_;
    std::vector<ProjectIndex> cur_; // grows with increasing indices: sorted
    Cost cost_ = 0;

    Cost best_ = -1;
    std::vector<ProjectIndex> witness_;
    std::vector<std::vector<ProjectIndex>> optimal_;
    bool truncated_ = false;
    std::vector<char> winner_mask_;
};

void check_brute_cap(const Instance& inst, const BruteOptions& opts) {
    if (inst.num_projects() > opts.max_projects)
        throw SizeError("instance has " + std::to_string(inst.num_projects()) +
                        " projects; the exhaustive cap is " +
                        std::to_string(opts.max_projects));
}

} // namespace

SolveResult brute_force_solve(const Instance& inst, bool want_all,
                              const BruteOptions& opts) {
    check_brute_cap(inst, opts);
    Enumerator en(inst, want_all, opts, min_class_utility);
    return en.run();
}

SolveResult utilitarian_solve(const Instance& inst, bool want_all,
                              const BruteOptions& opts) {
    check_brute_cap(inst, opts);
    DistinctProfile prof = distinct_profile(inst);
    std::vector<Cost> mult(prof.multiplicity.begin(), prof.multiplicity.end());
    auto total = [mult = std::move(mult)](const std::vector<Cost>& u) {
        Cost t = 0;
        for (std::size_t i = 0; i < u.size(); ++i) t += mult[i] * u[i];
        return t;
    };
    Enumerator en(inst, want_all, opts, total);
    return en.run();
}

//======================================================================
// distinct-vote dynamic program
//======================================================================

std::uint64_t dp_state_bound(const Instance& inst, std::uint64_t saturate) {
    DistinctProfile prof = distinct_profile(inst);
    std::uint64_t by_votes = 1;
    for (const auto& vote : prof.votes) {
        Cost reach = 0;
        for (ProjectIndex p : vote) reach += inst.cost(p);
        reach = std::min(reach, inst.budget());
        std::uint64_t range = static_cast<std::uint64_t>(reach) + 1;
        if (by_votes > saturate / range) return saturate;
        by_votes *= range;
    }
    std::uint64_t by_subsets =
        inst.num_projects() >= 63 ? saturate
                                  : (std::uint64_t{1} << inst.num_projects());
    return std::min({by_votes, by_subsets, saturate});
}

SolveResult dp_solve(const Instance& inst, const DpOptions& opts) {
    const DistinctProfile prof = distinct_profile(inst);
    const auto touch = classes_per_project(inst, prof);
    const std::size_t nh = prof.size();

    // take-chains share tails so reconstruction costs nothing per state
    struct TakeLink {
        ProjectIndex project;
        std::int32_t prev;
    };
    std::vector<TakeLink> links;
    struct State {
        Cost cost;
        std::int32_t tail; // -1 = nothing taken
    };
    using Frontier = std::map<std::vector<Cost>, State>;

    std::size_t created = 1;
    auto charge = [&](std::size_t n) {
        created += n;
        if (created > opts.max_states)
            throw ResourceLimitError(
                "distinct-vote DP exceeded the state budget of " +
                std::to_string(opts.max_states) + " states");
    };

    if (opts.prune) {
        Frontier frontier;
        frontier.emplace(std::vector<Cost>(nh, 0), State{0, -1});
        for (ProjectIndex i = 0; i < inst.num_projects(); ++i) {
            Frontier next = frontier; // skip-branch keeps every state
            const Cost ci = inst.cost(i);
            for (const auto& [u, st] : frontier) {
                if (st.cost + ci > inst.budget()) continue;
                std::vector<Cost> nu = u;
                for (std::uint32_t t : touch[i]) nu[t] += ci;
                auto it = next.find(nu);
                if (it == next.end()) {
                    links.push_back({i, st.tail});
                    next.emplace(std::move(nu),
                                 State{st.cost + ci,
                                       static_cast<std::int32_t>(links.size() - 1)});
                    charge(1);
                } else if (st.cost + ci < it->second.cost) {
                    // dominated: same utility vector, strictly cheaper
                    links.push_back({i, st.tail});
                    it->second = State{st.cost + ci,
                                       static_cast<std::int32_t>(links.size() - 1)};
                }
            }
            frontier = std::move(next);
        }

        Cost best = -1;
        std::int32_t best_tail = -1;
        for (const auto& [u, st] : frontier) {
            Cost v = min_class_utility(u);
            if (v > best) {
                best = v;
                best_tail = st.tail;
            }
        }
        SolveResult res;
        res.value = best;
        if (best == 0) {
            res.zero_optimum = true;
            res.witness = Outcome::empty();
            return res;
        }
        std::vector<ProjectIndex> sel;
        for (std::int32_t l = best_tail; l >= 0; l = links[l].prev)
            sel.push_back(links[l].project);
        std::reverse(sel.begin(), sel.end());
        res.witness = Outcome::of(inst, std::move(sel));
        return res;
    }

    // unpruned reference variant (tests only): every reachable (vector, cost)
    // pair survives, duplicates included
    std::vector<std::pair<std::vector<Cost>, Cost>> states;
    states.push_back({std::vector<Cost>(nh, 0), 0});
    for (ProjectIndex i = 0; i < inst.num_projects(); ++i) {
        const Cost ci = inst.cost(i);
        std::size_t layer_end = states.size();
        for (std::size_t s = 0; s < layer_end; ++s) {
            if (states[s].second + ci > inst.budget()) continue;
            std::vector<Cost> nu = states[s].first;
            for (std::uint32_t t : touch[i]) nu[t] += ci;
            states.push_back({std::move(nu), states[s].second + ci});
            charge(1);
        }
    }
    Cost best = -1;
    for (const auto& [u, c] : states) {
        (void)c;
        best = std::max(best, min_class_utility(u));
    }
    SolveResult res;
    res.value = best;
    res.zero_optimum = (best == 0);
    res.witness = Outcome::empty(); // reference path reports the value only
    if (best > 0) {
        // recover some witness by rerunning the pruned variant
        DpOptions pruned = opts;
        pruned.prune = true;
        res.witness = dp_solve(inst, pruned).witness;
    }
    return res;
}

//======================================================================
// branch and bound
//======================================================================

namespace {

class BnbSolver {
public:
    BnbSolver(const Instance& inst, const BnbOptions& opts)
        : inst_(inst), opts_(opts), prof_(distinct_profile(inst)),
          touch_(classes_per_project(inst, prof_)),
          in_mask_(inst.num_projects(), 0), out_mask_(inst.num_projects(), 0) {}

    SolveResult solve(bool want_all) {
        OrderedRelaxResult warm = ordered_relax(inst_);
        incumbent_value_ = warm.value;
        incumbent_set_ = warm.fill.selected.selected;

        fixed_cost_ = 0;
        search();

        SolveResult res;
        res.value = incumbent_value_;
        if (res.value == 0) {
            res.zero_optimum = true;
            res.witness = Outcome::empty();
            res.winners = affordable_projects(inst_);
            finish_stats();
            return res;
        }
        res.witness = Outcome::of(inst_, lex_smallest_optimal());
        if (want_all) {
            enumerate_all(res);
        }
        finish_stats();
        return res;
    }

    // true iff some optimal set contains p; exact regardless of caps
    bool project_in_some_optimal(ProjectIndex p, Cost opt) {
        std::vector<ProjectIndex> found;
        reset_fixings();
        if (inst_.cost(p) > inst_.budget()) return false;
        in_mask_[p] = 1;
        fixed_cost_ = inst_.cost(p);
        bool ok = exists_descend(opt, &found);
        in_mask_[p] = 0;
        return ok;
    }

    Cost optimum() {
        OrderedRelaxResult warm = ordered_relax(inst_);
        incumbent_value_ = warm.value;
        incumbent_set_ = warm.fill.selected.selected;
        search();
        finish_stats();
        return incumbent_value_;
    }

private:
    void finish_stats() {
        if (opts_.stats) {
            opts_.stats->nodes = value_nodes_;
            opts_.stats->lp_fallbacks = lp_fallbacks_;
        }
    }

    void reset_fixings() {
        std::fill(in_mask_.begin(), in_mask_.end(), 0);
        std::fill(out_mask_.begin(), out_mask_.end(), 0);
        fixed_cost_ = 0;
    }

    std::vector<ProjectIndex> fixins() const {
        std::vector<ProjectIndex> v;
        for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
            if (in_mask_[p]) v.push_back(p);
        return v;
    }
    std::vector<ProjectIndex> fixouts() const {
        std::vector<ProjectIndex> v;
        for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
            if (out_mask_[p]) v.push_back(p);
        return v;
    }

    LpSolution bound_lp() {
        charge_node();
        LpSolution lp = lp_solve_fixed(inst_, prof_, fixins(), fixouts());
        if (lp.used_bigint_fallback) ++lp_fallbacks_;
        return lp;
    }

    void charge_node() {
        if (++total_nodes_ > opts_.node_cap)
            throw ResourceLimitError("branch-and-bound exceeded the node cap of " +
                                     std::to_string(opts_.node_cap));
    }

    Cost set_min_utility(const std::vector<ProjectIndex>& sel) const {
        std::vector<Cost> u(prof_.size(), 0);
        for (ProjectIndex p : sel)
            for (std::uint32_t t : touch_[p]) u[t] += inst_.cost(p);
        return min_class_utility(u);
    }

    // branching variable: most fractional x_p among free projects, ties by
    // project id; -1 when the LP solution is integral on the free projects
    int pick_branch(const LpSolution& lp) const {
        int best = -1;
        BigRat best_score(0);
        for (ProjectIndex p = 0; p < inst_.num_projects(); ++p) {
            if (in_mask_[p] || out_mask_[p]) continue;
            const BigRat& x = lp.selection[p];
            if (x == 0 || x == 1) continue;
            BigRat score = x < BigRat(1, 2) ? x : BigRat(1) - x;
            if (best < 0 || score > best_score ||
                (score == best_score &&
                 inst_.id(p) < inst_.id(static_cast<ProjectIndex>(best)))) {
                best = static_cast<int>(p);
                best_score = score;
            }
        }
        return best;
    }

    void search() {
        ++value_nodes_;
        LpSolution lp = bound_lp();
        if (opts_.trace)
            opts_.trace->push_back(BnbNode{fixins(), fixouts(), lp.objective});
        if (rat_floor(lp.objective) <= incumbent_value_) return;

        int branch = pick_branch(lp);
        if (branch < 0) {
            // integral vertex: its selection is the best set under this node
            std::vector<ProjectIndex> sel;
            for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
                if (in_mask_[p] || lp.selection[p] == 1) sel.push_back(p);
            Cost v = set_min_utility(sel);
            if (v > incumbent_value_) {
                incumbent_value_ = v;
                incumbent_set_ = std::move(sel);
            }
            return;
        }
        ProjectIndex p = static_cast<ProjectIndex>(branch);
        if (fixed_cost_ + inst_.cost(p) <= inst_.budget()) {
            in_mask_[p] = 1;
            fixed_cost_ += inst_.cost(p);
            search();
            fixed_cost_ -= inst_.cost(p);
            in_mask_[p] = 0;
        }
        out_mask_[p] = 1;
        search();
        out_mask_[p] = 0;
    }

    // is there a set attaining `target` consistent with the current
    // fixings? fills *found with one such set on success
    bool exists_descend(Cost target, std::vector<ProjectIndex>* found) {
        LpSolution lp = bound_lp();
        if (rat_floor(lp.objective) < target) return false;
        int branch = pick_branch(lp);
        if (branch < 0) {
            std::vector<ProjectIndex> sel;
            for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
                if (in_mask_[p] || (!out_mask_[p] && lp.selection[p] == 1))
                    sel.push_back(p);
            if (set_min_utility(sel) != target) return false;
            *found = std::move(sel);
            return true;
        }
        ProjectIndex p = static_cast<ProjectIndex>(branch);
        if (fixed_cost_ + inst_.cost(p) <= inst_.budget()) {
            in_mask_[p] = 1;
            fixed_cost_ += inst_.cost(p);
            bool ok = exists_descend(target, found);
            fixed_cost_ -= inst_.cost(p);
            in_mask_[p] = 0;
            if (ok) return true;
        }
        out_mask_[p] = 1;
        bool ok = exists_descend(target, found);
        out_mask_[p] = 0;
        return ok;
    }

    // Greedy construction of the lexicographically smallest optimal set.
    // Maintains a certificate: some optimal set consistent with all the
    // decisions so far. A project joins the prefix exactly when a
    // consistent optimal set containing it exists.
    std::vector<ProjectIndex> lex_smallest_optimal() {
        const Cost opt = incumbent_value_;
        std::vector<ProjectIndex> cert = incumbent_set_;
        std::sort(cert.begin(), cert.end());
        std::vector<ProjectIndex> prefix;

        reset_fixings();
        for (ProjectIndex j = 0; j < inst_.num_projects(); ++j) {
            // a prefix that is already optimal is the answer: extending it
            // only makes the sequence lexicographically larger
            if (set_min_utility(prefix) == opt) return prefix;
            bool in_cert =
                std::binary_search(cert.begin(), cert.end(), j);
            if (!in_cert) {
                std::vector<ProjectIndex> found;
                if (fixed_cost_ + inst_.cost(j) <= inst_.budget()) {
                    in_mask_[j] = 1;
                    fixed_cost_ += inst_.cost(j);
                    bool ok = exists_descend(opt, &found);
                    in_mask_[j] = 0;
                    fixed_cost_ -= inst_.cost(j);
                    if (ok) {
                        cert = std::move(found);
                        std::sort(cert.begin(), cert.end());
                        in_cert = true;
                    }
                }
            }
            if (in_cert) {
                prefix.push_back(j);
                in_mask_[j] = 1;
                fixed_cost_ += inst_.cost(j);
            } else {
                out_mask_[j] = 1;
            }
        }
        return prefix;
    }

    // exhaustive collection of the optimal family under LP pruning
    void enumerate_all(SolveResult& res) {
        const Cost opt = res.value;
        collected_.clear();
        enum_truncated_ = false;
        reset_fixings();
        enum_descend(0, opt);

        std::sort(collected_.begin(), collected_.end(), set_lex_less);
        std::vector<Outcome> outs;
        outs.reserve(collected_.size());
        for (auto& s : collected_) outs.push_back(Outcome::of(inst_, s));
        res.all_optimal = std::move(outs);
        res.all_optimal_truncated = enum_truncated_;

        std::vector<ProjectIndex> win;
        if (!enum_truncated_) {
            std::vector<char> mask(inst_.num_projects(), 0);
            for (const auto& s : collected_)
                for (ProjectIndex p : s) mask[p] = 1;
            for (ProjectIndex p = 0; p < inst_.num_projects(); ++p)
                if (mask[p]) win.push_back(p);
        } else {
            // truncation must not corrupt winners: probe each project
            for (ProjectIndex p = 0; p < inst_.num_projects(); ++p) {
                bool known = false;
                for (const auto& s : collected_)
                    if (std::binary_search(s.begin(), s.end(), p)) {
                        known = true;
                        break;
                    }
                if (known || project_in_some_optimal(p, opt)) win.push_back(p);
            }
        }
        res.winners = std::move(win);
    }

    // returns false to abort the whole walk (cap reached)
    bool enum_descend(ProjectIndex next, Cost opt) {
        if (next == inst_.num_projects()) {
            std::vector<ProjectIndex> sel = fixins();
            if (set_min_utility(sel) == opt) {
                if (collected_.size() >= opts_.all_optimal_cap) {
                    enum_truncated_ = true;
                    return false;
                }
                collected_.push_back(std::move(sel));
            }
            return true;
        }
        {
            LpSolution lp = bound_lp();
            if (rat_floor(lp.objective) < opt) return true; // nothing optimal here
        }
        if (fixed_cost_ + inst_.cost(next) <= inst_.budget()) {
            in_mask_[next] = 1;
            fixed_cost_ += inst_.cost(next);
            bool keep = enum_descend(next + 1, opt);
            fixed_cost_ -= inst_.cost(next);
            in_mask_[next] = 0;
            if (!keep) return false;
        }
        out_mask_[next] = 1;
        bool keep = enum_descend(next + 1, opt);
        out_mask_[next] = 0;
        return keep;
    }

    const Instance& inst_;
    BnbOptions opts_;
    DistinctProfile prof_;
    std::vector<std::vector<std::uint32_t>> touch_;

    std::vector<char> in_mask_, out_mask_;
    Cost fixed_cost_ = 0;

    Cost incumbent_value_ = 0;
    std::vector<ProjectIndex> incumbent_set_;

    std::vector<std::vector<ProjectIndex>> collected_;
    bool enum_truncated_ = false;

    std::size_t value_nodes_ = 0;
    std::size_t total_nodes_ = 0;
    std::size_t lp_fallbacks_ = 0;
};

} // namespace

SolveResult branch_and_bound_solve(const Instance& inst, bool want_all,
                                   const BnbOptions& opts) {
    BnbSolver solver(inst, opts);
    return solver.solve(want_all);
}

std::vector<ProjectIndex> winners(const Instance& inst, SolverKind solver) {
    if (solver == SolverKind::Brute) {
        SolveResult res = brute_force_solve(inst, false);
        return *res.winners;
    }
    BnbOptions opts;
    BnbSolver s(inst, opts);
    Cost opt = s.optimum();
    if (opt == 0) return affordable_projects(inst);
    std::vector<ProjectIndex> win;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        if (s.project_in_some_optimal(p, opt)) win.push_back(p);
    return win;
}

} // namespace maxminpb
