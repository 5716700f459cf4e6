#include "maxminpb/core.hpp"

#include <algorithm>
#include <numeric>

namespace maxminpb {

void Instance::build_index() {
    index_.clear();
    index_.reserve(projects_.size());
    for (ProjectIndex i = 0; i < projects_.size(); ++i) {
        auto [it, fresh] = index_.emplace(projects_[i].id, i);
        (void)it;
        if (!fresh)
            throw ValidationError("duplicate project id '" + projects_[i].id + "'");
    }
}

Instance Instance::from_indices(std::vector<Project> projects, Cost budget,
                                std::vector<std::vector<ProjectIndex>> votes) {
    if (projects.empty()) throw ValidationError("instance has no projects");
    if (votes.empty()) throw ValidationError("instance has no voters");
    if (budget <= 0) throw ValidationError("budget must be positive");

    Instance inst;
    inst.projects_ = std::move(projects);
    inst.budget_ = budget;
    for (const auto& p : inst.projects_) {
        if (p.id.empty()) throw ValidationError("empty project id");
        if (p.cost <= 0)
            throw ValidationError("project '" + p.id + "' has non-positive cost");
    }
    inst.build_index();

    std::size_t voter = 0;
    for (auto& v : votes) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw ValidationError("vote " + std::to_string(voter) +
                                  " lists a project twice");
        if (!v.empty() && v.back() >= inst.projects_.size())
            throw ValidationError("vote " + std::to_string(voter) +
                                  " references an unknown project index");
        if (v.empty())
            inst.warnings_.push_back("voter " + std::to_string(voter) +
                                     " has an empty approval vote");
        ++voter;
    }
    inst.votes_ = std::move(votes);
    return inst;
}

Instance Instance::create(std::vector<Project> projects, Cost budget,
                          const std::vector<std::vector<std::string>>& votes) {
    // resolve ids against the project list before delegating
    std::unordered_map<std::string, ProjectIndex> lookup;
    for (ProjectIndex i = 0; i < projects.size(); ++i) {
        if (!lookup.emplace(projects[i].id, i).second)
            throw ValidationError("duplicate project id '" + projects[i].id + "'");
    }
    std::vector<std::vector<ProjectIndex>> resolved;
    resolved.reserve(votes.size());
    std::size_t voter = 0;
    for (const auto& v : votes) {
        std::vector<ProjectIndex> idx;
        idx.reserve(v.size());
        for (const auto& id : v) {
            auto it = lookup.find(id);
            if (it == lookup.end())
                throw ValidationError("vote " + std::to_string(voter) +
                                      " approves unknown project '" + id + "'");
            idx.push_back(it->second);
        }
        resolved.push_back(std::move(idx));
        ++voter;
    }
    return from_indices(std::move(projects), budget, std::move(resolved));
}

ProjectIndex Instance::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("unknown project id '" + id + "'");
    return it->second;
}

Cost Instance::total_cost() const {
    Cost t = 0;
    for (const auto& p : projects_) t += p.cost;
    return t;
}

Outcome Outcome::of(const Instance& inst, std::vector<ProjectIndex> selected) {
    std::sort(selected.begin(), selected.end());
    if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
        throw std::invalid_argument("outcome lists a project twice");
    Cost total = 0;
    for (ProjectIndex p : selected) {
        if (p >= inst.num_projects())
            throw std::out_of_range("outcome references an unknown project index");
        total += inst.cost(p);
    }
    if (total > inst.budget())
        throw ValidationError("outcome exceeds the budget (" +
                              std::to_string(total) + " > " +
                              std::to_string(inst.budget()) + ")");
    Outcome out;
    out.selected = std::move(selected);
    out.total_cost = total;
    return out;
}

Outcome Outcome::of_ids(const Instance& inst,
                        const std::vector<std::string>& ids) {
    std::vector<ProjectIndex> sel;
    sel.reserve(ids.size());
    for (const auto& id : ids) sel.push_back(inst.index_of(id));
    return of(inst, std::move(sel));
}

bool Outcome::contains(ProjectIndex p) const {
    return std::binary_search(selected.begin(), selected.end(), p);
}

std::vector<std::string> Outcome::ids(const Instance& inst) const {
    std::vector<std::string> out;
    out.reserve(selected.size());
    for (ProjectIndex p : selected) out.push_back(inst.id(p));
    return out;
}

bool set_lex_less(const std::vector<ProjectIndex>& a,
                  const std::vector<ProjectIndex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

DistinctProfile distinct_profile(const Instance& inst) {
    DistinctProfile prof;
    prof.voter_class.reserve(inst.num_voters());
    // votes are canonically sorted, so a plain map over the vector works
    std::unordered_map<std::string, std::uint32_t> seen; // key: joined indices
    for (const auto& v : inst.votes()) {
        std::string key;
        for (ProjectIndex p : v) {
            key += std::to_string(p);
            key += ',';
        }
        auto it = seen.find(key);
        if (it == seen.end()) {
            std::uint32_t cls = static_cast<std::uint32_t>(prof.votes.size());
            seen.emplace(std::move(key), cls);
            prof.votes.push_back(v);
            prof.multiplicity.push_back(1);
            prof.voter_class.push_back(cls);
        } else {
            prof.multiplicity[it->second] += 1;
            prof.voter_class.push_back(it->second);
        }
    }
    return prof;
}

Cost utility(const Instance& inst, std::size_t voter_index, const Outcome& out) {
    if (voter_index >= inst.num_voters())
        throw std::out_of_range("voter index " + std::to_string(voter_index) +
                                " out of range");
    const auto& vote = inst.votes()[voter_index];
    Cost u = 0;
    for (ProjectIndex p : vote)
        if (out.contains(p)) u += inst.cost(p);
    return u;
}

Cost maxmin_value(const Instance& inst, const Outcome& out) {
    Cost best = -1;
    for (std::size_t i = 0; i < inst.num_voters(); ++i) {
        Cost u = utility(inst, i, out);
        if (best < 0 || u < best) best = u;
    }
    return best;
}

Cost minimax_disutility_value(const Instance& inst, const Outcome& out) {
    return inst.budget() - maxmin_value(inst, out);
}

ScaledInstance scale_down(const Instance& inst) {
    Cost g = inst.budget();
    for (const auto& p : inst.projects()) g = std::gcd(g, p.cost);
    std::vector<Project> projects = inst.projects();
    for (auto& p : projects) p.cost /= g;
    ScaledInstance scaled;
    scaled.factor = g;
    scaled.instance =
        Instance::from_indices(std::move(projects), inst.budget() / g,
                               inst.votes());
    return scaled;
}

Cost scalable_limit(const Instance& inst) {
    Cost g = inst.budget();
    Cost maxc = 0;
    for (const auto& p : inst.projects()) {
        g = std::gcd(g, p.cost);
        maxc = std::max(maxc, p.cost);
    }
    return maxc / g;
}

} // namespace maxminpb
