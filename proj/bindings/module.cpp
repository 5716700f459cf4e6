#include "maxminpb/approx.hpp"
#include "maxminpb/axioms.hpp"
#include "maxminpb/core.hpp"
#include "maxminpb/ingest.hpp"
#include "maxminpb/lp.hpp"
#include "maxminpb/ordered_fill.hpp"
#include "maxminpb/solvers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace maxminpb;

namespace {

Instance make_instance(
    const std::vector<std::pair<std::string, Cost>>& projects, Cost budget,
    const std::vector<std::vector<std::string>>& votes) {
    std::vector<Project> ps;
    ps.reserve(projects.size());
    for (const auto& [id, cost] : projects) ps.push_back(Project{id, cost});
    return Instance::create(std::move(ps), budget, votes);
}

std::vector<std::string> to_ids(const Instance& inst,
                                const std::vector<ProjectIndex>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (ProjectIndex p : ps) out.push_back(inst.id(p));
    return out;
}

Outcome outcome_from_ids(const Instance& inst,
                         const std::vector<std::string>& ids) {
    return Outcome::of_ids(inst, ids);
}

py::dict result_to_dict(const Instance& inst, const SolveResult& res) {
    py::dict d;
    d["value"] = res.value;
    d["witness"] = to_ids(inst, res.witness.selected);
    d["witness_cost"] = res.witness.total_cost;
    d["zero_optimum"] = res.zero_optimum;
    if (res.all_optimal) {
        py::list fam;
        for (const Outcome& S : *res.all_optimal)
            fam.append(to_ids(inst, S.selected));
        d["all_optimal"] = fam;
        d["all_optimal_truncated"] = res.all_optimal_truncated;
    } else {
        d["all_optimal"] = py::none();
    }
    d["winners"] =
        res.winners ? py::cast(to_ids(inst, *res.winners)) : py::none();
    return d;
}

py::dict lp_to_dict(const Instance& inst, const LpSolution& lp) {
    py::dict sel;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        sel[py::str(inst.id(p))] = rat_to_string(lp.selection[p]);
    py::dict d;
    d["objective"] = rat_to_string(lp.objective);
    d["selection"] = sel;
    d["pivots"] = lp.pivots;
    d["used_bigint_fallback"] = lp.used_bigint_fallback;
    return d;
}

} // namespace

PYBIND11_MODULE(_maxminpb, m) {
    m.doc() = "maxmin participatory budgeting core (C++ extension)";

    // base first: pybind11 runs translators newest-first, so derived
    // exception types must be registered after their base
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                               PyExc_RuntimeError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Instance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("projects"), py::arg("budget"),
             py::arg("votes"))
        .def_property_readonly("budget", &Instance::budget)
        .def_property_readonly("num_projects", &Instance::num_projects)
        .def_property_readonly("num_voters", &Instance::num_voters)
        .def_property_readonly("warnings", &Instance::warnings)
        .def("ids",
             [](const Instance& inst) {
                 std::vector<std::string> out;
                 for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
                     out.push_back(inst.id(p));
                 return out;
             })
        .def("cost",
             [](const Instance& inst, const std::string& id) {
                 return inst.cost(inst.index_of(id));
             })
        .def("votes",
             [](const Instance& inst) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& vote : inst.votes())
                     out.push_back(to_ids(inst, vote));
                 return out;
             })
        .def("__eq__",
             [](const Instance& a, const Instance& b) { return a == b; })
        .def("__repr__", [](const Instance& inst) {
            return "<Instance projects=" +
                   std::to_string(inst.num_projects()) +
                   " voters=" + std::to_string(inst.num_voters()) +
                   " budget=" + std::to_string(inst.budget()) + ">";
        });

    m.def(
        "solve",
        [](const Instance& inst, const std::string& method, bool all_optimal) {
            SolveResult res;
            if (method == "brute")
                res = brute_force_solve(inst, all_optimal);
            else if (method == "dp")
                res = dp_solve(inst);
            else if (method == "bnb")
                res = branch_and_bound_solve(inst, all_optimal);
            else
                throw std::invalid_argument("method must be brute, dp or "
                                            "bnb");
            return result_to_dict(inst, res);
        },
        py::arg("instance"), py::arg("method") = "bnb",
        py::arg("all_optimal") = false);

    m.def(
        "utility",
        [](const Instance& inst, std::size_t voter_index,
           const std::vector<std::string>& selected) {
            return utility(inst, voter_index, outcome_from_ids(inst, selected));
        },
        py::arg("instance"), py::arg("voter_index"), py::arg("selected"));

    m.def(
        "maxmin_value",
        [](const Instance& inst, const std::vector<std::string>& selected) {
            return maxmin_value(inst, outcome_from_ids(inst, selected));
        },
        py::arg("instance"), py::arg("selected"));

    m.def(
        "minimax_disutility_value",
        [](const Instance& inst, const std::vector<std::string>& selected) {
            return minimax_disutility_value(inst,
                                            outcome_from_ids(inst, selected));
        },
        py::arg("instance"), py::arg("selected"));

    m.def(
        "lp_relax",
        [](const Instance& inst) { return lp_to_dict(inst, lp_solve(inst)); },
        py::arg("instance"));

    m.def(
        "ordered_relax",
        [](const Instance& inst) {
            OrderedRelaxResult res = ordered_relax(inst);
            py::dict d;
            d["value"] = res.value;
            d["selected"] = to_ids(inst, res.fill.selected.selected);
            d["selected_cost"] = res.fill.selected.total_cost;
            d["order"] = to_ids(inst, res.fill.order_used);
            d["lp"] = lp_to_dict(inst, res.lp);
            return d;
        },
        py::arg("instance"));

    m.def(
        "certificate",
        [](const Instance& inst, const std::vector<std::string>& selected,
           Cost opt_value) {
            auto cert = additive_bound_certificate(
                inst, outcome_from_ids(inst, selected), opt_value);
            py::dict d;
            d["alg_value"] = cert.alg_value;
            d["opt_value"] = cert.opt_value;
            d["worst_voter"] = cert.worst_voter;
            d["ratio"] = cert.ratio ? py::cast(rat_to_string(*cert.ratio))
                                    : py::none();
            d["bound_rhs"] = cert.bound_rhs
                                 ? py::cast(rat_to_string(*cert.bound_rhs))
                                 : py::none();
            d["ratio_undefined"] = cert.ratio_undefined;
            d["holds"] = cert.holds;
            return d;
        },
        py::arg("instance"), py::arg("selected"), py::arg("opt_value"));

    m.def(
        "fill_range",
        [](const Instance& inst) {
            FillSizeRange r = fill_size_range(inst);
            return std::make_pair(r.min_fill, r.max_fill);
        },
        py::arg("instance"));

    m.def("hcbp_check", &hcbp_check, py::arg("instance"));

    m.def(
        "scale_down",
        [](const Instance& inst) {
            ScaledInstance s = scale_down(inst);
            return std::make_pair(s.instance, s.factor);
        },
        py::arg("instance"));

    m.def("parse_native", &parse_native, py::arg("text"));
    m.def("write_native", &write_native, py::arg("instance"));
    m.def(
        "parse_pabulib",
        [](const std::string& text, int rescale_pow10) {
            PabulibOptions opts;
            opts.rescale_pow10 = rescale_pow10;
            return parse_pabulib(text, opts);
        },
        py::arg("text"), py::arg("rescale_pow10") = 0);

    m.def(
        "audit",
        [](const Instance& inst, const std::string& rule_name) {
            Rule rule = rule_name == "utilitarian" ? Rule::Utilitarian
                                                   : Rule::MpbBrute;
            py::list out;
            for (const AxiomReport& rep : audit(inst, rule)) {
                py::dict d;
                d["axiom"] = rep.axiom;
                d["verdict"] = verdict_name(rep.verdict);
                d["notes"] = rep.notes;
                if (rep.witness) {
                    py::dict w;
                    w["description"] = rep.witness->description;
                    w["detail"] = rep.witness->detail;
                    if (rep.witness->transformed)
                        w["transformed"] = *rep.witness->transformed;
                    d["witness"] = w;
                } else {
                    d["witness"] = py::none();
                }
                out.append(d);
            }
            return out;
        },
        py::arg("instance"), py::arg("rule") = "mpb");

    m.def(
        "generate",
        [](std::size_t num_projects, std::size_t num_voters,
           std::size_t num_distinct, Cost cost_min, Cost cost_max,
           double budget_fraction, std::size_t max_vote_size,
           bool require_hcbp, std::uint64_t seed) {
            GenParams p;
            p.num_projects = num_projects;
            p.num_voters = num_voters;
            p.num_distinct = num_distinct;
            p.cost_min = cost_min;
            p.cost_max = cost_max;
            p.budget_fraction = budget_fraction;
            p.max_vote_size = max_vote_size;
            p.require_hcbp = require_hcbp;
            p.seed = seed;
            return generate(p);
        },
        py::arg("num_projects") = 8, py::arg("num_voters") = 10,
        py::arg("num_distinct") = 4, py::arg("cost_min") = 1,
        py::arg("cost_max") = 20, py::arg("budget_fraction") = 0.4,
        py::arg("max_vote_size") = 0, py::arg("require_hcbp") = false,
        py::arg("seed") = 1);
}
