#include "maxminpb/approx.hpp"
#include "maxminpb/axioms.hpp"
#include "maxminpb/ingest.hpp"
#include "maxminpb/lp.hpp"
#include "maxminpb/ordered_fill.hpp"
#include "maxminpb/solvers.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

using json = nlohmann::json;
using namespace maxminpb;

namespace {

//----------------------------------------------------------------------
// plumbing
//----------------------------------------------------------------------

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct InputFlags {
    std::string path;
    std::string format = "auto"; // auto resolves by extension
    int rescale_pow10 = 0;
    std::optional<Cost> budget_override;
};

std::string resolve_format(const InputFlags& in) {
    if (in.format != "auto") return in.format;
    std::string ext = std::filesystem::path(in.path).extension().string();
    return ext == ".json" ? "native" : "pabulib";
}

Instance load_instance(const InputFlags& in, DatasetMeta* meta_out) {
    std::string text = read_file(in.path);
    std::string format = resolve_format(in);
    Instance inst = [&] {
        if (format == "native") return parse_native(text);
        PabulibOptions popts;
        popts.rescale_pow10 = in.rescale_pow10;
        return parse_pabulib(text, popts);
    }();
    if (in.budget_override)
        inst = Instance::from_indices(inst.projects(), *in.budget_override,
                                      inst.votes());
    if (meta_out) {
        std::string name = std::filesystem::path(in.path).stem().string();
        *meta_out = describe(inst, name, in.path);
    }
    return inst;
}

json meta_json(const DatasetMeta& meta) {
    return json{{"budget", meta.budget},
                {"name", meta.name},
                {"num_distinct_votes", meta.num_distinct_votes},
                {"num_projects", meta.num_projects},
                {"num_voters", meta.num_voters},
                {"scalable_limit", meta.scalable_limit},
                {"source", meta.source}};
}

json ids_json(const Instance& inst, const std::vector<ProjectIndex>& ps) {
    json arr = json::array();
    for (ProjectIndex p : ps) arr.push_back(inst.id(p));
    return arr;
}

json native_json(const Instance& inst) { return json::parse(write_native(inst)); }

json lp_json(const Instance& inst, const LpSolution& lp) {
    json sel;
    for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
        sel[inst.id(p)] = rat_to_string(lp.selection[p]);
    return json{{"objective", rat_to_string(lp.objective)},
                {"pivots", lp.pivots},
                {"selection", std::move(sel)},
                {"used_bigint_fallback", lp.used_bigint_fallback}};
}

json certificate_json(const Instance& inst,
                      const AdditiveBoundCertificate& cert) {
    json j{{"alg_value", cert.alg_value},
           {"holds", cert.holds},
           {"opt_value", cert.opt_value},
           {"ratio_undefined", cert.ratio_undefined},
           {"worst_voter", cert.worst_voter}};
    (void)inst;
    if (cert.ratio) j["ratio"] = rat_to_string(*cert.ratio);
    if (cert.bound_rhs) j["bound_rhs"] = rat_to_string(*cert.bound_rhs);
    return j;
}

void emit(const json& report, const std::string& out_format,
          const std::string& out_file,
          const std::function<std::string(const json&)>& project) {
    std::string payload = out_format == "json" ? report.dump(2) + "\n"
                                               : project(report);
    if (out_file.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw Error("cannot write to " + out_file);
        out << payload;
    }
}

std::string kv_csv(const json& flat) {
    std::string s = "key,value\n";
    for (const auto& item : flat.items()) {
        json v = item.value();
        std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
        if (cell.find(',') != std::string::npos ||
            cell.find('"') != std::string::npos) {
            std::string quoted = "\"";
            for (char c : cell) {
                if (c == '"') quoted += "\"\"";
                else quoted += c;
            }
            quoted += "\"";
            cell = std::move(quoted);
        }
        s += item.key() + "," + cell + "\n";
    }
    return s;
}

// flattens nested objects/arrays into dotted keys for the csv projection
void flatten(const json& j, const std::string& prefix, json& out) {
    if (j.is_object()) {
        for (const auto& item : j.items())
            flatten(item.value(),
                    prefix.empty() ? item.key() : prefix + "." + item.key(),
                    out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out[prefix] = j;
    }
}

std::string csv_projection(const json& report) {
    json flat;
    flatten(report, "", flat);
    return kv_csv(flat);
}

//----------------------------------------------------------------------
// resource caps (flags override env, env overrides builtin defaults)
//----------------------------------------------------------------------

struct Caps {
    std::size_t brute_max_projects = BruteOptions{}.max_projects;
    std::size_t dp_max_states = DpOptions{}.max_states;
    std::size_t bnb_node_cap = BnbOptions{}.node_cap;
    std::size_t all_optimal_cap = BruteOptions{}.all_optimal_cap;
};

void apply_env(std::size_t& slot, const char* var) {
    const char* raw = std::getenv(var);
    if (!raw) return;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw Error(std::string(var) + " is not a number: " + raw);
    slot = static_cast<std::size_t>(v);
}

Caps caps_from_env() {
    Caps caps;
    apply_env(caps.brute_max_projects, "MAXMINPB_BRUTE_MAX_PROJECTS");
    apply_env(caps.dp_max_states, "MAXMINPB_DP_MAX_STATES");
    apply_env(caps.bnb_node_cap, "MAXMINPB_BNB_NODE_CAP");
    apply_env(caps.all_optimal_cap, "MAXMINPB_ALL_OPTIMAL_CAP");
    return caps;
}

//----------------------------------------------------------------------
// solve
//----------------------------------------------------------------------

struct SolveFlags {
    InputFlags input;
    std::string method = "bnb";
    std::string objective = "maxmin";
    bool all_optimal = false;
    bool certify = false;
    std::string out_format = "json";
    std::string out_file;
    bool no_timings = false;
    Caps caps;
};

// mirrors a maxmin value into the requested objective
Cost objective_value(const SolveFlags& f, const Instance& inst, Cost maxmin) {
    return f.objective == "maxmin" ? maxmin : inst.budget() - maxmin;
}

std::string solve_text(const json& r) {
    std::ostringstream out;
    out << "dataset   " << r["dataset"]["name"].get<std::string>() << "\n";
    out << "method    " << r["method"].get<std::string>() << "\n";
    out << "objective " << r["objective"].get<std::string>() << "\n";
    out << "value     " << r["result"]["value"] << "\n";
    out << "witness  ";
    for (const auto& id : r["result"]["witness"])
        out << " " << id.get<std::string>();
    out << "\n";
    if (r["result"].contains("winners")) {
        out << "winners  ";
        for (const auto& id : r["result"]["winners"])
            out << " " << id.get<std::string>();
        out << "\n";
    }
    if (r["result"].value("zero_optimum", false))
        out << "note      optimum is 0; every feasible set is optimal\n";
    if (r.contains("certificate"))
        out << "certificate "
            << (r["certificate"]["holds"].get<bool>() ? "holds" : "FAILS")
            << "\n";
    return out.str();
}

int cmd_solve(const SolveFlags& f) {
    DatasetMeta meta;
    Instance inst = load_instance(f.input, &meta);

    json report;
    report["command"] = "solve";
    report["dataset"] = meta_json(meta);
    report["method"] = f.method;
    report["objective"] = f.objective;
    if (f.input.budget_override)
        report["budget_override"] = *f.input.budget_override;

    json result;
    auto start = std::chrono::steady_clock::now();

    if (f.method == "brute" || f.method == "dp" || f.method == "bnb") {
        SolveResult res;
        if (f.method == "brute") {
            BruteOptions opts;
            opts.max_projects = f.caps.brute_max_projects;
            opts.all_optimal_cap = f.caps.all_optimal_cap;
            res = brute_force_solve(inst, f.all_optimal, opts);
        } else if (f.method == "dp") {
            DpOptions opts;
            opts.max_states = f.caps.dp_max_states;
            res = dp_solve(inst, opts);
            if (f.all_optimal)
                result["all_optimal_note"] =
                    "the dp method reports a single witness; use brute or "
                    "bnb for the full family";
        } else {
            BnbOptions opts;
            opts.node_cap = f.caps.bnb_node_cap;
            opts.all_optimal_cap = f.caps.all_optimal_cap;
            BnbStats stats;
            opts.stats = &stats;
            res = branch_and_bound_solve(inst, f.all_optimal, opts);
            result["stats"] = json{{"lp_fallbacks", stats.lp_fallbacks},
                                   {"nodes", stats.nodes}};
        }
        result["value"] = objective_value(f, inst, res.value);
        result["maxmin_value"] = res.value;
        result["witness"] = ids_json(inst, res.witness.selected);
        result["witness_cost"] = res.witness.total_cost;
        result["zero_optimum"] = res.zero_optimum;
        if (res.all_optimal) {
            json fam = json::array();
            for (const auto& S : res.all_optimal.value())
                fam.push_back(ids_json(inst, S.selected));
            result["all_optimal"] = std::move(fam);
            result["all_optimal_truncated"] = res.all_optimal_truncated;
        } else if (f.all_optimal && res.zero_optimum) {
            result["all_optimal_note"] =
                "optimum is 0; every feasible set is optimal and the family "
                "is not materialized";
        }
        if (res.winners) result["winners"] = ids_json(inst, *res.winners);
    } else if (f.method == "ordered-relax") {
        OrderedRelaxResult relax = ordered_relax(inst);
        result["value"] = objective_value(f, inst, relax.value);
        result["maxmin_value"] = relax.value;
        result["witness"] = ids_json(inst, relax.fill.selected.selected);
        result["witness_cost"] = relax.fill.selected.total_cost;
        result["order"] = ids_json(inst, relax.fill.order_used);
        if (relax.fill.stop_project)
            result["stopped_at"] = inst.id(*relax.fill.stop_project);
        if (f.objective == "maxmin") {
            result["lp"] = lp_json(inst, relax.lp);
        } else {
            MinimaxLpSolution mm = lp_solve_minimax(inst);
            json sel;
            for (ProjectIndex p = 0; p < inst.num_projects(); ++p)
                sel[inst.id(p)] = rat_to_string(mm.selection[p]);
            result["lp"] = json{{"objective", rat_to_string(mm.objective)},
                                {"selection", std::move(sel)}};
        }
        if (f.certify) {
            BnbOptions opts;
            opts.node_cap = f.caps.bnb_node_cap;
            SolveResult exact = branch_and_bound_solve(inst, false, opts);
            auto cert = additive_bound_certificate(
                inst, relax.fill.selected, exact.value);
            report["certificate"] = certificate_json(inst, cert);
            result["exact_value"] = objective_value(f, inst, exact.value);
            result["matches_exact"] = relax.value == exact.value;
        }
    } else {
        throw Error("unknown method: " + f.method);
    }

    if (!f.no_timings) result["wall_ms"] = elapsed_ms(start);
    report["result"] = std::move(result);
    emit(report, f.out_format, f.out_file,
         f.out_format == "text" ? solve_text : csv_projection);
    return 0;
}

//----------------------------------------------------------------------
// info
//----------------------------------------------------------------------

std::string info_text(const json& r) {
    std::ostringstream out;
    const json& d = r["dataset"];
    const json& a = r["analysis"];
    out << "dataset          " << d["name"].get<std::string>() << "\n";
    out << "projects         " << d["num_projects"] << "\n";
    out << "voters           " << d["num_voters"] << "\n";
    out << "distinct votes   " << d["num_distinct_votes"] << "\n";
    out << "budget           " << d["budget"] << "\n";
    out << "cost gcd         " << a["cost_gcd"] << "\n";
    out << "scalable limit   " << a["scalable_limit"] << "\n";
    out << "min fill         " << a["min_fill"] << "\n";
    out << "max fill         " << a["max_fill"] << "\n";
    out << "max vote size    " << a["max_vote_size"] << "\n";
    out << "hcbp             " << (a["hcbp"].get<bool>() ? "yes" : "no") << "\n";
    return out.str();
}

int cmd_info(const InputFlags& in, const std::string& out_format,
             const std::string& out_file) {
    DatasetMeta meta;
    Instance inst = load_instance(in, &meta);

    FillSizeRange range = fill_size_range(inst);
    ScaledInstance scaled = scale_down(inst);

    json analysis{{"cost_gcd", scaled.factor},
                  {"hcbp", hcbp_check(inst)},
                  {"max_fill", range.max_fill},
                  {"max_vote_size", max_vote_size(inst)},
                  {"min_fill", range.min_fill},
                  {"scalable_limit", scalable_limit(inst)}};
    if (!inst.warnings().empty()) analysis["warnings"] = inst.warnings();

    json report{{"analysis", std::move(analysis)},
                {"command", "info"},
                {"dataset", meta_json(meta)}};
    emit(report, out_format, out_file,
         out_format == "text" ? info_text : csv_projection);
    return 0;
}

//----------------------------------------------------------------------
// axioms
//----------------------------------------------------------------------

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "splitting-monotonicity", "merging-monotonicity",
        "discount-monotonicity",  "limit-monotonicity",
        "strong-exhaustiveness",  "weak-exhaustiveness",
        "narrow-top",             "clone-independence",
        "maximal-coverage"};
    return names;
}

std::string axioms_text(const json& r) {
    std::ostringstream out;
    for (const auto& rep : r["reports"]) {
        out << rep["axiom"].get<std::string>() << ": "
            << rep["verdict"].get<std::string>() << "\n";
        if (rep.contains("witness"))
            out << "  witness: "
                << rep["witness"]["description"].get<std::string>() << "\n";
        for (const auto& note : rep.value("notes", json::array()))
            out << "  note: " << note.get<std::string>() << "\n";
    }
    return out.str();
}

int cmd_axioms(const InputFlags& in, const std::string& rule_name,
               const std::string& axiom_filter, const std::string& out_format,
               const std::string& out_file) {
    DatasetMeta meta;
    Instance inst = load_instance(in, &meta);
    Rule rule = rule_name == "utilitarian" ? Rule::Utilitarian : Rule::MpbBrute;

    if (!axiom_filter.empty()) {
        const auto& names = axiom_names();
        if (std::find(names.begin(), names.end(), axiom_filter) == names.end())
            throw Error("unknown axiom: " + axiom_filter);
    }

    std::vector<AxiomReport> reports = audit(inst, rule);
    json arr = json::array();
    for (const AxiomReport& rep : reports) {
        if (!axiom_filter.empty() && rep.axiom != axiom_filter) continue;
        json jr{{"axiom", rep.axiom}, {"verdict", verdict_name(rep.verdict)}};
        if (!rep.notes.empty()) jr["notes"] = rep.notes;
        if (rep.witness) {
            json w{{"description", rep.witness->description}};
            if (!rep.witness->detail.empty()) w["detail"] = rep.witness->detail;
            if (rep.witness->transformed)
                w["transformed_instance"] =
                    native_json(*rep.witness->transformed);
            jr["witness"] = std::move(w);
        }
        arr.push_back(std::move(jr));
    }
    json report{{"command", "axioms"},
                {"dataset", meta_json(meta)},
                {"reports", std::move(arr)},
                {"rule", rule_name}};
    emit(report, out_format, out_file,
         out_format == "text" ? axioms_text : csv_projection);
    return 0;
}

//----------------------------------------------------------------------
// bench
//----------------------------------------------------------------------

struct BenchFlags {
    std::string dir;
    bool synthetic = false;
    std::size_t gen_count = 20;
    GenParams gen;
    int rescale_pow10 = 0;
    std::string out_format = "json";
    std::string out_file;
    bool no_timings = false;
    Caps caps;
};

std::string bench_csv(const json& r) {
    std::string s =
        "name,projects,voters,distinct,budget,exact_value,relax_value,match,"
        "certificate_holds,error\n";
    for (const auto& row : r["rows"]) {
        if (row.contains("error")) {
            s += row["name"].get<std::string>() + ",,,,,,,,," +
                 row["error"].get<std::string>() + "\n";
            continue;
        }
        s += row["name"].get<std::string>() + "," +
             row["projects"].dump() + "," + row["voters"].dump() + "," +
             row["distinct"].dump() + "," + row["budget"].dump() + "," +
             row["exact_value"].dump() + "," + row["relax_value"].dump() +
             "," + (row["match"].get<bool>() ? "yes" : "no") + "," +
             (row["certificate_holds"].get<bool>() ? "yes" : "no") + ",\n";
    }
    return s;
}

std::string bench_text(const json& r) {
    std::ostringstream out;
    for (const auto& row : r["rows"]) {
        out << row["name"].get<std::string>() << ": ";
        if (row.contains("error")) {
            out << "ERROR " << row["error"].get<std::string>() << "\n";
            continue;
        }
        out << "exact=" << row["exact_value"]
            << " relax=" << row["relax_value"]
            << " match=" << (row["match"].get<bool>() ? "yes" : "no")
            << " certificate="
            << (row["certificate_holds"].get<bool>() ? "holds" : "FAILS")
            << "\n";
    }
    const json& s = r["summary"];
    out << "datasets=" << s["datasets"] << " solved=" << s["solved"]
        << " match_rate=" << s["match_rate"].get<std::string>()
        << " certificate_rate=" << s["certificate_rate"].get<std::string>()
        << "\n";
    return out.str();
}

std::string rate_string(std::size_t hits, std::size_t total) {
    if (total == 0) return "n/a";
    return std::to_string(hits) + "/" + std::to_string(total);
}

int cmd_bench(const BenchFlags& f) {
    struct Item {
        std::string name;
        std::optional<Instance> inst;
        std::string error;
    };
    std::vector<Item> items;

    if (f.synthetic) {
        for (std::size_t i = 0; i < f.gen_count; ++i) {
            GenParams p = f.gen;
            p.seed = f.gen.seed + i;
            Item item;
            item.name = "synthetic-" + std::to_string(p.seed);
            try {
                item.inst = generate(p);
            } catch (const std::exception& e) {
                item.error = e.what();
            }
            items.push_back(std::move(item));
        }
    } else {
        std::vector<std::filesystem::path> files;
        for (const auto& entry :
             std::filesystem::directory_iterator(f.dir)) {
            if (!entry.is_regular_file()) continue;
            std::string ext = entry.path().extension().string();
            if (ext == ".json" || ext == ".pb") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            Item item;
            item.name = path.filename().string();
            try {
                InputFlags in;
                in.path = path.string();
                in.rescale_pow10 = f.rescale_pow10;
                item.inst = load_instance(in, nullptr);
            } catch (const std::exception& e) {
                item.error = e.what();
            }
            items.push_back(std::move(item));
        }
    }

    json rows = json::array();
    std::size_t solved = 0, matches = 0, certs = 0;
    for (const Item& item : items) {
        json row{{"name", item.name}};
        if (!item.inst) {
            row["error"] = item.error;
            rows.push_back(std::move(row));
            continue;
        }
        const Instance& inst = *item.inst;
        try {
            row["projects"] = inst.num_projects();
            row["voters"] = inst.num_voters();
            row["distinct"] = distinct_profile(inst).size();
            row["budget"] = inst.budget();

            auto t0 = std::chrono::steady_clock::now();
            BnbOptions opts;
            opts.node_cap = f.caps.bnb_node_cap;
            SolveResult exact = branch_and_bound_solve(inst, false, opts);
            double exact_ms = elapsed_ms(t0);

            auto t1 = std::chrono::steady_clock::now();
            OrderedRelaxResult relax = ordered_relax(inst);
            double relax_ms = elapsed_ms(t1);

            auto cert = additive_bound_certificate(
                inst, relax.fill.selected, exact.value);

            row["exact_value"] = exact.value;
            row["relax_value"] = relax.value;
            row["match"] = exact.value == relax.value;
            row["certificate_holds"] = cert.holds;
            if (cert.ratio) row["ratio"] = rat_to_string(*cert.ratio);
            if (!f.no_timings) {
                row["exact_wall_ms"] = exact_ms;
                row["relax_wall_ms"] = relax_ms;
            }
            ++solved;
            if (exact.value == relax.value) ++matches;
            if (cert.holds) ++certs;
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }
        rows.push_back(std::move(row));
    }

    json report{{"command", "bench"},
                {"rows", std::move(rows)},
                {"summary",
                 json{{"certificate_rate", rate_string(certs, solved)},
                      {"datasets", items.size()},
                      {"match_rate", rate_string(matches, solved)},
                      {"solved", solved}}}};
    emit(report, f.out_format, f.out_file,
         f.out_format == "text" ? bench_text
         : f.out_format == "csv" ? bench_csv
                                 : csv_projection);
    return 0;
}

//----------------------------------------------------------------------
// wiring
//----------------------------------------------------------------------

void add_input_flags(CLI::App* cmd, InputFlags& in, bool with_budget) {
    cmd->add_option("--input", in.path, "dataset file")->required();
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"auto", "pabulib", "native"}))
        ->capture_default_str();
    cmd->add_option("--rescale-pow10", in.rescale_pow10,
                    "multiply monetary values by 10^k to clear decimals "
                    "(pabulib only)")
        ->check(CLI::Range(0, 12));
    if (with_budget)
        cmd->add_option_function<Cost>(
               "--budget",
               [&in](const Cost& b) { in.budget_override = b; },
               "override the instance budget")
            ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, std::string& out_format,
                      std::string& out_file) {
    cmd->add_option("--out", out_format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out-file", out_file, "write the report here instead "
                                            "of stdout");
}

void add_cap_flags(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--brute-max-projects", caps.brute_max_projects,
                    "exhaustive-solver project cap")
        ->capture_default_str();
    cmd->add_option("--dp-max-states", caps.dp_max_states,
                    "dynamic-program state cap")
        ->capture_default_str();
    cmd->add_option("--bnb-node-cap", caps.bnb_node_cap,
                    "branch-and-bound node cap")
        ->capture_default_str();
    cmd->add_option("--all-optimal-cap", caps.all_optimal_cap,
                    "stored optimal-set cap")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxmin participatory budgeting toolkit"};
    app.require_subcommand(1);

    SolveFlags sf;
    BenchFlags bf;
    InputFlags info_in, ax_in;
    std::string info_out_format = "json", info_out_file;
    std::string ax_out_format = "json", ax_out_file;
    std::string ax_rule = "mpb", ax_filter;

    try {
        sf.caps = caps_from_env();
        bf.caps = sf.caps;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    add_input_flags(solve, sf.input, true);
    solve->add_option("--method", sf.method, "solver")
        ->check(CLI::IsMember({"brute", "dp", "bnb", "ordered-relax"}))
        ->capture_default_str();
    solve->add_option("--objective", sf.objective, "reported objective")
        ->check(CLI::IsMember({"maxmin", "minimax-disutility"}))
        ->capture_default_str();
    solve->add_flag("--all-optimal", sf.all_optimal,
                    "enumerate the full optimal family (brute and bnb)");
    solve->add_flag("--certify", sf.certify,
                    "with ordered-relax: co-run the exact solver and attach "
                    "the additive bound certificate");
    solve->add_flag("--no-timings", sf.no_timings,
                    "omit wall-clock fields for byte-stable reports");
    add_output_flags(solve, sf.out_format, sf.out_file);
    add_cap_flags(solve, sf.caps);

    CLI::App* info = app.add_subcommand("info", "dataset facts and "
                                                "order-fill analysis");
    add_input_flags(info, info_in, true);
    add_output_flags(info, info_out_format, info_out_file);

    CLI::App* axioms = app.add_subcommand("axioms", "run the axiom audit");
    add_input_flags(axioms, ax_in, true);
    axioms->add_option("--rule", ax_rule, "rule to audit")
        ->check(CLI::IsMember({"mpb", "utilitarian"}))
        ->capture_default_str();
    axioms->add_option("--axiom", ax_filter, "only report this axiom");
    add_output_flags(axioms, ax_out_format, ax_out_file);

    CLI::App* bench = app.add_subcommand(
        "bench", "exact-versus-relaxation table over many datasets");
    auto* dir_opt =
        bench->add_option("--dir", bf.dir, "directory of .json/.pb datasets");
    auto* syn_opt = bench->add_flag("--synthetic", bf.synthetic,
                                    "generate instances instead of reading "
                                    "a directory");
    dir_opt->excludes(syn_opt);
    bench->add_option("--count", bf.gen_count, "synthetic instance count")
        ->capture_default_str();
    bench->add_option("--gen-projects", bf.gen.num_projects)
        ->capture_default_str();
    bench->add_option("--gen-voters", bf.gen.num_voters)
        ->capture_default_str();
    bench->add_option("--gen-distinct", bf.gen.num_distinct)
        ->capture_default_str();
    bench->add_option("--gen-cost-min", bf.gen.cost_min)
        ->capture_default_str();
    bench->add_option("--gen-cost-max", bf.gen.cost_max)
        ->capture_default_str();
    bench->add_option("--gen-budget-fraction", bf.gen.budget_fraction)
        ->capture_default_str();
    bench->add_option("--gen-max-vote-size", bf.gen.max_vote_size)
        ->capture_default_str();
    bench->add_flag("--gen-hcbp", bf.gen.require_hcbp,
                    "resample until the high-cardinality budget property "
                    "holds");
    bench->add_option("--seed", bf.gen.seed, "base seed; instance k uses "
                                             "seed+k")
        ->capture_default_str();
    bench->add_option("--rescale-pow10", bf.rescale_pow10,
                      "decimal rescale for pabulib files")
        ->check(CLI::Range(0, 12));
    bench->add_flag("--no-timings", bf.no_timings,
                    "omit wall-clock fields for byte-stable reports");
    add_output_flags(bench, bf.out_format, bf.out_file);
    add_cap_flags(bench, bf.caps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(sf);
        if (info->parsed())
            return cmd_info(info_in, info_out_format, info_out_file);
        if (axioms->parsed())
            return cmd_axioms(ax_in, ax_rule, ax_filter, ax_out_format,
                              ax_out_file);
        if (bench->parsed()) {
            if (!bf.synthetic && bf.dir.empty())
                throw Error("bench needs --dir or --synthetic");
            return cmd_bench(bf);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
