#include "maxminpb/ingest.hpp"

#include "maxminpb/ordered_fill.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace maxminpb {

DatasetMeta describe(const Instance& inst, std::string name,
                     std::string source) {
    DatasetMeta meta;
    meta.name = std::move(name);
    meta.source = std::move(source);
    meta.budget = inst.budget();
    meta.num_projects = inst.num_projects();
    meta.num_voters = inst.num_voters();
    meta.num_distinct_votes = distinct_profile(inst).size();
    meta.scalable_limit = scalable_limit(inst);
    return meta;
}

//----------------------------------------------------------------------
// pabulib
//----------------------------------------------------------------------

namespace {

std::vector<std::string> split_on(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::int64_t digits_to_int(const std::string& s, std::size_t line_no,
                           const std::string& what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(what + " out of range: " + s, line_no);
    return v;
}

// Money field: a digit run with at most rescale_pow10 decimal places.
// The value comes back multiplied by 10^rescale_pow10.
Cost parse_money(const std::string& raw, int rescale_pow10,
                 std::size_t line_no, const std::string& what) {
    std::string s = trim(raw);
    std::string whole = s, frac;
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        whole = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if (!all_digits(whole) || (dot != std::string::npos && !all_digits(frac)))
        throw ParseError("malformed " + what + ": " + s, line_no);
    if (static_cast<int>(frac.size()) > rescale_pow10)
        throw ParseError(what + " " + s + " has more decimal places than the "
                                          "requested rescale allows",
                         line_no);
    std::int64_t value = digits_to_int(whole, line_no, what);
    for (int k = 0; k < rescale_pow10; ++k) {
        char digit = static_cast<std::size_t>(k) < frac.size() ? frac[k] : '0';
        if (value > (std::numeric_limits<std::int64_t>::max() -
                     (digit - '0')) / 10)
            throw ParseError(what + " out of range after rescaling: " + s,
                             line_no);
        value = value * 10 + (digit - '0');
    }
    return value;
}

// column positions named by a header row; -1 when absent
struct Columns {
    int primary = -1;
    int secondary = -1;
};

Columns find_columns(const std::vector<std::string>& header,
                     const std::string& a, const std::string& b) {
    Columns c;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string name = trim(header[i]);
        if (name == a) c.primary = static_cast<int>(i);
        if (name == b) c.secondary = static_cast<int>(i);
    }
    return c;
}

} // namespace

Instance parse_pabulib(const std::string& text, const PabulibOptions& opts,
                       std::map<std::string, std::string>* meta_out) {
    enum class Section { None, Meta, Projects, Votes };
    Section section = Section::None;
    bool header_pending = false;
    Columns cols;

    std::map<std::string, std::string> meta;
    std::vector<Project> projects;
    std::set<std::string> project_ids;
    std::vector<std::vector<std::string>> votes;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = nl == std::string::npos
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        if (line == "META" || line == "PROJECTS" || line == "VOTES") {
            section = line == "META"      ? Section::Meta
                      : line == "PROJECTS" ? Section::Projects
                                           : Section::Votes;
            header_pending = section != Section::Meta;
            continue;
        }
        if (section == Section::None)
            throw ParseError("expected a section header (META, PROJECTS or "
                             "VOTES), got: " + line,
                             line_no);

        std::vector<std::string> fields = split_on(line, ';');

        if (section == Section::Meta) {
            if (fields.size() < 2)
                throw ParseError("meta row needs key;value: " + line, line_no);
            std::string key = trim(fields[0]);
            std::string value = trim(fields[1]);
            if (meta.count(key))
                throw ParseError("duplicate meta key: " + key, line_no);
            if (key == "vote_type" && value != "approval")
                throw ParseError("unsupported vote_type: " + value +
                                     " (only approval votes are handled)",
                                 line_no);
            meta[key] = value;
            continue;
        }

        if (header_pending) {
            cols = section == Section::Projects
                       ? find_columns(fields, "project_id", "cost")
                       : find_columns(fields, "voter_id", "vote");
            if (cols.primary < 0 || cols.secondary < 0)
                throw ParseError(
                    section == Section::Projects
                        ? "PROJECTS header must name project_id and cost"
                        : "VOTES header must name voter_id and vote",
                    line_no);
            header_pending = false;
            continue;
        }

        int needed = std::max(cols.primary, cols.secondary);
        if (static_cast<int>(fields.size()) <= needed)
            throw ParseError("row has too few columns: " + line, line_no);

        if (section == Section::Projects) {
            std::string id = trim(fields[cols.primary]);
            if (id.empty())
                throw ParseError("empty project id", line_no);
            if (!project_ids.insert(id).second)
                throw ParseError("duplicate project id: " + id, line_no);
            Cost cost = parse_money(fields[cols.secondary], opts.rescale_pow10,
                                    line_no, "cost");
            projects.push_back(Project{std::move(id), cost});
        } else {
            std::string raw = trim(fields[cols.secondary]);
            std::vector<std::string> vote;
            if (!raw.empty()) {
                for (const std::string& tok : split_on(raw, ',')) {
                    std::string id = trim(tok);
                    if (id.empty())
                        throw ParseError("empty entry in vote list: " + raw,
                                         line_no);
                    if (!project_ids.count(id))
                        throw ParseError("vote names unknown project: " + id,
                                         line_no);
                    if (std::find(vote.begin(), vote.end(), id) != vote.end())
                        throw ParseError("vote lists project twice: " + id,
                                         line_no);
                    vote.push_back(std::move(id));
                }
            }
            votes.push_back(std::move(vote));
        }
    }

    auto budget_it = meta.find("budget");
    if (budget_it == meta.end())
        throw ParseError("META is missing the budget key");
    Cost budget =
        parse_money(budget_it->second, opts.rescale_pow10, 0, "budget");

    if (meta_out) *meta_out = std::move(meta);
    return Instance::create(std::move(projects), budget, votes);
}

//----------------------------------------------------------------------
// native format
//----------------------------------------------------------------------

namespace {

using nlohmann::json;

std::int64_t strict_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max()))
        throw ParseError(std::string(what) + " is out of range");
    return j.get<std::int64_t>();
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) ok = true;
        if (!ok)
            throw ParseError(std::string("unknown key in ") + where + ": " +
                             item.key());
    }
}

} // namespace

Instance parse_native(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("top level must be an object");
    reject_unknown_keys(doc, {"budget", "projects", "votes"}, "document");
    if (!doc.contains("budget") || !doc.contains("projects") ||
        !doc.contains("votes"))
        throw ParseError("document needs budget, projects and votes");

    Cost budget = strict_int(doc["budget"], "budget");

    if (!doc["projects"].is_array())
        throw ParseError("projects must be an array");
    std::vector<Project> projects;
    for (const json& pj : doc["projects"]) {
        if (!pj.is_object())
            throw ParseError("each project must be an object");
        reject_unknown_keys(pj, {"id", "cost"}, "project");
        if (!pj.contains("id") || !pj.contains("cost"))
            throw ParseError("each project needs id and cost");
        if (!pj["id"].is_string())
            throw ParseError("project id must be a string");
        projects.push_back(Project{pj["id"].get<std::string>(),
                                   strict_int(pj["cost"], "cost")});
    }

    if (!doc["votes"].is_array())
        throw ParseError("votes must be an array");
    std::vector<std::vector<std::string>> votes;
    for (const json& vj : doc["votes"]) {
        if (!vj.is_array())
            throw ParseError("each vote must be an array of project ids");
        std::vector<std::string> vote;
        for (const json& e : vj) {
            if (!e.is_string())
                throw ParseError("vote entries must be project id strings");
            vote.push_back(e.get<std::string>());
        }
        votes.push_back(std::move(vote));
    }
    return Instance::create(std::move(projects), budget, votes);
}

std::string write_native(const Instance& inst) {
    // json objects keep keys sorted, which is exactly the canonical layout
    json doc;
    doc["budget"] = inst.budget();
    json projects = json::array();
    for (const Project& p : inst.projects())
        projects.push_back(json{{"cost", p.cost}, {"id", p.id}});
    doc["projects"] = std::move(projects);
    json votes = json::array();
    for (const auto& vote : inst.votes()) {
        json ids = json::array();
        for (ProjectIndex p : vote) ids.push_back(inst.id(p));
        votes.push_back(std::move(ids));
    }
    doc["votes"] = std::move(votes);
    return doc.dump(2) + "\n";
}

//----------------------------------------------------------------------
// generator
//----------------------------------------------------------------------

namespace {

// rejection sampling so the draw sequence depends only on the engine,
// never on a library's distribution implementation
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

std::string padded_id(std::size_t index1, int width) {
    std::string digits = std::to_string(index1);
    std::string id = "p";
    for (int k = static_cast<int>(digits.size()); k < width; ++k) id += '0';
    return id + digits;
}

// number of non-empty subsets of an m-set with size <= cap, saturated
std::uint64_t capped_subset_count(std::size_t m, std::size_t cap,
                                  std::uint64_t saturate) {
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;
    for (std::size_t k = 1; k <= cap; ++k) {
        binom = binom * (m - k + 1) / k;
        total += binom;
        if (total >= saturate) return saturate;
    }
    return static_cast<std::uint64_t>(total);
}

Instance generate_once(const GenParams& p, std::mt19937_64& rng) {
    const std::size_t m = p.num_projects;
    int width = static_cast<int>(std::to_string(m).size());

    std::vector<Project> projects;
    projects.reserve(m);
    Cost total = 0;
    const std::uint64_t span =
        static_cast<std::uint64_t>(p.cost_max - p.cost_min) + 1;
    for (std::size_t i = 0; i < m; ++i) {
        Cost c = p.cost_min + static_cast<Cost>(draw_below(rng, span));
        total += c;
        projects.push_back(Project{padded_id(i + 1, width), c});
    }
    Cost budget = std::max<Cost>(
        1, static_cast<Cost>(std::llround(p.budget_fraction *
                                          static_cast<double>(total))));

    const std::size_t cap =
        p.max_vote_size == 0 ? m : std::min(p.max_vote_size, m);
    std::set<std::vector<ProjectIndex>> seen;
    std::vector<std::vector<ProjectIndex>> distinct;
    std::vector<ProjectIndex> scratch(m);
    std::size_t attempts = 0;
    const std::size_t attempt_cap = 1000 * p.num_distinct + 1000;
    while (distinct.size() < p.num_distinct) {
        if (++attempts > attempt_cap)
            throw ResourceLimitError(
                "vote sampling failed to reach the distinct-vote count");
        std::size_t k = 1 + draw_below(rng, cap);
        for (std::size_t i = 0; i < m; ++i)
            scratch[i] = static_cast<ProjectIndex>(i);
        for (std::size_t i = 0; i < k; ++i)
            std::swap(scratch[i], scratch[i + draw_below(rng, m - i)]);
        std::vector<ProjectIndex> vote(scratch.begin(), scratch.begin() + k);
        std::sort(vote.begin(), vote.end());
        if (seen.insert(vote).second) distinct.push_back(std::move(vote));
    }

    // every distinct vote gets one voter, the rest land uniformly
    std::vector<std::size_t> mult(p.num_distinct, 1);
    for (std::size_t r = p.num_distinct; r < p.num_voters; ++r)
        ++mult[draw_below(rng, p.num_distinct)];

    std::vector<std::vector<ProjectIndex>> voters;
    voters.reserve(p.num_voters);
    for (std::size_t t = 0; t < p.num_distinct; ++t)
        for (std::size_t r = 0; r < mult[t]; ++r) voters.push_back(distinct[t]);

    return Instance::from_indices(std::move(projects), budget,
                                  std::move(voters));
}

} // namespace

Instance generate(const GenParams& p) {
    if (p.num_projects == 0 || p.num_voters == 0 || p.num_distinct == 0)
        throw std::invalid_argument(
            "generator needs at least one project, voter and distinct vote");
    if (p.num_distinct > p.num_voters)
        throw std::invalid_argument(
            "more distinct votes requested than voters exist");
    if (p.cost_min < 1 || p.cost_max < p.cost_min)
        throw std::invalid_argument("cost range must satisfy 1 <= min <= max");
    if (!(p.budget_fraction > 0.0) || p.budget_fraction > 1e6)
        throw std::invalid_argument("budget fraction must be positive");
    const std::size_t cap =
        p.max_vote_size == 0 ? p.num_projects
                             : std::min(p.max_vote_size, p.num_projects);
    std::uint64_t capacity =
        capped_subset_count(p.num_projects, cap, UINT64_MAX);
    if (p.num_distinct > capacity)
        throw std::invalid_argument(
            "only " + std::to_string(capacity) +
            " non-empty votes of the allowed size exist; cannot draw " +
            std::to_string(p.num_distinct) + " distinct ones");

    std::mt19937_64 rng(p.seed);
    if (!p.require_hcbp) return generate_once(p, rng);
    for (std::size_t attempt = 0; attempt <= p.hcbp_retries; ++attempt) {
        Instance inst = generate_once(p, rng);
        if (hcbp_check(inst)) return inst;
    }
    throw ResourceLimitError(
        "no generated instance satisfied the high-cardinality budget "
        "property within " +
        std::to_string(p.hcbp_retries) + " retries");
}

} // namespace maxminpb
