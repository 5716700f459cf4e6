#ifndef MAXMINPB_INGEST_HPP
#define MAXMINPB_INGEST_HPP

#include "maxminpb/core.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace maxminpb {

// Summary row for reports; derived entirely from the parsed instance plus
// where it came from.
struct DatasetMeta {
    std::string name;
    Cost budget = 0;
    std::size_t num_projects = 0;
    std::size_t num_voters = 0;
    std::size_t num_distinct_votes = 0;
    Cost scalable_limit = 1;
    std::string source;
};

DatasetMeta describe(const Instance& inst, std::string name,
                     std::string source);

//----------------------------------------------------------------------
// pabulib-style files
//----------------------------------------------------------------------
//
// Layout: section header lines META, PROJECTS, VOTES. META rows are
// key;value and must include budget; a vote_type key, when present, must
// say approval. PROJECTS and VOTES start with a column-header row
// (project_id/cost resp. voter_id/vote; extra columns are ignored); the
// vote column is a comma-separated list of project ids. Votes naming
// unknown projects are an error, not dropped.

struct PabulibOptions {
    // Costs and the budget must be integers. Monetary values with k
    // decimal places are accepted only when rescale_pow10 >= k; every
    // value is then multiplied by 10^rescale_pow10.
    int rescale_pow10 = 0;
};

// Throws ParseError (with a line number) on malformed input. META
// key/values are returned through meta_out when given.
Instance parse_pabulib(const std::string& text,
                       const PabulibOptions& opts = {},
                       std::map<std::string, std::string>* meta_out = nullptr);

//----------------------------------------------------------------------
// native format
//----------------------------------------------------------------------
//
// Canonical JSON: {"budget": int, "projects": [{"cost": int, "id": str}],
// "votes": [[str]]} with alphabetically sorted keys, two-space indent and
// a trailing newline. parse(write(I)) == I and write(parse(t)) == t for
// canonical t.

Instance parse_native(const std::string& text);
std::string write_native(const Instance& inst);

//----------------------------------------------------------------------
// synthetic instances
//----------------------------------------------------------------------

struct GenParams {
    std::size_t num_projects = 8;
    std::size_t num_voters = 10;
    std::size_t num_distinct = 4;  // distinct votes; each used at least once
    Cost cost_min = 1;
    Cost cost_max = 20;
    double budget_fraction = 0.4;  // budget = round(fraction * total cost)
    std::size_t max_vote_size = 0; // 0 = unbounded
    bool require_hcbp = false;     // resample until hcbp_check passes
    std::size_t hcbp_retries = 200;
    std::uint64_t seed = 1;
};

// Deterministic in (params, seed): the engine is mt19937_64 and every
// bounded draw is rejection-sampled in-house, so no standard-library
// distribution differences can leak in. Project ids are zero-padded
// (p01, p02, ...) so input order equals lexicographic id order.
// Throws std::invalid_argument for unsatisfiable parameters (for example
// more distinct votes than non-empty approval sets exist) and
// ResourceLimitError when require_hcbp exhausts its retries.
Instance generate(const GenParams& params);

} // namespace maxminpb

#endif
