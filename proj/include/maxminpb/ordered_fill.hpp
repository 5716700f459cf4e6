#ifndef MAXMINPB_ORDERED_FILL_HPP
#define MAXMINPB_ORDERED_FILL_HPP

#include "maxminpb/core.hpp"

#include <optional>
#include <vector>

namespace maxminpb {

// Result of walking a total order over the projects and selecting greedily
// until the first project that does not fit. The walk stops permanently at
// that project even if later, cheaper projects would still fit, so the
// selection need not be maximal.
struct OrderedFillResult {
    Outcome selected;
    std::vector<ProjectIndex> order_used;      // the full order walked
    std::optional<ProjectIndex> stop_project;  // first non-fitting, if any
};

// `order` must be a permutation of all project indices.
OrderedFillResult ordered_fill(const Instance& inst,
                               const std::vector<ProjectIndex>& order);

// Extremes of the ordered-fill output cardinality over all total orders:
// descending-cost order gives the minimum (min_fill), ascending-cost order
// the maximum (max_fill). Cost ties break by project id, lexicographic.
struct FillSizeRange {
    std::size_t min_fill = 0; // |selection| under non-increasing cost
    std::size_t max_fill = 0; // |selection| under non-decreasing cost
};

FillSizeRange fill_size_range(const Instance& inst);

// Cost-sorted project orders used by fill_size_range; exposed because the
// sandwich tests and reports want the concrete selections too.
std::vector<ProjectIndex> order_by_cost_descending(const Instance& inst);
std::vector<ProjectIndex> order_by_cost_ascending(const Instance& inst);

// Largest approval-vote cardinality in the instance.
std::size_t max_vote_size(const Instance& inst);

// High-cardinality budget property: every ordered fill selects more
// projects than any single voter approves (min_fill > max_vote_size).
bool hcbp_check(const Instance& inst);

} // namespace maxminpb

#endif
