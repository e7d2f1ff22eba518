/**
 * @file partition.hpp
 * @brief Per-dimension interval construction for bucket-based selection.
 *
 * Three strategies are provided:
 *   - find_breakpoints: adaptive intervals holding close to ceil(n/t) points
 *     each, capped at width (max - 1) / t;
 *   - equiwidth_breakpoints: t fixed-width intervals spanning (1, max];
 *   - minwidth_breakpoints: greedy cover at the minimal feasible width,
 *     found by binary search, leaving gaps empty.
 *
 * Interval membership is by position in the dimension-sorted order (stable,
 * ties broken by point id), never by raw coordinate comparison, so a point
 * whose coordinate ties an interval boundary belongs to exactly one interval.
 */

#ifndef KREGRET_PARTITION_HPP
#define KREGRET_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "kregret/dataset.hpp"

namespace kregret {

/// One coordinate interval; empty iff lo_idx > hi_idx.
struct Interval {
    double lo_coord = 0.0;
    double hi_coord = 0.0;
    std::int64_t lo_idx = 0;  ///< first position in the dimension-sorted order
    std::int64_t hi_idx = -1; ///< last position (inclusive)

    [[nodiscard]] bool empty() const { return lo_idx > hi_idx; }
    [[nodiscard]] std::int64_t count() const { return empty() ? 0 : hi_idx - lo_idx + 1; }
};

/**
 * @brief t intervals over one dimension plus the point-to-interval assignment.
 *
 * Index ranges are contiguous, non-overlapping, and cover every point exactly
 * once; trailing empty intervals are kept so bucket grids stay full
 * cross-products. point_interval[id] gives the interval index of each point.
 */
struct IntervalSet {
    int dim = 0;
    std::vector<Interval> intervals;
    std::int64_t delta_used = 0;      ///< final slack value (adaptive strategy only)
    std::vector<int> point_interval;  ///< id -> interval index
};

enum class PartitionStrategy { Adaptive, EquiWidth, MinWidth };

/**
 * @brief Adaptive equal-count intervals with a hard width cap.
 *
 * Sorts dimension i ascending (ties by id). Starting with slack delta = 0,
 * each of the t intervals takes the largest run of at most
 * ceil(n/t) - 1 + delta further points whose span stays within
 * (dim_max(i) - 1) / t, located by binary search. If a pass fails to cover
 * all n points, delta grows by inc and the pass restarts. Always terminates
 * on normalized data.
 *
 * @throws std::invalid_argument if t < 1, inc < 1, i is out of range, or the
 *          dataset is not normalized.
 */
IntervalSet find_breakpoints(const Dataset& ds, int t, int i, std::int64_t inc);

/**
 * @brief Variant for datasets left in their raw domain.
 *
 * Identical procedure with the width cap (dim_max(i) - dim_min(i)) / t, for
 * callers that deliberately skip normalization.
 */
IntervalSet find_breakpoints_raw(const Dataset& ds, int t, int i, std::int64_t inc);

/**
 * @brief t equal-width intervals over (1, dim_max(i)].
 *
 * Points are assigned by coordinate with a closed upper edge: a coordinate
 * exactly on a breakpoint belongs to the lower interval. Recorded interval
 * coordinates are the extreme member coordinates.
 */
IntervalSet equiwidth_breakpoints(const Dataset& ds, int t, int i);

/**
 * @brief Greedy cover by at most t intervals of minimal common width.
 *
 * Binary-searches the smallest width (to 1e-9 absolute) such that intervals
 * of that width, each started at the first uncovered coordinate, cover all
 * points with at most t intervals. Unused intervals are left empty.
 */
IntervalSet minwidth_breakpoints(const Dataset& ds, int t, int i);

/// Dispatch helper used by the selectors.
IntervalSet make_intervals(const Dataset& ds, int t, int i, std::int64_t inc,
                           PartitionStrategy strategy, bool raw_domain);

}  // namespace kregret

#endif  // KREGRET_PARTITION_HPP
