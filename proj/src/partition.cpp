#include "kregret/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kregret {

namespace {

struct SortedDim {
    std::vector<int> ids;      // point ids in ascending coordinate order
    std::vector<double> coord; // coordinates in the same order
};

// Ascending by coordinate, ties by id, so every strategy is deterministic.
SortedDim sort_dimension(const Dataset& ds, int dim) {
    const auto n = ds.size();
    SortedDim s;
    s.ids.resize(n);
    for (std::size_t r = 0; r < n; ++r) s.ids[r] = static_cast<int>(r);
    std::sort(s.ids.begin(), s.ids.end(), [&](int a, int b) {
        const double ca = ds.point(a).coords[static_cast<std::size_t>(dim)];
        const double cb = ds.point(b).coords[static_cast<std::size_t>(dim)];
        if (ca != cb) return ca < cb;
        return a < b;
    });
    s.coord.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        s.coord[r] = ds.point(s.ids[r]).coords[static_cast<std::size_t>(dim)];
    }
    return s;
}

void check_common(const Dataset& ds, int t, int dim) {
    if (t < 1) {
        throw std::invalid_argument("partition: interval count t must be at least 1");
    }
    if (dim < 0 || dim >= ds.dims()) {
        throw std::invalid_argument("partition: dimension index out of range");
    }
}

// Fills point_interval and the coordinates of empty trailing intervals.
IntervalSet finish(const Dataset& ds, int dim, std::vector<Interval> intervals,
                   const SortedDim& s, std::int64_t delta_used) {
    IntervalSet out;
    out.dim = dim;
    out.delta_used = delta_used;
    out.point_interval.assign(ds.size(), -1);
    double last_hi = s.coord.empty() ? 0.0 : s.coord.front();
    for (std::size_t j = 0; j < intervals.size(); ++j) {
        auto& iv = intervals[j];
        if (iv.empty()) {
            iv.lo_coord = iv.hi_coord = last_hi;
            continue;
        }
        last_hi = iv.hi_coord;
        for (std::int64_t r = iv.lo_idx; r <= iv.hi_idx; ++r) {
            out.point_interval[static_cast<std::size_t>(s.ids[static_cast<std::size_t>(r)])] =
                static_cast<int>(j);
        }
    }
    out.intervals = std::move(intervals);
    return out;
}

IntervalSet adaptive_breakpoints(const Dataset& ds, int t, int dim, std::int64_t inc,
                                 double width_cap) {
    check_common(ds, t, dim);
    if (inc < 1) {
        throw std::invalid_argument("find_breakpoints: inc must be at least 1");
    }
    const SortedDim s = sort_dimension(ds, dim);
    const auto n = static_cast<std::int64_t>(ds.size());
    const std::int64_t per_target = (n + t - 1) / t;  // ceil(n/t)

    std::vector<Interval> intervals;
    std::int64_t delta = 0;
    for (;;) {
        intervals.clear();
        std::int64_t lo = 0;
        for (int j = 0; j < t; ++j) {
            if (lo >= n) {
                intervals.push_back(Interval{0.0, 0.0, lo, lo - 1});
                continue;
            }
            const std::int64_t hi_cap = std::min(lo + per_target - 1 + delta, n - 1);
            // Largest hi in [lo, hi_cap] with coord[hi] - coord[lo] <= cap.
            // The sorted coordinates make the predicate monotone in hi.
            std::int64_t lo_s = lo, hi_s = hi_cap;
            const double base = s.coord[static_cast<std::size_t>(lo)];
            while (lo_s < hi_s) {
                const std::int64_t mid = lo_s + (hi_s - lo_s + 1) / 2;
                if (s.coord[static_cast<std::size_t>(mid)] - base <= width_cap) {
                    lo_s = mid;
                } else {
                    hi_s = mid - 1;
                }
            }
            const std::int64_t hi = lo_s;
            intervals.push_back(Interval{base, s.coord[static_cast<std::size_t>(hi)], lo, hi});
            lo = hi + 1;
        }
        if (lo >= n) break;
        if (delta >= n) {
            // Once delta reaches n the index cap no longer binds and further
            // passes are identical, so coverage is unreachable.
            throw std::runtime_error("find_breakpoints: intervals cannot cover the data");
        }
        delta += inc;
    }
    return finish(ds, dim, std::move(intervals), s, delta);
}

IntervalSet equiwidth_impl(const Dataset& ds, int t, int dim, double domain_lo) {
    check_common(ds, t, dim);
    const SortedDim s = sort_dimension(ds, dim);
    const auto n = static_cast<std::int64_t>(ds.size());
    const double width = (ds.dim_max(dim) - domain_lo) / t;

    // Interval of a coordinate, 0-based; the upper edge of each cell is
    // closed, so a coordinate exactly on a breakpoint falls in the lower cell.
    const auto cell_of = [&](double c) {
        if (width <= 0.0) return 0;
        const auto cell = static_cast<std::int64_t>(std::ceil((c - domain_lo) / width));
        return static_cast<int>(std::clamp<std::int64_t>(cell, 1, t) - 1);
    };

    std::vector<Interval> intervals(static_cast<std::size_t>(t));
    for (auto& iv : intervals) iv = Interval{0.0, 0.0, 0, -1};
    std::int64_t r = 0;
    while (r < n) {
        const int cell = cell_of(s.coord[static_cast<std::size_t>(r)]);
        std::int64_t end = r;
        while (end + 1 < n && cell_of(s.coord[static_cast<std::size_t>(end + 1)]) == cell) {
            ++end;
        }
        intervals[static_cast<std::size_t>(cell)] =
            Interval{s.coord[static_cast<std::size_t>(r)],
                     s.coord[static_cast<std::size_t>(end)], r, end};
        r = end + 1;
    }
    return finish(ds, dim, std::move(intervals), s, 0);
}

IntervalSet minwidth_impl(const Dataset& ds, int t, int dim, double domain_lo) {
    check_common(ds, t, dim);
    const SortedDim s = sort_dimension(ds, dim);
    const auto n = static_cast<std::int64_t>(ds.size());

    // True iff greedy intervals of the given width cover all points using at
    // most t of them. Each interval starts at the first uncovered coordinate.
    const auto feasible = [&](double width) {
        std::int64_t used = 0;
        std::int64_t r = 0;
        while (r < n) {
            if (++used > t) return false;
            const double start = s.coord[static_cast<std::size_t>(r)];
            while (r < n && s.coord[static_cast<std::size_t>(r)] - start <= width) ++r;
        }
        return true;
    };

    double lo = 0.0;
    double hi = std::max(ds.dim_max(dim) - domain_lo, s.coord.back() - s.coord.front());
    if (feasible(0.0)) {
        hi = 0.0;
    } else {
        while (hi - lo > 1e-9) {
            const double mid = lo + (hi - lo) / 2.0;
            if (feasible(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    const double width = hi;

    std::vector<Interval> intervals;
    std::int64_t r = 0;
    while (r < n) {
        const std::int64_t begin = r;
        const double start = s.coord[static_cast<std::size_t>(r)];
        while (r < n && s.coord[static_cast<std::size_t>(r)] - start <= width) ++r;
        intervals.push_back(Interval{start, s.coord[static_cast<std::size_t>(r - 1)], begin, r - 1});
    }
    while (static_cast<int>(intervals.size()) < t) {
        intervals.push_back(Interval{0.0, 0.0, n, n - 1});
    }
    return finish(ds, dim, std::move(intervals), s, 0);
}

void require_normalized(const Dataset& ds, const char* what) {
    if (!ds.normalized()) {
        throw std::invalid_argument(std::string(what) + ": dataset must be normalized");
    }
}

}  // namespace

IntervalSet find_breakpoints(const Dataset& ds, int t, int i, std::int64_t inc) {
    require_normalized(ds, "find_breakpoints");
    check_common(ds, t, i);
    return adaptive_breakpoints(ds, t, i, inc, (ds.dim_max(i) - 1.0) / t);
}

IntervalSet find_breakpoints_raw(const Dataset& ds, int t, int i, std::int64_t inc) {
    check_common(ds, t, i);
    return adaptive_breakpoints(ds, t, i, inc, (ds.dim_max(i) - ds.dim_min(i)) / t);
}

IntervalSet equiwidth_breakpoints(const Dataset& ds, int t, int i) {
    return equiwidth_impl(ds, t, i, 1.0);
}

IntervalSet minwidth_breakpoints(const Dataset& ds, int t, int i) {
    return minwidth_impl(ds, t, i, 1.0);
}

IntervalSet make_intervals(const Dataset& ds, int t, int i, std::int64_t inc,
                           PartitionStrategy strategy, bool raw_domain) {
    switch (strategy) {
        case PartitionStrategy::Adaptive:
            return raw_domain ? find_breakpoints_raw(ds, t, i, inc)
                              : find_breakpoints(ds, t, i, inc);
        case PartitionStrategy::EquiWidth:
            return equiwidth_impl(ds, t, i, raw_domain ? ds.dim_min(i) : 1.0);
        case PartitionStrategy::MinWidth:
            return minwidth_impl(ds, t, i, raw_domain ? ds.dim_min(i) : 1.0);
    }
    throw std::logic_error("make_intervals: unknown strategy");
}

}  // namespace kregret
