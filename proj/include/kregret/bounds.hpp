/**
 * @file bounds.hpp
 * @brief Closed-form regret-ratio bounds for the MinVar family.
 */

#ifndef KREGRET_BOUNDS_HPP
#define KREGRET_BOUNDS_HPP

#include <vector>

namespace kregret {

/// Bound values for one (k, d) pair.
struct BoundReport {
    int k = 0;
    int d = 0;
    int t = 0;
    double muf_upper = 0.0;
    std::vector<double> ces_upper;  ///< one entry per requested b, in request order
    double muf_lower_scale = 0.0;
};

/**
 * @brief ln(1 + 1/t) with t = floor((k-d+1)^(1/(d-1))).
 *
 * Worst-case regret ratio of a MinVar answer set over multiplicative
 * functions with non-negative weights summing to at most 1, on data
 * normalized into (1, 2].
 */
double muf_upper_bound(int k, int d);

/**
 * @brief (d-1)^(1/b) / (t + (d-1)^(1/b)) for CES families with shared b in (0, 1).
 *
 * Independent of b at d = 2.
 */
double ces_upper_bound(int k, int d, double b);

/**
 * @brief pi^2 / (32 (k+1)^2), k >= 1.
 *
 * Leading term of the asymptotic floor no size-k subset of the circle
 * construction can beat; finite-k checks apply a safety factor because the
 * higher-order terms and grid discretization both reduce the observable value.
 */
double muf_lower_bound_scale(int k);

/// All bounds for one (k, d) pair, with CES entries for each supplied b.
BoundReport bound_report(int k, int d, const std::vector<double>& bs);

}  // namespace kregret

#endif  // KREGRET_BOUNDS_HPP
