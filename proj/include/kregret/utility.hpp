/**
 * @file utility.hpp
 * @brief Utility-function families and the gain / regret / regret-ratio measures.
 *
 * Three families are supported:
 *   - multiplicative:   f(p) = prod_j c_j^{alpha_j},  alpha_j >= 0, sum alpha <= 1
 *   - Cobb-Douglas:     f(p) = A * prod_j c_j^{alpha_j},  A > 0 (no sum constraint)
 *   - CES (simplified): f(p) = A * (sum_j alpha_j c_j^b)^{1/b},  0 < b < 1
 *
 * Product forms are evaluated in log space (sum of alpha_j * ln c_j, then
 * exponentiate) so that high-dimensional products do not underflow.
 */

#ifndef KREGRET_UTILITY_HPP
#define KREGRET_UTILITY_HPP

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "kregret/dataset.hpp"

namespace kregret {

enum class FunctionKind { Multiplicative, CobbDouglas, Ces };

/**
 * @brief Tagged utility function with per-dimension weights.
 *
 * Construct through the factories, which validate the family constraints.
 */
struct UtilityFunction {
    FunctionKind kind = FunctionKind::Multiplicative;
    std::vector<double> alpha;
    double scale = 1.0;     ///< A; fixed at 1 for the multiplicative family
    double exponent = 0.0;  ///< b; CES only

    /// Multiplicative function: requires alpha_j >= 0 and sum(alpha) <= 1.
    static UtilityFunction multiplicative(std::vector<double> alpha);
    /// Cobb-Douglas: requires alpha_j >= 0 and A > 0.
    static UtilityFunction cobb_douglas(std::vector<double> alpha, double A = 1.0);
    /// Simplified CES: requires alpha_j >= 0, 0 < b < 1, A > 0.
    static UtilityFunction ces(std::vector<double> alpha, double b, double A = 1.0);

    [[nodiscard]] int dims() const { return static_cast<int>(alpha.size()); }
};

/**
 * @brief Worst case over a finite function family.
 *
 * argmax_function is the lowest index achieving max_ratio; gain_subset and
 * gain_dataset are the gains at that function.
 */
struct RegretReport {
    std::vector<double> per_function_ratio;
    double max_ratio = 0.0;
    std::size_t argmax_function = 0;
    double gain_subset = 0.0;
    double gain_dataset = 0.0;
};

/**
 * @brief Utility of a single point.
 * @throws std::invalid_argument on dimension mismatch or non-positive coordinate.
 */
double eval(const UtilityFunction& f, const Point& p);

/// Maximum utility over a non-empty set of points.
double gain(std::span<const Point> points, const UtilityFunction& f);

/// Maximum utility over the points of ds selected by ids (non-empty, all valid).
double gain(const Dataset& ds, std::span<const int> ids, const UtilityFunction& f);

/// gain(D, f) - gain(S, f); non-negative since S is a subset of D.
double regret(const Dataset& ds, std::span<const int> subset, const UtilityFunction& f);

/// regret over gain(D, f); lies in [0, 1).
double regret_ratio(const Dataset& ds, std::span<const int> subset, const UtilityFunction& f);

/**
 * @brief Empirical maximum regret ratio of a subset over a sampled family.
 *
 * Deterministic given ds, subset, and family order. Function evaluation may
 * be spread across threads (KREGRET_THREADS overrides the count); the
 * reported argmax is always the lowest index achieving the maximum.
 */
RegretReport max_regret_ratio(const Dataset& ds, std::span<const int> subset,
                              std::span<const UtilityFunction> family);

/// Overload reusing precomputed gain(D, f) values (see family_gains).
RegretReport max_regret_ratio(const Dataset& ds, std::span<const int> subset,
                              std::span<const UtilityFunction> family,
                              std::span<const double> dataset_gains);

/// gain(D, f) for every function in the family, in family order.
std::vector<double> family_gains(const Dataset& ds, std::span<const UtilityFunction> family);

/// gain over a subset of ds for every function in the family.
std::vector<double> family_gains(const Dataset& ds, std::span<const int> subset,
                                 std::span<const UtilityFunction> family);

/// Weight vector drawn uniformly from the simplex by sum-normalizing d uniform draws.
std::vector<double> sample_simplex(int d, std::mt19937_64& rng);

/// Random multiplicative function with sum(alpha) = 1.
UtilityFunction sample_muf(int d, std::mt19937_64& rng);

/// Random CES function with sum(alpha) = 1 and b uniform in [0.1, 0.9].
UtilityFunction sample_ces(int d, std::mt19937_64& rng);

/// Number of evaluation threads: KREGRET_THREADS if set, else hardware concurrency.
int eval_threads();

}  // namespace kregret

#endif  // KREGRET_UTILITY_HPP
