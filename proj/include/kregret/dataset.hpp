/**
 * @file dataset.hpp
 * @brief Core data model: points, datasets, normalization, dominance and skyline.
 */

#ifndef KREGRET_DATASET_HPP
#define KREGRET_DATASET_HPP

#include <span>
#include <vector>

namespace kregret {

/**
 * @brief A d-dimensional data object with strictly positive utilities.
 *
 * Coordinates are preference scores: larger is better in every dimension.
 * Ids are dense integer indices assigned when the owning Dataset is built.
 */
struct Point {
    int id = -1;
    std::vector<double> coords;

    [[nodiscard]] int dims() const { return static_cast<int>(coords.size()); }
};

/**
 * @brief Immutable collection of points with per-dimension maxima.
 *
 * Invariants enforced at construction: n >= 1, d >= 2, every coordinate
 * strictly positive, all points of equal dimensionality. A Dataset is safe
 * to share across threads; every operation on it is a pure function.
 */
class Dataset {
  public:
    /// Builds a dataset from coordinate rows; ids are assigned 0..n-1 in row order.
    explicit Dataset(std::vector<std::vector<double>> rows);

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] int dims() const { return d_; }
    [[nodiscard]] bool normalized() const { return normalized_; }

    [[nodiscard]] const Point& point(int id) const { return points_[static_cast<std::size_t>(id)]; }
    [[nodiscard]] const std::vector<Point>& points() const { return points_; }

    /// Largest coordinate in dimension j over all points.
    [[nodiscard]] double dim_max(int j) const { return dim_max_[static_cast<std::size_t>(j)]; }
    /// Smallest coordinate in dimension j over all points.
    [[nodiscard]] double dim_min(int j) const { return dim_min_[static_cast<std::size_t>(j)]; }

    friend Dataset normalize(const Dataset& ds);
    friend Dataset scale_dimension(const Dataset& ds, int j, double factor);

  private:
    Dataset(std::vector<Point> points, bool normalized);

    void compute_extrema();
    void validate() const;

    std::vector<Point> points_;
    int d_ = 0;
    std::vector<double> dim_max_;
    std::vector<double> dim_min_;
    bool normalized_ = false;
};

/**
 * @brief Maps every coordinate c in dimension j to 1 + c / max_j(c).
 *
 * The result has every coordinate in (1, 2] and dim_max exactly 2 in every
 * dimension. Ids and point order are preserved. Not idempotent: normalize
 * exactly once.
 */
Dataset normalize(const Dataset& ds);

/**
 * @brief True iff p is coordinate-wise >= q in every dimension.
 *
 * Under this definition a point dominates itself; callers that eliminate
 * dominated points must exclude self-comparison.
 * @throws std::invalid_argument on dimensionality mismatch.
 */
bool dominates(const Point& p, const Point& q);

/**
 * @brief Ids of the points not dominated by any distinct, non-equal point.
 *
 * Points that are coordinate-wise equal to each other are all retained
 * unless a third point strictly exceeds them. Returned ids are ascending.
 * Nested-loop method, O(n^2 d).
 */
std::vector<int> skyline(const Dataset& ds);

/**
 * @brief Multiplies coordinate j of every point by factor (> 0).
 *
 * The result is marked not-normalized regardless of the input flag.
 */
Dataset scale_dimension(const Dataset& ds, int j, double factor);

}  // namespace kregret

#endif  // KREGRET_DATASET_HPP
