#include "kregret/dataset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace kregret {

Dataset::Dataset(std::vector<std::vector<double>> rows) {
    points_.reserve(rows.size());
    int next_id = 0;
    for (auto& row : rows) {
        points_.push_back(Point{next_id++, std::move(row)});
    }
    if (!points_.empty()) {
        d_ = points_.front().dims();
    }
    validate();
    compute_extrema();
}

Dataset::Dataset(std::vector<Point> points, bool normalized)
    : points_(std::move(points)), normalized_(normalized) {
    if (!points_.empty()) {
        d_ = points_.front().dims();
    }
    validate();
    compute_extrema();
}

void Dataset::validate() const {
    if (points_.empty()) {
        throw std::invalid_argument("Dataset: must contain at least one point");
    }
    if (d_ < 2) {
        throw std::invalid_argument("Dataset: dimensionality must be at least 2");
    }
    for (const auto& p : points_) {
        if (p.dims() != d_) {
            throw std::invalid_argument("Dataset: inconsistent dimensionality at point id " +
                                        std::to_string(p.id));
        }
        for (double c : p.coords) {
            if (!(c > 0.0)) {
                throw std::invalid_argument("Dataset: non-positive coordinate at point id " +
                                            std::to_string(p.id));
            }
        }
    }
}

void Dataset::compute_extrema() {
    dim_max_.assign(static_cast<std::size_t>(d_), -std::numeric_limits<double>::infinity());
    dim_min_.assign(static_cast<std::size_t>(d_), std::numeric_limits<double>::infinity());
    for (const auto& p : points_) {
        for (int j = 0; j < d_; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            dim_max_[ju] = std::max(dim_max_[ju], p.coords[ju]);
            dim_min_[ju] = std::min(dim_min_[ju], p.coords[ju]);
        }
    }
}

Dataset normalize(const Dataset& ds) {
    std::vector<Point> out = ds.points_;
    for (auto& p : out) {
        for (int j = 0; j < ds.d_; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            p.coords[ju] = 1.0 + p.coords[ju] / ds.dim_max_[ju];
        }
    }
    return Dataset(std::move(out), true);
}

bool dominates(const Point& p, const Point& q) {
    if (p.dims() != q.dims()) {
        throw std::invalid_argument("dominates: dimensionality mismatch");
    }
    for (std::size_t j = 0; j < p.coords.size(); ++j) {
        if (p.coords[j] < q.coords[j]) {
            return false;
        }
    }
    return true;
}

namespace {

bool coords_equal(const Point& p, const Point& q) {
    return p.coords == q.coords;
}

}  // namespace

std::vector<int> skyline(const Dataset& ds) {
    std::vector<int> result;
    const auto& pts = ds.points();
    for (const auto& p : pts) {
        bool beaten = false;
        for (const auto& q : pts) {
            if (q.id == p.id) continue;
            if (dominates(q, p) && !coords_equal(q, p)) {
                beaten = true;
                break;
            }
        }
        if (!beaten) {
            result.push_back(p.id);
        }
    }
    return result;
}

Dataset scale_dimension(const Dataset& ds, int j, double factor) {
    if (j < 0 || j >= ds.dims()) {
        throw std::invalid_argument("scale_dimension: dimension index out of range");
    }
    if (!(factor > 0.0)) {
        throw std::invalid_argument("scale_dimension: factor must be positive");
    }
    std::vector<Point> out = ds.points_;
    for (auto& p : out) {
        p.coords[static_cast<std::size_t>(j)] *= factor;
    }
    return Dataset(std::move(out), false);
}

}  // namespace kregret
