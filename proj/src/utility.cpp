#include "kregret/utility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace kregret {

namespace {

void check_alpha(const std::vector<double>& alpha) {
    if (alpha.size() < 2) {
        throw std::invalid_argument("UtilityFunction: needs at least 2 weights");
    }
    for (double a : alpha) {
        if (!(a >= 0.0)) {
            throw std::invalid_argument("UtilityFunction: weights must be non-negative");
        }
    }
}

double alpha_sum(const std::vector<double>& alpha) {
    double s = 0.0;
    for (double a : alpha) s += a;
    return s;
}

}  // namespace

UtilityFunction UtilityFunction::multiplicative(std::vector<double> alpha) {
    check_alpha(alpha);
    if (alpha_sum(alpha) > 1.0 + 1e-9) {
        throw std::invalid_argument("multiplicative: weights must sum to at most 1");
    }
    return UtilityFunction{FunctionKind::Multiplicative, std::move(alpha), 1.0, 0.0};
}

UtilityFunction UtilityFunction::cobb_douglas(std::vector<double> alpha, double A) {
    check_alpha(alpha);
    if (!(A > 0.0)) {
        throw std::invalid_argument("cobb_douglas: scale A must be positive");
    }
    return UtilityFunction{FunctionKind::CobbDouglas, std::move(alpha), A, 0.0};
}

UtilityFunction UtilityFunction::ces(std::vector<double> alpha, double b, double A) {
    check_alpha(alpha);
    if (!(b > 0.0 && b < 1.0)) {
        throw std::invalid_argument("ces: exponent b must lie in (0, 1)");
    }
    if (!(A > 0.0)) {
        throw std::invalid_argument("ces: scale A must be positive");
    }
    if (alpha_sum(alpha) <= 0.0) {
        throw std::invalid_argument("ces: at least one weight must be positive");
    }
    return UtilityFunction{FunctionKind::Ces, std::move(alpha), A, b};
}

namespace {

// Log-space score of one point; gains are recovered by exp / pow at the max.
// Product forms: sum alpha_j * ln c_j. CES: sum alpha_j * exp(b * ln c_j).
double raw_score(const UtilityFunction& f, const double* lnc, int d) {
    double s = 0.0;
    if (f.kind == FunctionKind::Ces) {
        for (int j = 0; j < d; ++j) {
            s += f.alpha[static_cast<std::size_t>(j)] * std::exp(f.exponent * lnc[j]);
        }
    } else {
        for (int j = 0; j < d; ++j) {
            s += f.alpha[static_cast<std::size_t>(j)] * lnc[j];
        }
    }
    return s;
}

double score_to_gain(const UtilityFunction& f, double score) {
    if (f.kind == FunctionKind::Ces) {
        return f.scale * std::pow(score, 1.0 / f.exponent);
    }
    return f.scale * std::exp(score);
}

void check_dims(const UtilityFunction& f, int d) {
    if (f.dims() != d) {
        throw std::invalid_argument("utility: function/point dimensionality mismatch");
    }
}

// Row-major ln(coord) matrix for a list of points.
std::vector<double> log_rows(const Dataset& ds, std::span<const int> ids) {
    const int d = ds.dims();
    std::vector<double> lnc(ids.size() * static_cast<std::size_t>(d));
    std::size_t r = 0;
    for (int id : ids) {
        const auto& p = ds.point(id);
        for (int j = 0; j < d; ++j) {
            lnc[r * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] =
                std::log(p.coords[static_cast<std::size_t>(j)]);
        }
        ++r;
    }
    return lnc;
}

void check_subset(const Dataset& ds, std::span<const int> subset) {
    if (subset.empty()) {
        throw std::invalid_argument("utility: subset must be non-empty");
    }
    for (int id : subset) {
        if (id < 0 || static_cast<std::size_t>(id) >= ds.size()) {
            throw std::invalid_argument("utility: subset id " + std::to_string(id) +
                                        " is not in the dataset");
        }
    }
}

// Runs fn(begin, end) over [0, count) split across eval_threads() workers.
// Chunk results must be written to disjoint slots so the outcome is
// independent of the thread count.
void parallel_chunks(std::size_t count, const auto& fn) {
    const int threads = std::min<int>(eval_threads(), static_cast<int>(count));
    if (threads <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::size_t chunk = (count + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

std::vector<double> gains_over(const Dataset& ds, std::span<const int> ids,
                               std::span<const UtilityFunction> family) {
    if (family.empty()) {
        throw std::invalid_argument("utility: function family must be non-empty");
    }
    const int d = ds.dims();
    for (const auto& f : family) check_dims(f, d);

    const std::vector<double> lnc = log_rows(ds, ids);
    const std::size_t rows = ids.size();
    std::vector<double> gains(family.size());
    parallel_chunks(family.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& f = family[i];
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rows; ++r) {
                best = std::max(best, raw_score(f, &lnc[r * static_cast<std::size_t>(d)], d));
            }
            gains[i] = score_to_gain(f, best);
        }
    });
    return gains;
}

std::vector<int> all_ids(const Dataset& ds) {
    std::vector<int> ids(ds.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return ids;
}

}  // namespace

int eval_threads() {
    if (const char* env = std::getenv("KREGRET_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

double eval(const UtilityFunction& f, const Point& p) {
    check_dims(f, p.dims());
    const int d = p.dims();
    std::vector<double> lnc(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const double c = p.coords[static_cast<std::size_t>(j)];
        if (!(c > 0.0)) {
            throw std::invalid_argument("eval: coordinates must be positive");
        }
        lnc[static_cast<std::size_t>(j)] = std::log(c);
    }
    return score_to_gain(f, raw_score(f, lnc.data(), d));
}

double gain(std::span<const Point> points, const UtilityFunction& f) {
    if (points.empty()) {
        throw std::invalid_argument("gain: point set must be non-empty");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        best = std::max(best, eval(f, p));
    }
    return best;
}

double gain(const Dataset& ds, std::span<const int> ids, const UtilityFunction& f) {
    check_subset(ds, ids);
    double best = -std::numeric_limits<double>::infinity();
    for (int id : ids) {
        best = std::max(best, eval(f, ds.point(id)));
    }
    return best;
}

double regret(const Dataset& ds, std::span<const int> subset, const UtilityFunction& f) {
    check_subset(ds, subset);
    const std::vector<int> ids = all_ids(ds);
    return gain(ds, ids, f) - gain(ds, subset, f);
}

double regret_ratio(const Dataset& ds, std::span<const int> subset, const UtilityFunction& f) {
    check_subset(ds, subset);
    const std::vector<int> ids = all_ids(ds);
    const double gd = gain(ds, ids, f);
    return (gd - gain(ds, subset, f)) / gd;
}

std::vector<double> family_gains(const Dataset& ds, std::span<const UtilityFunction> family) {
    return gains_over(ds, all_ids(ds), family);
}

std::vector<double> family_gains(const Dataset& ds, std::span<const int> subset,
                                 std::span<const UtilityFunction> family) {
    check_subset(ds, subset);
    return gains_over(ds, subset, family);
}

RegretReport max_regret_ratio(const Dataset& ds, std::span<const int> subset,
                              std::span<const UtilityFunction> family,
                              std::span<const double> dataset_gains) {
    if (dataset_gains.size() != family.size()) {
        throw std::invalid_argument("max_regret_ratio: gains/family size mismatch");
    }
    const std::vector<double> subset_gains = family_gains(ds, subset, family);

    RegretReport report;
    report.per_function_ratio.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        report.per_function_ratio[i] = (dataset_gains[i] - subset_gains[i]) / dataset_gains[i];
    }
    report.max_ratio = -1.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (report.per_function_ratio[i] > report.max_ratio) {
            report.max_ratio = report.per_function_ratio[i];
            report.argmax_function = i;
        }
    }
    report.gain_dataset = dataset_gains[report.argmax_function];
    report.gain_subset = subset_gains[report.argmax_function];
    return report;
}

RegretReport max_regret_ratio(const Dataset& ds, std::span<const int> subset,
                              std::span<const UtilityFunction> family) {
    const std::vector<double> gains = family_gains(ds, family);
    return max_regret_ratio(ds, subset, family, gains);
}

std::vector<double> sample_simplex(int d, std::mt19937_64& rng) {
    if (d < 2) {
        throw std::invalid_argument("sample_simplex: d must be at least 2");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> alpha(static_cast<std::size_t>(d));
    double sum = 0.0;
    while (sum == 0.0) {
        sum = 0.0;
        for (auto& a : alpha) {
            a = unit(rng);
            sum += a;
        }
    }
    for (auto& a : alpha) a /= sum;
    return alpha;
}

UtilityFunction sample_muf(int d, std::mt19937_64& rng) {
    return UtilityFunction::multiplicative(sample_simplex(d, rng));
}

UtilityFunction sample_ces(int d, std::mt19937_64& rng) {
    std::vector<double> alpha = sample_simplex(d, rng);
    std::uniform_real_distribution<double> bdist(0.1, 0.9);
    return UtilityFunction::ces(std::move(alpha), bdist(rng));
}

}  // namespace kregret
