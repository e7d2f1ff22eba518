/**
 * @file selector.hpp
 * @brief Answer-set construction: MinVar, RF-MinVar, MaxDom and a random baseline.
 *
 * MinVar adds the argmax point of each of the first d-1 dimensions, splits
 * those dimensions into t = floor((k-d+1)^(1/(d-1))) intervals each, and from
 * every cell of the resulting t^(d-1) bucket grid keeps the point with the
 * largest coordinate in dimension d. RF-MinVar repeats the bucket pass with
 * growing t, discarding members dominated by other members between passes.
 *
 * All argmax ties break to the lowest point id, so selection is fully
 * deterministic given the dataset and parameters.
 */

#ifndef KREGRET_SELECTOR_HPP
#define KREGRET_SELECTOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kregret/dataset.hpp"
#include "kregret/partition.hpp"

namespace kregret {

enum class Provenance { Apex, BucketRep, Fill };

struct AnswerMember {
    int id = -1;
    Provenance prov = Provenance::Fill;
    int apex_dim = -1;        ///< Apex only
    int rep_t = 0;            ///< BucketRep: interval count in effect
    std::vector<int> bucket;  ///< BucketRep: cell index per partitioned dimension
};

/// Ordered size-k selection with per-member provenance.
struct AnswerSet {
    std::vector<AnswerMember> members;
    int t_base = 0;  ///< floor((k-d+1)^(1/(d-1))); 0 for non-bucket algorithms

    [[nodiscard]] std::vector<int> ids() const;
    [[nodiscard]] bool contains(int id) const;
};

/// Options shared by the MinVar-family selectors.
struct SelectOptions {
    std::int64_t inc = 0;  ///< breakpoint slack increment; 0 = max(1, ceil(n/10000))
    PartitionStrategy strategy = PartitionStrategy::Adaptive;
    bool raw_domain = false;  ///< operate on un-normalized data (width cap uses dim_min)
    int itr_max = 11;         ///< RF-MinVar only
    std::uint64_t fill_seed = 0;  ///< RF-MinVar random fill only
};

/**
 * @brief floor((k - d + 1)^(1/(d-1))), with an integer-exactness guard so that
 *        t^(d-1) <= k-d+1 < (t+1)^(d-1) holds despite pow() rounding.
 * @throws std::invalid_argument if k < d or d < 2.
 */
int compute_t(int k, int d);

/**
 * @brief Size-k selection by per-dimension apex points plus bucket representatives.
 *
 * Empty buckets contribute nothing; if fewer than k members result, the
 * lowest-id unused points fill the remainder.
 * @throws std::invalid_argument unless d <= k <= n (and the dataset is
 *          normalized, when raw_domain is off).
 */
AnswerSet minvar(const Dataset& ds, int k, const SelectOptions& opts = {});

/**
 * @brief MinVar with redundancy elimination and growing bucket resolution.
 *
 * Iteration i reruns the bucket pass at t_base + i and then drops members
 * dominated by other members, until k members survive or itr_max iterations
 * have run. A dropped member's insertion position is inherited by one of its
 * surviving dominators, so the base-t representatives (or points at least as
 * good) always survive the final truncation to k. Any remaining vacancies
 * are filled with seed-deterministic random non-members.
 */
AnswerSet rf_minvar(const Dataset& ds, int k, const SelectOptions& opts = {});

/**
 * @brief Removes members dominated by other members.
 *
 * Exactly-equal duplicates keep the earliest occurrence. When a dominated
 * member is removed, one surviving dominator inherits its (earlier) position,
 * so the result order can interleave survivors ahead of their original rank.
 */
std::vector<int> eliminate_redundant(const Dataset& ds, std::span<const int> members);

/**
 * @brief Greedy skyline cover: k times, pick the skyline point dominating the
 *        most not-yet-dominated points (ties to the lowest id).
 *
 * Pads with the lowest-id unused points when the skyline is smaller than k.
 */
AnswerSet maxdom(const Dataset& ds, int k);

/// k distinct ids drawn uniformly without replacement; deterministic per seed.
AnswerSet random_subset(const Dataset& ds, int k, std::uint64_t seed);

}  // namespace kregret

#endif  // KREGRET_SELECTOR_HPP
