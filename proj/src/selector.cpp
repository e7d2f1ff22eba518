#include "kregret/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace kregret {

namespace {

constexpr std::int64_t kPowCap = std::int64_t{1} << 62;

// base^exp with saturation, for bucket-grid sizing.
std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kPowCap / std::max<std::int64_t>(base, 1)) return kPowCap;
        r *= base;
    }
    return r;
}

std::int64_t default_inc(std::size_t n) {
    return std::max<std::int64_t>(1, (static_cast<std::int64_t>(n) + 9999) / 10000);
}

void check_selection(const Dataset& ds, int k, bool raw_domain) {
    if (!raw_domain && !ds.normalized()) {
        throw std::invalid_argument("selector: dataset must be normalized");
    }
    if (k < ds.dims()) {
        throw std::invalid_argument("selector: k must be at least the dimensionality");
    }
    if (static_cast<std::size_t>(k) > ds.size()) {
        throw std::invalid_argument("selector: k exceeds the dataset size");
    }
}

int argmax_dim(const Dataset& ds, int dim) {
    int best = 0;
    double best_c = ds.point(0).coords[static_cast<std::size_t>(dim)];
    for (std::size_t i = 1; i < ds.size(); ++i) {
        const double c = ds.point(static_cast<int>(i)).coords[static_cast<std::size_t>(dim)];
        if (c > best_c) {
            best_c = c;
            best = static_cast<int>(i);
        }
    }
    return best;
}

// One representative per non-empty bucket: the point with the largest
// coordinate in the last dimension, ties to the lowest id. Buckets are the
// cross product of the per-dimension intervals; results come back in
// lexicographic bucket order.
std::vector<std::pair<std::int64_t, int>> bucket_reps(const Dataset& ds, int t,
                                                      const std::vector<IntervalSet>& parts) {
    const int d = ds.dims();
    const int last = d - 1;
    const std::int64_t total = ipow(t, d - 1);

    const auto flat_of = [&](int id) {
        std::int64_t flat = 0;
        for (int i = 0; i < d - 1; ++i) {
            flat = flat * t + parts[static_cast<std::size_t>(i)]
                                  .point_interval[static_cast<std::size_t>(id)];
        }
        return flat;
    };

    struct Best {
        double value = -std::numeric_limits<double>::infinity();
        int id = -1;
    };
    const auto consider = [&](Best& b, int id) {
        const double v = ds.point(id).coords[static_cast<std::size_t>(last)];
        if (v > b.value || (v == b.value && (b.id < 0 || id < b.id))) {
            b.value = v;
            b.id = id;
        }
    };

    std::vector<std::pair<std::int64_t, int>> reps;
    if (total <= std::max<std::int64_t>(static_cast<std::int64_t>(ds.size()) * 4, 1024)) {
        std::vector<Best> best(static_cast<std::size_t>(total));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            consider(best[static_cast<std::size_t>(flat_of(static_cast<int>(i)))],
                     static_cast<int>(i));
        }
        for (std::int64_t f = 0; f < total; ++f) {
            if (best[static_cast<std::size_t>(f)].id >= 0) {
                reps.emplace_back(f, best[static_cast<std::size_t>(f)].id);
            }
        }
    } else {
        // Sparse grid: only non-empty buckets are materialized.
        std::unordered_map<std::int64_t, Best> best;
        best.reserve(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            consider(best[flat_of(static_cast<int>(i))], static_cast<int>(i));
        }
        reps.reserve(best.size());
        for (const auto& [f, b] : best) reps.emplace_back(f, b.id);
        std::sort(reps.begin(), reps.end());
    }
    return reps;
}

std::vector<int> decode_bucket(std::int64_t flat, int t, int dims) {
    std::vector<int> cells(static_cast<std::size_t>(dims));
    for (int i = dims - 1; i >= 0; --i) {
        cells[static_cast<std::size_t>(i)] = static_cast<int>(flat % t);
        flat /= t;
    }
    return cells;
}

struct Keyed {
    AnswerMember member;
    std::int64_t key = 0;
};

// Redundancy elimination with position inheritance. A member is removed when
// another member dominates it and either differs in some coordinate or
// precedes it (so exactly-equal duplicates keep the earliest). Each removed
// position is then offered, in ascending order, to the surviving dominator
// with the smallest current key, if none of them already sits at or before
// that position. Keys stay pairwise distinct, which keeps truncation to the
// first k well-defined.
void eliminate_keyed(const Dataset& ds, std::vector<Keyed>& s) {
    const std::size_t m = s.size();
    if (m < 2) return;

    std::vector<char> removed(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        const Point& pa = ds.point(s[a].member.id);
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a) continue;
            const Point& pb = ds.point(s[b].member.id);
            if (!dominates(pb, pa)) continue;
            if (pb.coords != pa.coords || s[b].key < s[a].key) {
                removed[a] = 1;
                break;
            }
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < m; ++a) {
        if (removed[a]) order.push_back(a);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return s[x].key < s[y].key; });

    for (std::size_t a : order) {
        const Point& pa = ds.point(s[a].member.id);
        std::size_t claimant = m;
        std::int64_t claimant_key = std::numeric_limits<std::int64_t>::max();
        for (std::size_t b = 0; b < m; ++b) {
            if (removed[b] || b == a) continue;
            if (dominates(ds.point(s[b].member.id), pa) && s[b].key < claimant_key) {
                claimant = b;
                claimant_key = s[b].key;
            }
        }
        if (claimant < m && claimant_key > s[a].key) {
            s[claimant].key = s[a].key;
        }
    }

    std::vector<Keyed> kept;
    kept.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
        if (!removed[a]) kept.push_back(std::move(s[a]));
    }
    std::sort(kept.begin(), kept.end(),
              [](const Keyed& x, const Keyed& y) { return x.key < y.key; });
    s = std::move(kept);
}

std::vector<IntervalSet> build_partitions(const Dataset& ds, int t, std::int64_t inc,
                                          const SelectOptions& opts) {
    std::vector<IntervalSet> parts;
    parts.reserve(static_cast<std::size_t>(ds.dims() - 1));
    for (int i = 0; i < ds.dims() - 1; ++i) {
        parts.push_back(make_intervals(ds, t, i, inc, opts.strategy, opts.raw_domain));
    }
    return parts;
}

}  // namespace

std::vector<int> AnswerSet::ids() const {
    std::vector<int> out;
    out.reserve(members.size());
    for (const auto& s : members) out.push_back(s.id);
    return out;
}

bool AnswerSet::contains(int id) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const AnswerMember& s) { return s.id == id; });
}

int compute_t(int k, int d) {
    if (d < 2) {
        throw std::invalid_argument("compute_t: d must be at least 2");
    }
    if (k < d) {
        throw std::invalid_argument("compute_t: k must be at least d");
    }
    const std::int64_t base = k - d + 1;
    if (d == 2) return static_cast<int>(base);
    auto t = static_cast<std::int64_t>(
        std::floor(std::pow(static_cast<double>(base), 1.0 / (d - 1))));
    t = std::max<std::int64_t>(t, 1);
    while (ipow(t + 1, d - 1) <= base) ++t;
    while (t > 1 && ipow(t, d - 1) > base) --t;
    return static_cast<int>(t);
}

AnswerSet minvar(const Dataset& ds, int k, const SelectOptions& opts) {
    check_selection(ds, k, opts.raw_domain);
    const int d = ds.dims();
    const std::int64_t inc = opts.inc > 0 ? opts.inc : default_inc(ds.size());

    AnswerSet answer;
    answer.t_base = compute_t(k, d);
    std::vector<char> present(ds.size(), 0);
    const auto push = [&](AnswerMember m) {
        if (present[static_cast<std::size_t>(m.id)]) return;
        present[static_cast<std::size_t>(m.id)] = 1;
        answer.members.push_back(std::move(m));
    };

    for (int i = 0; i < d - 1; ++i) {
        push(AnswerMember{argmax_dim(ds, i), Provenance::Apex, i, 0, {}});
    }

    const int t = answer.t_base;
    const auto parts = build_partitions(ds, t, inc, opts);
    for (const auto& [flat, id] : bucket_reps(ds, t, parts)) {
        push(AnswerMember{id, Provenance::BucketRep, -1, t, decode_bucket(flat, t, d - 1)});
    }

    for (int id = 0; static_cast<int>(answer.members.size()) < k; ++id) {
        push(AnswerMember{id, Provenance::Fill, -1, 0, {}});
    }
    answer.members.resize(static_cast<std::size_t>(k));
    return answer;
}

AnswerSet rf_minvar(const Dataset& ds, int k, const SelectOptions& opts) {
    check_selection(ds, k, opts.raw_domain);
    if (opts.itr_max < 1) {
        throw std::invalid_argument("rf_minvar: itr_max must be at least 1");
    }
    const int d = ds.dims();
    const std::int64_t inc = opts.inc > 0 ? opts.inc : default_inc(ds.size());
    const int t_base = compute_t(k, d);

    std::vector<Keyed> s;
    std::int64_t next_key = 0;
    for (int i = 0; i < d - 1; ++i) {
        const int id = argmax_dim(ds, i);
        const bool dup = std::any_of(s.begin(), s.end(),
                                     [&](const Keyed& e) { return e.member.id == id; });
        if (!dup) {
            s.push_back(Keyed{AnswerMember{id, Provenance::Apex, i, 0, {}}, next_key++});
        }
    }

    for (int itr = 0; static_cast<int>(s.size()) < k && itr < opts.itr_max; ++itr) {
        const int t = t_base + itr;
        const auto parts = build_partitions(ds, t, inc, opts);
        std::vector<char> present(ds.size(), 0);
        for (const auto& e : s) present[static_cast<std::size_t>(e.member.id)] = 1;
        for (const auto& [flat, id] : bucket_reps(ds, t, parts)) {
            if (present[static_cast<std::size_t>(id)]) continue;
            present[static_cast<std::size_t>(id)] = 1;
            s.push_back(Keyed{
                AnswerMember{id, Provenance::BucketRep, -1, t, decode_bucket(flat, t, d - 1)},
                next_key++});
        }
        eliminate_keyed(ds, s);
    }

    if (static_cast<int>(s.size()) < k) {
        std::vector<char> present(ds.size(), 0);
        for (const auto& e : s) present[static_cast<std::size_t>(e.member.id)] = 1;
        std::vector<int> candidates;
        for (std::size_t id = 0; id < ds.size(); ++id) {
            if (!present[id]) candidates.push_back(static_cast<int>(id));
        }
        std::vector<int> picks;
        std::mt19937_64 rng(opts.fill_seed);
        std::sample(candidates.begin(), candidates.end(), std::back_inserter(picks),
                    static_cast<std::size_t>(k) - s.size(), rng);
        for (int id : picks) {
            s.push_back(Keyed{AnswerMember{id, Provenance::Fill, -1, 0, {}}, next_key++});
        }
    }

    AnswerSet answer;
    answer.t_base = t_base;
    for (int i = 0; i < k; ++i) {
        answer.members.push_back(std::move(s[static_cast<std::size_t>(i)].member));
    }
    return answer;
}

std::vector<int> eliminate_redundant(const Dataset& ds, std::span<const int> members) {
    std::vector<Keyed> s;
    s.reserve(members.size());
    std::int64_t key = 0;
    for (int id : members) {
        if (id < 0 || static_cast<std::size_t>(id) >= ds.size()) {
            throw std::invalid_argument("eliminate_redundant: id not in the dataset");
        }
        s.push_back(Keyed{AnswerMember{id, Provenance::Fill, -1, 0, {}}, key++});
    }
    eliminate_keyed(ds, s);
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(e.member.id);
    return out;
}

AnswerSet maxdom(const Dataset& ds, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > ds.size()) {
        throw std::invalid_argument("maxdom: k must lie in [1, n]");
    }
    const std::vector<int> sky = skyline(ds);

    // Coverage lists: every distinct point each skyline point dominates.
    std::vector<std::vector<int>> covers(sky.size());
    for (std::size_t i = 0; i < sky.size(); ++i) {
        const Point& p = ds.point(sky[i]);
        for (std::size_t q = 0; q < ds.size(); ++q) {
            if (static_cast<int>(q) != sky[i] && dominates(p, ds.point(static_cast<int>(q)))) {
                covers[i].push_back(static_cast<int>(q));
            }
        }
    }

    AnswerSet answer;
    std::vector<char> picked(sky.size(), 0);
    std::vector<char> covered(ds.size(), 0);
    std::vector<char> in_answer(ds.size(), 0);

    for (int round = 0; round < k; ++round) {
        int best = -1;
        std::int64_t best_gain = -1;
        for (std::size_t i = 0; i < sky.size(); ++i) {
            if (picked[i]) continue;
            std::int64_t g = 0;
            for (int q : covers[i]) g += covered[static_cast<std::size_t>(q)] ? 0 : 1;
            // sky ids ascend, so the first maximum is the lowest-id tie-break
            if (g > best_gain) {
                best_gain = g;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;  // skyline exhausted
        picked[static_cast<std::size_t>(best)] = 1;
        in_answer[static_cast<std::size_t>(sky[static_cast<std::size_t>(best)])] = 1;
        for (int q : covers[static_cast<std::size_t>(best)]) {
            covered[static_cast<std::size_t>(q)] = 1;
        }
        answer.members.push_back(
            AnswerMember{sky[static_cast<std::size_t>(best)], Provenance::Fill, -1, 0, {}});
    }

    for (int id = 0; static_cast<int>(answer.members.size()) < k; ++id) {
        if (in_answer[static_cast<std::size_t>(id)]) continue;
        in_answer[static_cast<std::size_t>(id)] = 1;
        answer.members.push_back(AnswerMember{id, Provenance::Fill, -1, 0, {}});
    }
    return answer;
}

AnswerSet random_subset(const Dataset& ds, int k, std::uint64_t seed) {
    if (k < 1 || static_cast<std::size_t>(k) > ds.size()) {
        throw std::invalid_argument("random_subset: k must lie in [1, n]");
    }
    std::vector<int> ids(ds.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<int> picks;
    std::mt19937_64 rng(seed);
    std::sample(ids.begin(), ids.end(), std::back_inserter(picks),
                static_cast<std::size_t>(k), rng);
    AnswerSet answer;
    for (int id : picks) {
        answer.members.push_back(AnswerMember{id, Provenance::Fill, -1, 0, {}});
    }
    return answer;
}

}  // namespace kregret
