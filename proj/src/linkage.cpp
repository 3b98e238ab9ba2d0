#include "linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "format.hpp"
#include "inequity.hpp"

namespace genie {

namespace {

// Max-heap comparator yielding ascending (dist, index1, index2) pops.
struct EdgeAfter {
    bool operator()(const MstEdge& a, const MstEdge& b) const {
        if (a.dist != b.dist) return a.dist > b.dist;
        if (a.index1 != b.index1) return a.index1 > b.index1;
        return a.index2 > b.index2;
    }
};

} // namespace

EdgeQueue::EdgeQueue(const std::vector<MstEdge>& edges) : heap_(edges) {
    std::make_heap(heap_.begin(), heap_.end(), EdgeAfter{});
}

void EdgeQueue::drain_aux() {
    for (const auto& e : aux_) {
        heap_.push_back(e);
        std::push_heap(heap_.begin(), heap_.end(), EdgeAfter{});
    }
    aux_.clear();
    aux_min_size_ = -1;
}

MstEdge EdgeQueue::pop_min() {
    if (!aux_.empty()) drain_aux();
    if (heap_.empty()) fail(ErrorCode::internal, "pop from empty edge queue");
    std::pop_heap(heap_.begin(), heap_.end(), EdgeAfter{});
    const MstEdge e = heap_.back();
    heap_.pop_back();
    return e;
}

MstEdge EdgeQueue::pop_min_touching_min_size(SizedDisjointSets& ds) {
    const std::int64_t min_size = ds.min_size();
    if (aux_min_size_ != min_size && !aux_.empty()) drain_aux();
    aux_min_size_ = min_size;
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), EdgeAfter{});
        const MstEdge e = heap_.back();
        heap_.pop_back();
        if (ds.size_of(e.index1) == min_size || ds.size_of(e.index2) == min_size)
            return e;
        aux_.push_back(e);
    }
    fail(ErrorCode::internal, "no edge touches a minimum-size cluster");
}

namespace {

// Shared merge bookkeeping: maps union-find roots to history ids and
// appends steps in canonical (left < right) order.
class HistoryBuilder {
public:
    explicit HistoryBuilder(std::int64_t n) : ds_(n), cluster_id_(static_cast<std::size_t>(n)) {
        history_.n = n;
        history_.steps.reserve(static_cast<std::size_t>(n - 1));
        for (std::int64_t i = 0; i < n; ++i)
            cluster_id_[static_cast<std::size_t>(i)] = i + 1;
    }

    SizedDisjointSets& ds() { return ds_; }

    // Returns the sizes of the two clusters the edge joined.
    std::pair<std::int64_t, std::int64_t> apply(const MstEdge& e) {
        const std::int64_t r1 = ds_.find_set(e.index1);
        const std::int64_t r2 = ds_.find_set(e.index2);
        if (r1 == r2)
            fail(ErrorCode::internal, "MST edge joins an already-merged pair");
        const std::int64_t s1 = ds_.size_of(r1);
        const std::int64_t s2 = ds_.size_of(r2);
        const std::int64_t id1 = cluster_id_[static_cast<std::size_t>(r1)];
        const std::int64_t id2 = cluster_id_[static_cast<std::size_t>(r2)];
        ds_.link(r1, r2);
        const std::int64_t t = static_cast<std::int64_t>(history_.steps.size()) + 1;
        cluster_id_[static_cast<std::size_t>(ds_.find_set(e.index1))] =
            history_.n + t;
        history_.steps.push_back(
            {std::min(id1, id2), std::max(id1, id2), e.dist});
        return {s1, s2};
    }

    MergeHistory take() { return std::move(history_); }

private:
    SizedDisjointSets ds_;
    std::vector<std::int64_t> cluster_id_; // indexed by union-find root
    MergeHistory history_;
};

void check_mst(const Mst& mst) {
    if (mst.n < 1 || mst.edges.size() != static_cast<std::size_t>(mst.n - 1))
        fail(ErrorCode::invalid_argument, "MST must have exactly n-1 edges");
}

} // namespace

MergeHistory genie_linkage(const Mst& mst, double gini_threshold) {
    if (!(gini_threshold > 0.0) || gini_threshold > 1.0)
        fail(ErrorCode::invalid_argument, "gini threshold must be in (0, 1]");
    check_mst(mst);
    HistoryBuilder builder(mst.n);
    GiniTracker tracker(mst.n);
    EdgeQueue queue(mst.edges);
    for (std::int64_t t = 1; t < mst.n; ++t) {
        // The inequity test looks at the distribution as it stands before
        // this merge is chosen.
        const MstEdge e = tracker.value() > gini_threshold
                              ? queue.pop_min_touching_min_size(builder.ds())
                              : queue.pop_min();
        const auto [s1, s2] = builder.apply(e);
        tracker.merge(s1, s2);
    }
    return builder.take();
}

MergeHistory single_linkage(const Mst& mst) {
    check_mst(mst);
    std::vector<MstEdge> edges = mst.edges;
    std::sort(edges.begin(), edges.end(), [](const MstEdge& a, const MstEdge& b) {
        return EdgeAfter{}(b, a);
    });
    HistoryBuilder builder(mst.n);
    for (const auto& e : edges) builder.apply(e);
    return builder.take();
}

ClassicScheme classic_scheme_from_name(const std::string& name) {
    if (name == "complete") return ClassicScheme::complete;
    if (name == "average") return ClassicScheme::average;
    if (name == "ward") return ClassicScheme::ward;
    fail(ErrorCode::invalid_argument, "unknown linkage scheme: " + name);
}

namespace {

// Condensed upper-triangular index for i < j over n items.
inline std::size_t pair_index(std::int64_t n, std::int64_t i, std::int64_t j) {
    return static_cast<std::size_t>(n * i - i * (i + 1) / 2 + (j - i - 1));
}

} // namespace

MergeHistory classic_linkage(const Distance& dist, ClassicScheme scheme,
                             std::int64_t matrix_cap) {
    const std::int64_t n = dist.size();
    if (n > matrix_cap)
        fail(ErrorCode::resource,
             "stored-matrix linkage limited to n <= " + std::to_string(matrix_cap) +
                 " (got n = " + std::to_string(n) + ")");
    MergeHistory history;
    history.n = n;
    if (n == 1) return history;
    const bool squared = scheme == ClassicScheme::ward;

    std::vector<double> m(pair_index(n, n - 2, n - 1) + 1);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const double d = dist(i, j);
            m[pair_index(n, i, j)] = squared ? d * d : d;
        }

    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(n), 1);
    std::vector<std::int64_t> ids(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;

    auto at = [&](std::int64_t i, std::int64_t j) -> double& {
        return i < j ? m[pair_index(n, i, j)] : m[pair_index(n, j, i)];
    };

    // Per-cluster nearest active neighbor. All three schemes are
    // reducible, so a freshly merged cluster can never undercut a
    // surviving cluster's cached nearest distance; only entries whose
    // nearest neighbor was one of the merged pair need a rescan.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> nn_dist(static_cast<std::size_t>(n), inf);
    std::vector<std::int64_t> nn_of(static_cast<std::size_t>(n), -1);
    auto rescan = [&](std::int64_t i) {
        double best = inf;
        std::int64_t best_j = -1;
        for (std::int64_t j = 0; j < n; ++j) {
            if (j == i || !active[static_cast<std::size_t>(j)]) continue;
            const double d = at(i, j);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        nn_dist[static_cast<std::size_t>(i)] = best;
        nn_of[static_cast<std::size_t>(i)] = best_j;
    };
    for (std::int64_t i = 0; i < n; ++i) rescan(i);

    for (std::int64_t t = 1; t < n; ++t) {
        // Globally cheapest active pair, ties broken by the normalized
        // (index1, index2) pair so the result is scan-order independent.
        double best = inf;
        std::int64_t a = -1, b = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)] ||
                nn_of[static_cast<std::size_t>(i)] < 0)
                continue;
            const double d = nn_dist[static_cast<std::size_t>(i)];
            const std::int64_t lo = std::min(i, nn_of[static_cast<std::size_t>(i)]);
            const std::int64_t hi = std::max(i, nn_of[static_cast<std::size_t>(i)]);
            if (d < best || (d == best && (lo < a || (lo == a && hi < b)))) {
                best = d;
                a = lo;
                b = hi;
            }
        }
        if (a < 0) fail(ErrorCode::internal, "no active pair to merge");

        const std::int64_t sa = sizes[static_cast<std::size_t>(a)];
        const std::int64_t sb = sizes[static_cast<std::size_t>(b)];
        const double dab = at(a, b);
        for (std::int64_t w = 0; w < n; ++w) {
            if (w == a || w == b || !active[static_cast<std::size_t>(w)]) continue;
            const std::int64_t sw = sizes[static_cast<std::size_t>(w)];
            double updated = 0.0;
            switch (scheme) {
                case ClassicScheme::complete:
                    updated = std::max(at(a, w), at(b, w));
                    break;
                case ClassicScheme::average:
                    updated = (static_cast<double>(sa) * at(a, w) +
                               static_cast<double>(sb) * at(b, w)) /
                              static_cast<double>(sa + sb);
                    break;
                case ClassicScheme::ward:
                    updated = (static_cast<double>(sa + sw) * at(a, w) +
                               static_cast<double>(sb + sw) * at(b, w) -
                               static_cast<double>(sw) * dab) /
                              static_cast<double>(sa + sb + sw);
                    break;
            }
            at(a, w) = updated;
        }

        active[static_cast<std::size_t>(b)] = false;
        sizes[static_cast<std::size_t>(a)] = sa + sb;
        const std::int64_t id1 = ids[static_cast<std::size_t>(a)];
        const std::int64_t id2 = ids[static_cast<std::size_t>(b)];
        ids[static_cast<std::size_t>(a)] = n + t;
        history.steps.push_back({std::min(id1, id2), std::max(id1, id2), dab});

        rescan(a);
        for (std::int64_t i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)] || i == a) continue;
            const std::int64_t cur = nn_of[static_cast<std::size_t>(i)];
            if (cur == a || cur == b) rescan(i);
        }
    }
    return history;
}

std::vector<std::int32_t> cut(const MergeHistory& history, std::int64_t k) {
    const std::int64_t n = history.n;
    if (k < 1 || k > n)
        fail(ErrorCode::invalid_argument, "cut needs 1 <= k <= n");
    SizedDisjointSets ds(n);
    // Each history id is represented by one of its member objects.
    std::vector<std::int32_t> rep(static_cast<std::size_t>(n + n), -1);
    for (std::int64_t i = 0; i < n; ++i)
        rep[static_cast<std::size_t>(i + 1)] = static_cast<std::int32_t>(i);
    const std::int64_t merges = n - k;
    for (std::int64_t t = 0; t < merges; ++t) {
        const auto& s = history.steps[static_cast<std::size_t>(t)];
        const std::int32_t ri = rep[static_cast<std::size_t>(s.left)];
        const std::int32_t rj = rep[static_cast<std::size_t>(s.right)];
        ds.link(ri, rj);
        rep[static_cast<std::size_t>(n + t + 1)] = ri;
    }
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> root_label(static_cast<std::size_t>(n), 0);
    std::int32_t next = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t r = ds.find_set(i);
        if (root_label[static_cast<std::size_t>(r)] == 0)
            root_label[static_cast<std::size_t>(r)] = ++next;
        labels[static_cast<std::size_t>(i)] = root_label[static_cast<std::size_t>(r)];
    }
    return labels;
}

void write_history(std::ostream& out, const MergeHistory& history) {
    const std::int64_t n = history.n;
    auto serial = [n](std::int64_t id) {
        return id <= n ? -id : id - n;
    };
    for (const auto& s : history.steps)
        out << serial(s.left) << ' ' << serial(s.right) << ' '
            << fmt_g12(s.height) << '\n';
}

} // namespace genie
