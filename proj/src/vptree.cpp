#include "vptree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genie {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// (dist, index) lexicographic; the stream's total order.
inline bool lex_less(double d1, std::int32_t j1, double d2, std::int32_t j2) {
    return d1 < d2 || (d1 == d2 && j1 < j2);
}
} // namespace

struct VpTree::Node {
    std::int32_t vantage = -1; // -1 marks a leaf
    double radius = 0.0;
    std::int32_t max_index = -1;
    std::int32_t rep = -1; // member object identifying the subtree's set
    bool same_set = false; // true only after verification; never stale-true
    std::unique_ptr<Node> inner, outer;
    std::vector<std::int32_t> items; // leaf objects
};

struct VpTree::Stream {
    std::deque<Neighbor> cache;
    // Exclusive lower bound of the next batch: everything lex-at-or-below
    // (last_dist, last_index) has already been handed out or cached.
    double last_dist = -kInf;
    std::int32_t last_index = -1;
    std::int64_t returned = 0;
    bool exhausted = false;
    // One known candidate distance from this object's leaf, consumed as
    // the first search's pruning bound.
    std::int32_t bootstrap_mate = -1;
    double bootstrap_dist = kInf;
    std::int32_t batch = 0;
};

struct VpTree::Search {
    std::int32_t query = 0;
    std::int64_t query_root = -1; // find_set(query) when ds given
    SizedDisjointSets* ds = nullptr;
    std::vector<Neighbor> heap; // lex max-heap of current best batch
    std::size_t cap = 0;
    double bound = kInf; // pruning bound while the heap is not yet full
    double last_dist = -kInf;
    std::int32_t last_index = -1;
    std::int64_t visited = 0; // children considered during the descent
    std::int64_t pruned = 0;  // of those, skipped without descending
};

namespace {
// Max-heap on (dist, index).
inline bool heap_before(const VpTree::Neighbor& a, const VpTree::Neighbor& b) {
    return lex_less(a.dist, a.index, b.dist, b.index);
}
} // namespace

VpTree::VpTree(const Distance& dist, std::int32_t leaf_capacity,
               std::int32_t batch_min, std::int32_t batch_max)
    : dist_(dist),
      n_(dist.size()),
      leaf_capacity_(std::max<std::int32_t>(1, leaf_capacity)),
      batch_min_(std::max<std::int32_t>(1, batch_min)),
      batch_max_(std::max(batch_min_, batch_max)),
      streams_(static_cast<std::size_t>(n_)) {
    for (auto& s : streams_) s.batch = batch_min_;
    std::vector<std::int32_t> all(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i)
        all[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
    root_ = build(std::move(all));
}

VpTree::~VpTree() = default;

std::unique_ptr<VpTree::Node> VpTree::build(std::vector<std::int32_t> items) {
    auto node = std::make_unique<Node>();
    node->max_index = *std::max_element(items.begin(), items.end());

    const auto make_leaf = [&]() {
        node->vantage = -1;
        node->rep = items.front();
        // A known neighbor per object seeds the first search's bound.
        for (std::size_t t = 0; t < items.size(); ++t) {
            const std::int32_t x = items[t];
            const std::int32_t y = items[(t + 1) % items.size()];
            if (x < y) {
                auto& st = streams_[static_cast<std::size_t>(x)];
                st.bootstrap_mate = y;
                st.bootstrap_dist = dist_(x, y);
            }
        }
        node->items = std::move(items);
    };

    if (static_cast<std::int32_t>(items.size()) <= leaf_capacity_) {
        make_leaf();
        return node;
    }

    // The largest index becomes the vantage: every node that survives the
    // max_index <= query prune then carries a routing object with an
    // index above the query, so a distance window is always available
    // (and that one computation doubles as a result candidate).
    const auto pick = static_cast<std::size_t>(
        std::max_element(items.begin(), items.end()) - items.begin());
    std::swap(items[0], items[pick]);
    const std::int32_t vantage = items[0];

    std::vector<std::pair<double, std::int32_t>> rest;
    rest.reserve(items.size() - 1);
    for (std::size_t t = 1; t < items.size(); ++t)
        rest.emplace_back(dist_(vantage, items[t]), items[t]);
    std::sort(rest.begin(), rest.end());

    if (rest.front().first == rest.back().first) {
        // All remaining objects are equidistant from the vantage: no
        // split can separate them, so keep an oversized leaf.
        make_leaf();
        return node;
    }

    double radius = rest[(rest.size() - 1) / 2].first;
    if (radius == rest.front().first) {
        // Push the boundary up to the next distinct distance so the
        // inner child is nonempty and recursion shrinks.
        for (const auto& p : rest)
            if (p.first > radius) {
                radius = p.first;
                break;
            }
    }

    std::vector<std::int32_t> inner_items, outer_items;
    for (const auto& [d, idx] : rest)
        (d < radius ? inner_items : outer_items).push_back(idx);

    node->vantage = vantage;
    node->rep = vantage;
    node->radius = radius;
    node->inner = build(std::move(inner_items));
    node->outer = build(std::move(outer_items));
    return node;
}

void VpTree::accept_candidate(std::int32_t j, double d, Search& s) {
    if (!lex_less(s.last_dist, s.last_index, d, j)) return; // already emitted
    if (s.heap.size() >= s.cap) {
        const Neighbor& top = s.heap.front();
        if (!lex_less(d, j, top.dist, top.index)) return;
        std::pop_heap(s.heap.begin(), s.heap.end(), heap_before);
        s.heap.back() = {j, d};
        std::push_heap(s.heap.begin(), s.heap.end(), heap_before);
    } else {
        if (d > s.bound) return;
        s.heap.push_back({j, d});
        std::push_heap(s.heap.begin(), s.heap.end(), heap_before);
    }
}

void VpTree::search_node(Node* node, Search& s) const {
    const bool pruning = s.ds != nullptr;

    if (node->vantage < 0) { // leaf
        std::int64_t common = -1;
        bool uniform = pruning && !node->same_set;
        for (const std::int32_t obj : node->items) {
            std::int64_t obj_root = -1;
            if (pruning) {
                obj_root = s.ds->find_set(obj);
                if (uniform) {
                    if (common < 0)
                        common = obj_root;
                    else if (common != obj_root)
                        uniform = false;
                }
            }
            if (obj <= s.query) continue; // never compute d for j <= i
            if (pruning && obj_root == s.query_root) continue;
            accept_candidate(obj, dist_(s.query, obj), s);
        }
        if (uniform) node->same_set = true;
        return;
    }

    // Candidate + routing distance, available only when the vantage has
    // a larger index than the query object.
    const bool have_dv = node->vantage > s.query;
    double dv = 0.0;
    if (have_dv) {
        dv = dist_(s.query, node->vantage);
        if (!pruning || s.ds->find_set(node->vantage) != s.query_root)
            accept_candidate(node->vantage, dv, s);
    }

    const double upper = s.heap.size() >= s.cap ? s.heap.front().dist : s.bound;

    // A child is skipped when its reachable distance interval cannot
    // intersect [last_dist, upper]; boundaries stay inclusive so ties are
    // never lost.
    const auto try_child = [&](Node* child, double lo, double hi) {
        if (!child) return;
        ++s.visited;
        if (child->max_index <= s.query) {
            ++s.pruned;
            return;
        }
        if (pruning && child->same_set &&
            s.ds->find_set(child->rep) == s.query_root) {
            ++s.pruned;
            return;
        }
        if (have_dv && (lo > upper || hi < s.last_dist)) {
            ++s.pruned;
            return;
        }
        search_node(child, s);
    };

    const double inner_lo = have_dv ? std::max(0.0, dv - node->radius) : 0.0;
    const double inner_hi = have_dv ? dv + node->radius : kInf;
    const double outer_lo = have_dv ? std::max(0.0, node->radius - dv) : 0.0;

    if (have_dv && dv < node->radius) {
        try_child(node->inner.get(), inner_lo, inner_hi);
        try_child(node->outer.get(), outer_lo, kInf);
    } else {
        try_child(node->outer.get(), outer_lo, kInf);
        try_child(node->inner.get(), inner_lo, inner_hi);
    }

    // Lazy upward propagation of the verified-one-set flag.
    if (pruning && !node->same_set) {
        const Node* in = node->inner.get();
        const Node* out = node->outer.get();
        if ((!in || in->same_set) && (!out || out->same_set)) {
            const std::int64_t rv = s.ds->find_set(node->vantage);
            if ((!in || s.ds->find_set(in->rep) == rv) &&
                (!out || s.ds->find_set(out->rep) == rv))
                node->same_set = true;
        }
    }
}

void VpTree::refill(std::int32_t i, SizedDisjointSets* ds) {
    Stream& st = streams_[static_cast<std::size_t>(i)];
    if (st.exhausted || !st.cache.empty()) return;
    if (st.returned >= n_ - 1 - i) {
        st.exhausted = true;
        return;
    }

    Search s;
    s.query = i;
    s.ds = ds;
    s.query_root = ds ? ds->find_set(i) : -1;
    // No point keeping a heap larger than what can still be returned: a
    // full heap is what turns on distance-window pruning.
    const std::int64_t remaining = n_ - 1 - i - st.returned;
    s.cap = static_cast<std::size_t>(
        std::min<std::int64_t>(st.batch, remaining));
    s.heap.reserve(s.cap);
    s.last_dist = st.last_dist;
    s.last_index = st.last_index;
    if (st.bootstrap_mate >= 0) {
        // Sound as a bound only while the mate is itself an eligible
        // result; otherwise search unbounded.
        if (!ds || ds->find_set(st.bootstrap_mate) != s.query_root)
            s.bound = st.bootstrap_dist;
        st.bootstrap_mate = -1;
    }

    search_node(root_.get(), s);

    if (s.heap.empty()) {
        // Nothing eligible remains: every j > i beyond the cursor is
        // already in i's set (and sets only grow) or does not exist.
        st.exhausted = true;
        return;
    }
    std::sort(s.heap.begin(), s.heap.end(), heap_before);
    for (const auto& nb : s.heap) st.cache.push_back(nb);
    st.last_dist = st.cache.back().dist;
    st.last_index = st.cache.back().index;

    // >= 50% of considered children pruned: the tree is discriminating
    // well for this stream, so fetch bigger batches next time.
    if (s.pruned * 2 >= s.visited)
        st.batch = std::min(st.batch * 2, batch_max_);
}

std::optional<VpTree::Neighbor> VpTree::next_nearest_neighbor(
    std::int32_t i, SizedDisjointSets* ds) {
    if (i < 0 || i >= n_)
        fail(ErrorCode::invalid_argument, "query index out of range");
    Stream& st = streams_[static_cast<std::size_t>(i)];
    if (st.cache.empty()) refill(i, ds);
    if (st.cache.empty()) return std::nullopt;
    const Neighbor nb = st.cache.front();
    st.cache.pop_front();
    ++st.returned;
    return nb;
}

void VpTree::mark_linked(std::int32_t, std::int32_t) {}

namespace {

struct EdgeCand {
    double dist;
    std::int32_t index1; // stream owner; unique among queued candidates
    std::int32_t index2;
};

struct EdgeCandAfter {
    bool operator()(const EdgeCand& a, const EdgeCand& b) const {
        if (a.dist != b.dist) return a.dist > b.dist;
        if (a.index1 != b.index1) return a.index1 > b.index1;
        return a.index2 > b.index2;
    }
};

} // namespace

Mst mst_kruskal_nn(const Distance& dist, int threads) {
    const std::int64_t n = dist.size();
    if (threads < 1) threads = 1;
    Mst mst;
    mst.n = n;
    if (n <= 1) return mst;
    mst.edges.reserve(static_cast<std::size_t>(n - 1));

    VpTree tree(dist);

    // First candidate of every stream, fetched without union-find pruning
    // so the searches touch disjoint state and may run concurrently.
    // Object n-1 owns no stream (it has no neighbor with a larger index).
    std::vector<VpTree::Neighbor> head(static_cast<std::size_t>(n - 1),
                                       VpTree::Neighbor{-1, 0.0});
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64) \
    if (threads > 1)
#endif
    for (std::int64_t i = 0; i < n - 1; ++i) {
        const auto nb =
            tree.next_nearest_neighbor(static_cast<std::int32_t>(i), nullptr);
        if (nb) head[static_cast<std::size_t>(i)] = *nb;
    }

    std::priority_queue<EdgeCand, std::vector<EdgeCand>, EdgeCandAfter> pq;
    for (std::int64_t i = 0; i < n - 1; ++i) {
        const auto& nb = head[static_cast<std::size_t>(i)];
        if (nb.index < 0)
            fail(ErrorCode::internal, "empty neighbor stream during setup");
        pq.push({nb.dist, static_cast<std::int32_t>(i), nb.index});
    }

    SizedDisjointSets ds(n);
    const auto refetch = [&](std::int32_t i) {
        const auto nb = tree.next_nearest_neighbor(i, &ds);
        if (nb) pq.push({nb->dist, i, nb->index});
    };

    // Streaming merge of per-object ascending candidate lists: pops come
    // out in global (dist, index1, index2) order, so this is Kruskal with
    // same-set pairs filtered either here or inside the tree.
    while (static_cast<std::int64_t>(mst.edges.size()) < n - 1) {
        if (pq.empty())
            fail(ErrorCode::internal,
                 "neighbor streams exhausted before the tree was connected");
        const EdgeCand c = pq.top();
        pq.pop();
        const std::int64_t r1 = ds.find_set(c.index1);
        const std::int64_t r2 = ds.find_set(c.index2);
        if (r1 != r2) {
            ds.link(r1, r2);
            mst.edges.push_back({c.index1, c.index2, c.dist});
        }
        refetch(c.index1);
    }
    return mst;
}

} // namespace genie
