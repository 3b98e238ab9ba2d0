#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "metrics.hpp"
#include "mst.hpp"
#include "unionfind.hpp"

namespace genie {

// Vantage-point tree over a triangle-inequality metric, specialized for
// streaming "next nearest neighbor with a larger index" queries:
//
//  * every node knows the largest object index in its subtree, so no
//    dissimilarity is ever computed for a pair (i, j) with j <= i during
//    a query for i;
//  * each internal node's vantage is its largest-index object, so any
//    node a query for i actually enters offers a routing distance that
//    is itself a legal result candidate -- one computation both feeds
//    the distance-window pruning and enumerates the vantage;
//  * nodes carry a lazily verified "all objects in one set" flag; when a
//    union-find structure is supplied, subtrees wholly inside the query
//    object's set are skipped (sets only grow, so a true flag stays
//    sound);
//  * results arrive in batches of adaptive size (20 doubling up to 256
//    while a search observes >= 50% of its child visits pruned), cached
//    per object; batching is visible only through the call counter.
//
// Construction is deterministic; streams and flag state evolve
// identically regardless of caller threading, provided concurrent
// queries pass ds == nullptr (read-only mode).
class VpTree {
public:
    struct Neighbor {
        std::int32_t index;
        double dist;
    };

    explicit VpTree(const Distance& dist, std::int32_t leaf_capacity = 16,
                    std::int32_t batch_min = 20, std::int32_t batch_max = 256);
    ~VpTree();

    // The next not-yet-returned j > i in ascending (dist, j) order, or
    // nothing once all such j are exhausted. With `ds` given, subtrees
    // and objects verified to share i's set may be skipped (they can
    // never be useful to an MST merge loop); pass nullptr for the exact
    // full stream. ds == nullptr mode is safe to call concurrently for
    // distinct i.
    std::optional<Neighbor> next_nearest_neighbor(std::int32_t i,
                                                  SizedDisjointSets* ds);

    // Called after ds.link(i, j). Same-set flags refresh lazily during
    // subsequent queries, so there is nothing eager to do; kept so the
    // merge loop reads naturally and the policy stays in one place.
    void mark_linked(std::int32_t i, std::int32_t j);

    std::int64_t size() const { return n_; }

private:
    struct Node;
    struct Stream;
    struct Search;

    std::unique_ptr<Node> build(std::vector<std::int32_t> items);
    void refill(std::int32_t i, SizedDisjointSets* ds);
    void search_node(Node* node, Search& s) const;
    static void accept_candidate(std::int32_t j, double d, Search& s);

    const Distance& dist_;
    std::int64_t n_;
    std::int32_t leaf_capacity_;
    std::int32_t batch_min_;
    std::int32_t batch_max_;
    std::unique_ptr<Node> root_;
    std::vector<Stream> streams_;
};

} // namespace genie
