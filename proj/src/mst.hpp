#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "metrics.hpp"

namespace genie {

// Weighted edge of the spanning tree; endpoints are 0-based object
// indices normalized to index1 < index2.
struct MstEdge {
    std::int32_t index1;
    std::int32_t index2;
    double dist;
};

struct Mst {
    std::int64_t n = 0;          // number of objects
    std::vector<MstEdge> edges;  // exactly n-1 edges, discovery order

    double total_weight() const {
        double s = 0.0;
        for (const auto& e : edges) s += e.dist;
        return s;
    }
};

// Exhaustive Prim scan over the implicit complete graph. Performs exactly
// (n^2-n)/2 dissimilarity calls; the candidate-update loop is partitioned
// across `threads` workers with a deterministic (dist, index) reduction,
// so results are identical for any worker count.
Mst mst_prim(const Distance& dist, int threads);

// Kruskal over per-object nearest-neighbor streams served by a
// vantage-point tree (declared in vptree.hpp). Exact MST; typically far
// fewer dissimilarity calls than Prim in low dimension. Deterministic:
// the tree build uses no randomness and `threads` only parallelizes the
// initial stream prefetch.
Mst mst_kruskal_nn(const Distance& dist, int threads);

// Debug dump: one line per edge, `index1 index2 dist`, 1-based endpoints,
// 12 significant digits.
void write_mst(std::ostream& out, const Mst& mst);

} // namespace genie
