#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "metrics.hpp"
#include "mst.hpp"
#include "unionfind.hpp"

namespace genie {

// One agglomerative merge. Ids: original objects are 1..n; the cluster
// formed at step t (1-based) gets id n+t. left < right always.
struct MergeStep {
    std::int64_t left;
    std::int64_t right;
    double height; // may be non-monotone across steps (reversals happen)
};

struct MergeHistory {
    std::int64_t n = 0;
    std::vector<MergeStep> steps; // exactly n-1
};

// Priority queue over the unconsumed MST edges, ordered by
// (dist, index1, index2) ascending, with a conditional pop that moves
// non-qualifying edges to an auxiliary holding area. The aux area stays
// valid while the minimum set size is unchanged (set sizes only grow, so
// an edge that failed the minimum-size test keeps failing); it is drained
// back automatically otherwise.
class EdgeQueue {
public:
    explicit EdgeQueue(const std::vector<MstEdge>& edges);

    bool empty() const { return heap_.empty() && aux_.empty(); }
    std::size_t size() const { return heap_.size() + aux_.size(); }

    // Cheapest unconsumed edge overall.
    MstEdge pop_min();
    // Cheapest unconsumed edge with at least one endpoint in a
    // minimum-size set of `ds`.
    MstEdge pop_min_touching_min_size(SizedDisjointSets& ds);

private:
    void drain_aux();

    std::vector<MstEdge> heap_;
    std::vector<MstEdge> aux_;
    std::int64_t aux_min_size_ = -1; // min size the aux entries failed against
};

// The Genie criterion: single linkage over the MST, except that when the
// Gini index of the current cluster sizes exceeds `gini_threshold`, only
// edges touching a minimum-size cluster are eligible.
MergeHistory genie_linkage(const Mst& mst, double gini_threshold);

// Plain single linkage: consume MST edges in ascending order.
MergeHistory single_linkage(const Mst& mst);

enum class ClassicScheme { complete, average, ward };
ClassicScheme classic_scheme_from_name(const std::string& name);

// Stored-matrix agglomerative clustering with Lance-Williams updates.
// Ward runs on squared dissimilarities and records heights on that scale.
// Intentionally O(n^2) memory; refuses n > matrix_cap.
MergeHistory classic_linkage(const Distance& dist, ClassicScheme scheme,
                             std::int64_t matrix_cap = 20000);

// Labels 1..k after undoing the last k-1 merges (by merge order, not
// height). Components are numbered in order of their smallest member.
std::vector<std::int32_t> cut(const MergeHistory& history, std::int64_t k);

// One line per step: `left right height`, objects as -1..-n, clusters as
// their 1-based step number, heights with 12 significant digits.
void write_history(std::ostream& out, const MergeHistory& history);

} // namespace genie
