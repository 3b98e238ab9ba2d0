#pragma once

#include <cstdint>
#include <vector>

#include "engine.hpp"
#include "linkage.hpp"

namespace genie {

// Fowlkes-Mallows index between two labelings of the same objects:
// (sum m_ij^2 - n) / sqrt((sum row^2 - n)(sum col^2 - n)) over the
// contingency table. Label values are arbitrary; cluster counts may
// differ. All-singleton partitions make a denominator vanish and raise
// an undefined-score error.
double fm_index(const std::vector<std::int32_t>& a,
                const std::vector<std::int32_t>& b);

struct SizeGiniPoint {
    std::int64_t clusters;
    double gini;
};

// Gini index of the cluster-size distribution at every cut k = n..1,
// computed incrementally along the merge sequence (no per-cut rescans).
std::vector<SizeGiniPoint> size_gini_curve(const MergeHistory& history);

struct MedianFmResult {
    double median_fm = 0.0;
    std::uint64_t total_calls = 0;    // summed over all runs
    std::vector<double> run_scores;   // in run order, for replay/debugging
};

// The benchmark protocol: for run r in 0..runs-1, shuffle the object
// order with an rng seeded base_seed + r, cluster the shuffled data, cut
// at k, map labels back to the original order, and score against
// `reference`. Median of an even run count is the mean of the two
// central order statistics.
MedianFmResult median_fm_protocol(const Dataset& data, Metric metric,
                                  const ClusterConfig& config,
                                  const std::vector<std::int32_t>& reference,
                                  std::int64_t k, int runs,
                                  std::uint64_t base_seed);

struct SummaryStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0, sd = 0;
};

// Five-number summary plus mean and sample standard deviation (sd = 0
// for a single value). Quartiles use linear interpolation between order
// statistics at h = (n-1)p.
SummaryStats summarize(std::vector<double> values);

} // namespace genie
