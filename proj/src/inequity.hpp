#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "common.hpp"

namespace genie {

// Normalized Gini index of a distribution of non-negative integers
// (cluster cardinalities): sum_{i<j} |x_i - x_j| / ((m-1) * sum x).
// A single-entry distribution has no inequality; returns 0.
double gini_index(std::span<const std::int64_t> sizes);

// Normalized Bonferroni index:
//   n/(n-1) * (1 - sum_{i=1..n} (1/(n-i+1)) * sum_{j=i..n} x_(j) / sum x)
// with x_(1) >= ... >= x_(n). Returns 0 for a single-entry distribution.
double bonferroni_index(std::span<const std::int64_t> sizes);

// Gini index of the evolving cluster-size distribution, updated in
// O(number of distinct sizes) per merge. Keeps the pair-difference sum
// S = sum_{i<j} |c_i - c_j| in exact integer arithmetic so the value
// matches a from-scratch evaluation to the last bit.
class GiniTracker {
public:
    // n singleton clusters.
    explicit GiniTracker(std::int64_t n);
    // Arbitrary starting distribution (sizes need not be sorted).
    explicit GiniTracker(std::span<const std::int64_t> sizes);

    // Replace two existing sizes by their sum.
    void merge(std::int64_t s1, std::int64_t s2);

    double value() const;
    std::int64_t cluster_count() const { return m_; }
    std::int64_t total() const { return n_; }

private:
    void add_size(std::int64_t s);

    std::map<std::int64_t, std::int64_t> freq_; // size -> multiplicity
    std::int64_t n_ = 0;                        // sum of sizes
    std::int64_t m_ = 0;                        // number of sizes
    std::int64_t pair_diff_sum_ = 0;            // sum_{i<j} |c_i - c_j|
};

} // namespace genie
