#include "eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "inequity.hpp"
#include "rng.hpp"

namespace genie {

double fm_index(const std::vector<std::int32_t>& a,
                const std::vector<std::int32_t>& b) {
    if (a.size() != b.size())
        fail(ErrorCode::invalid_argument,
             "labelings cover different object counts");
    if (a.empty())
        fail(ErrorCode::invalid_argument, "cannot score empty labelings");
    const std::int64_t n = static_cast<std::int64_t>(a.size());

    std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> cells;
    std::map<std::int32_t, std::int64_t> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++cells[{a[i], b[i]}];
        ++rows[a[i]];
        ++cols[b[i]];
    }

    std::int64_t sum_sq = 0, row_sq = 0, col_sq = 0;
    for (const auto& [key, c] : cells) sum_sq += c * c;
    for (const auto& [key, c] : rows) row_sq += c * c;
    for (const auto& [key, c] : cols) col_sq += c * c;

    if (row_sq == n || col_sq == n)
        fail(ErrorCode::undefined_score,
             "all-singleton partition has no co-clustered pairs");
    return static_cast<double>(sum_sq - n) /
           std::sqrt(static_cast<double>(row_sq - n) *
                     static_cast<double>(col_sq - n));
}

std::vector<SizeGiniPoint> size_gini_curve(const MergeHistory& history) {
    const std::int64_t n = history.n;
    GiniTracker tracker(n);
    std::vector<std::int64_t> size(static_cast<std::size_t>(2 * n), 0);
    for (std::int64_t id = 1; id <= n; ++id)
        size[static_cast<std::size_t>(id)] = 1;

    std::vector<SizeGiniPoint> curve;
    curve.reserve(static_cast<std::size_t>(n));
    curve.push_back({n, tracker.value()});
    std::int64_t t = 0;
    for (const auto& step : history.steps) {
        ++t;
        const std::int64_t s1 = size[static_cast<std::size_t>(step.left)];
        const std::int64_t s2 = size[static_cast<std::size_t>(step.right)];
        tracker.merge(s1, s2);
        size[static_cast<std::size_t>(n + t)] = s1 + s2;
        curve.push_back({n - t, tracker.value()});
    }
    return curve;
}

namespace {
// Linear-interpolation quantile over sorted values, h = (n-1)p.
double quantile_sorted(const std::vector<double>& v, double p) {
    const double h = static_cast<double>(v.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] + (h - static_cast<double>(lo)) * (v[lo + 1] - v[lo]);
}
} // namespace

MedianFmResult median_fm_protocol(const Dataset& data, Metric metric,
                                  const ClusterConfig& config,
                                  const std::vector<std::int32_t>& reference,
                                  std::int64_t k, int runs,
                                  std::uint64_t base_seed) {
    if (runs < 1) fail(ErrorCode::invalid_argument, "runs must be >= 1");
    const std::int64_t n = data.size();
    if (static_cast<std::int64_t>(reference.size()) != n)
        fail(ErrorCode::invalid_argument,
             "reference labels do not cover the dataset");

    MedianFmResult res;
    res.run_scores.reserve(static_cast<std::size_t>(runs));
    CallCounter calls;
    for (int r = 0; r < runs; ++r) {
        Rng rng(base_seed + static_cast<std::uint64_t>(r));
        const auto perm = rng.permutation(n);
        const Dataset shuffled = data.permuted(perm);
        const MergeHistory hist = run_clustering(shuffled, metric, config, calls);
        const auto shuffled_labels = cut(hist, k);
        std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                shuffled_labels[static_cast<std::size_t>(i)];
        res.run_scores.push_back(fm_index(labels, reference));
        res.total_calls += calls.value();
    }

    std::vector<double> sorted = res.run_scores;
    std::sort(sorted.begin(), sorted.end());
    res.median_fm = quantile_sorted(sorted, 0.5);
    return res;
}

SummaryStats summarize(std::vector<double> values) {
    if (values.empty())
        fail(ErrorCode::invalid_argument, "no values to summarize");
    std::sort(values.begin(), values.end());
    SummaryStats s;
    s.min = values.front();
    s.q1 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q3 = quantile_sorted(values, 0.75);
    s.max = values.back();
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

} // namespace genie
