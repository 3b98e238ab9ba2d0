#include "inequity.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace genie {

namespace {

// sum_{i<j} |x_i - x_j|, exact. Sorts a copy; O(m log m).
std::int64_t pair_difference_sum(std::span<const std::int64_t> sizes) {
    std::vector<std::int64_t> x(sizes.begin(), sizes.end());
    std::sort(x.begin(), x.end());
    const std::int64_t m = static_cast<std::int64_t>(x.size());
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < m; ++k)
        s += x[static_cast<std::size_t>(k)] * (2 * k - m + 1);
    return s;
}

} // namespace

double gini_index(std::span<const std::int64_t> sizes) {
    const std::int64_t m = static_cast<std::int64_t>(sizes.size());
    if (m <= 1) return 0.0;
    std::int64_t total = 0;
    for (std::int64_t v : sizes) total += v;
    if (total == 0) return 0.0;
    return static_cast<double>(pair_difference_sum(sizes)) /
           static_cast<double>((m - 1) * total);
}

double bonferroni_index(std::span<const std::int64_t> sizes) {
    const std::int64_t m = static_cast<std::int64_t>(sizes.size());
    if (m <= 1) return 0.0;
    std::int64_t total = 0;
    for (std::int64_t v : sizes) total += v;
    if (total == 0) return 0.0;
    std::vector<std::int64_t> x(sizes.begin(), sizes.end());
    std::sort(x.begin(), x.end(), std::greater<>());
    // sum over i of (suffix sum from i) / (m - i + 1), 1-based i.
    double acc = 0.0;
    std::int64_t suffix = total;
    for (std::int64_t i = 1; i <= m; ++i) {
        acc += static_cast<double>(suffix) / static_cast<double>(m - i + 1);
        suffix -= x[static_cast<std::size_t>(i - 1)];
    }
    return static_cast<double>(m) / static_cast<double>(m - 1) *
           (1.0 - acc / static_cast<double>(total));
}

GiniTracker::GiniTracker(std::int64_t n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "tracker needs n >= 1");
    freq_[1] = n;
    n_ = n;
    m_ = n;
    pair_diff_sum_ = 0;
}

GiniTracker::GiniTracker(std::span<const std::int64_t> sizes) {
    if (sizes.empty())
        fail(ErrorCode::invalid_argument, "tracker needs a nonempty distribution");
    for (std::int64_t s : sizes) add_size(s);
    pair_diff_sum_ = pair_difference_sum(sizes);
}

void GiniTracker::add_size(std::int64_t s) {
    if (s < 1) fail(ErrorCode::invalid_argument, "cluster sizes are positive");
    ++freq_[s];
    n_ += s;
    ++m_;
}

void GiniTracker::merge(std::int64_t s1, std::int64_t s2) {
    auto take = [this](std::int64_t s) {
        auto it = freq_.find(s);
        if (it == freq_.end() || it->second <= 0)
            fail(ErrorCode::internal,
                 "merge of size " + std::to_string(s) + " absent from distribution");
        if (--it->second == 0) freq_.erase(it);
    };
    take(s1);
    take(s2);

    // S over the remaining m-2 sizes changes only through the terms
    // involving s1, s2 and their union.
    const std::int64_t merged = s1 + s2;
    std::int64_t delta = -std::llabs(s1 - s2);
    for (const auto& [v, f] : freq_)
        delta += f * (std::llabs(v - merged) - std::llabs(v - s1) -
                      std::llabs(v - s2));
    pair_diff_sum_ += delta;
    ++freq_[merged];
    --m_;
}

double GiniTracker::value() const {
    if (m_ <= 1) return 0.0;
    return static_cast<double>(pair_diff_sum_) /
           static_cast<double>((m_ - 1) * n_);
}

} // namespace genie
