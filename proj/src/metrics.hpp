#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "common.hpp"
#include "dataset.hpp"

namespace genie {

enum class Metric { euclidean, manhattan, maximum, hamming, levenshtein };

Metric metric_from_name(const std::string& name);
const char* metric_name(Metric m);
bool metric_is_numeric(Metric m);

// Total dissimilarity invocations of a run. Increments may come from
// several workers; totals are only read after they join.
struct CallCounter {
    std::atomic<std::uint64_t> count{0};

    std::uint64_t value() const { return count.load(std::memory_order_relaxed); }
    void reset() { count.store(0, std::memory_order_relaxed); }
};

// Pairwise dissimilarity over a dataset, instrumented with an exact call
// counter. Pure and re-entrant; safe to call from multiple threads.
class Distance {
public:
    Distance(const Dataset& data, Metric metric, CallCounter& counter);

    double operator()(std::int64_t i, std::int64_t j) const;

    const Dataset& data() const { return data_; }
    Metric metric() const { return metric_; }
    std::int64_t size() const { return data_.size(); }

private:
    const Dataset& data_;
    Metric metric_;
    CallCounter& counter_;
};

} // namespace genie
