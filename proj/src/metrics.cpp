#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace genie {

Metric metric_from_name(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "maximum") return Metric::maximum;
    if (name == "hamming") return Metric::hamming;
    if (name == "levenshtein") return Metric::levenshtein;
    fail(ErrorCode::config, "unknown metric: " + name);
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
        case Metric::maximum: return "maximum";
        case Metric::hamming: return "hamming";
        case Metric::levenshtein: return "levenshtein";
    }
    return "?";
}

bool metric_is_numeric(Metric m) {
    return m == Metric::euclidean || m == Metric::manhattan ||
           m == Metric::maximum;
}

Distance::Distance(const Dataset& data, Metric metric, CallCounter& counter)
    : data_(data), metric_(metric), counter_(counter) {
    const bool numeric = data.kind() == Dataset::Kind::numeric;
    if (metric_is_numeric(metric) != numeric)
        fail(ErrorCode::config,
             std::string(metric_name(metric)) + " is incompatible with a " +
                 (numeric ? "numeric" : "string") + " dataset");
}

namespace {

double levenshtein(const std::string& a, const std::string& b) {
    // Classic two-row dynamic program, unit costs.
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0) return static_cast<double>(lb);
    if (lb == 0) return static_cast<double>(la);
    std::vector<std::int32_t> prev(lb + 1), cur(lb + 1);
    for (std::size_t j = 0; j <= lb; ++j) prev[j] = static_cast<std::int32_t>(j);
    for (std::size_t i = 1; i <= la; ++i) {
        cur[0] = static_cast<std::int32_t>(i);
        for (std::size_t j = 1; j <= lb; ++j) {
            const std::int32_t sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(prev[lb]);
}

} // namespace

double Distance::operator()(std::int64_t i, std::int64_t j) const {
    counter_.count.fetch_add(1, std::memory_order_relaxed);
    switch (metric_) {
        case Metric::euclidean: {
            const double* x = data_.row(i);
            const double* y = data_.row(j);
            double s = 0.0;
            for (std::int64_t m = 0; m < data_.dim(); ++m) {
                const double d = x[m] - y[m];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Metric::manhattan: {
            const double* x = data_.row(i);
            const double* y = data_.row(j);
            double s = 0.0;
            for (std::int64_t m = 0; m < data_.dim(); ++m)
                s += std::fabs(x[m] - y[m]);
            return s;
        }
        case Metric::maximum: {
            const double* x = data_.row(i);
            const double* y = data_.row(j);
            double s = 0.0;
            for (std::int64_t m = 0; m < data_.dim(); ++m)
                s = std::max(s, std::fabs(x[m] - y[m]));
            return s;
        }
        case Metric::hamming: {
            const std::string& a = data_.str(i);
            const std::string& b = data_.str(j);
            if (a.size() != b.size())
                fail(ErrorCode::config,
                     "hamming requires equal-length strings (got " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + ")");
            std::int64_t c = 0;
            for (std::size_t m = 0; m < a.size(); ++m) c += a[m] != b[m];
            return static_cast<double>(c);
        }
        case Metric::levenshtein:
            return levenshtein(data_.str(i), data_.str(j));
    }
    fail(ErrorCode::internal, "unreachable metric dispatch");
}

} // namespace genie
