#pragma once

// Shared helpers for the unit tests: little data generators and
// from-first-principles reference implementations ("oracles") that the
// production code is checked against. Oracles favour obviousness over
// speed; none of them share code with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace testutil {

inline genie::Dataset random_matrix(genie::Rng& rng, std::int64_t n,
                                    std::int64_t dim, double lo = -5.0,
                                    double hi = 5.0) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n * dim));
    for (std::int64_t i = 0; i < n * dim; ++i)
        values.push_back(rng.next_uniform(lo, hi));
    return genie::Dataset::from_matrix(std::move(values), n, dim);
}

// Random points with a deliberate share of exact duplicates, to exercise
// zero distances and tie handling.
inline genie::Dataset random_matrix_with_dups(genie::Rng& rng, std::int64_t n,
                                              std::int64_t dim) {
    std::vector<double> values(static_cast<std::size_t>(n * dim));
    for (std::int64_t i = 0; i < n; ++i) {
        if (i > 0 && rng.next_below(4) == 0) {
            const auto src = static_cast<std::int64_t>(rng.next_below(
                static_cast<std::uint32_t>(i)));
            std::copy_n(values.begin() + src * dim, dim,
                        values.begin() + i * dim);
        } else {
            for (std::int64_t d = 0; d < dim; ++d)
                values[static_cast<std::size_t>(i * dim + d)] =
                    rng.next_uniform(-3.0, 3.0);
        }
    }
    return genie::Dataset::from_matrix(std::move(values), n, dim);
}

inline std::vector<std::string> random_strings(genie::Rng& rng, std::int64_t n,
                                               std::int64_t min_len,
                                               std::int64_t max_len,
                                               const std::string& alphabet) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const auto len = min_len + static_cast<std::int64_t>(rng.next_below(
                                       static_cast<std::uint32_t>(
                                           max_len - min_len + 1)));
        std::string s;
        for (std::int64_t c = 0; c < len; ++c)
            s.push_back(alphabet[rng.next_below(
                static_cast<std::uint32_t>(alphabet.size()))]);
        out.push_back(std::move(s));
    }
    return out;
}

// Plain recursive-with-memo edit distance; deliberately not the usual
// iterative DP so it cannot share a bug with the production code.
inline std::int64_t edit_distance_reference(const std::string& a,
                                            const std::string& b) {
    const std::int64_t la = static_cast<std::int64_t>(a.size());
    const std::int64_t lb = static_cast<std::int64_t>(b.size());
    std::vector<std::int64_t> memo(
        static_cast<std::size_t>((la + 1) * (lb + 1)), -1);
    auto solve = [&](auto&& self, std::int64_t i, std::int64_t j) -> std::int64_t {
        if (i == la) return lb - j;
        if (j == lb) return la - i;
        auto& slot = memo[static_cast<std::size_t>(i * (lb + 1) + j)];
        if (slot >= 0) return slot;
        std::int64_t best = self(self, i + 1, j + 1) +
                            (a[static_cast<std::size_t>(i)] ==
                                     b[static_cast<std::size_t>(j)]
                                 ? 0
                                 : 1);
        best = std::min(best, self(self, i + 1, j) + 1);
        best = std::min(best, self(self, i, j + 1) + 1);
        slot = best;
        return best;
    };
    return solve(solve, 0, 0);
}

// Direct evaluation of the vector metrics from their definitions.
inline double vector_metric_reference(genie::Metric m, const double* x,
                                      const double* y, std::int64_t dim) {
    double acc = 0.0;
    switch (m) {
    case genie::Metric::euclidean:
        for (std::int64_t d = 0; d < dim; ++d)
            acc += (x[d] - y[d]) * (x[d] - y[d]);
        return std::sqrt(acc);
    case genie::Metric::manhattan:
        for (std::int64_t d = 0; d < dim; ++d) acc += std::fabs(x[d] - y[d]);
        return acc;
    case genie::Metric::maximum:
        for (std::int64_t d = 0; d < dim; ++d)
            acc = std::max(acc, std::fabs(x[d] - y[d]));
        return acc;
    default:
        return -1.0;
    }
}

// Gini index straight from its definition: mean absolute difference over
// all ordered pairs, normalized by (m-1) * sum.
inline double gini_reference(const std::vector<std::int64_t>& sizes) {
    const std::int64_t m = static_cast<std::int64_t>(sizes.size());
    if (m <= 1) return 0.0;
    long double diff = 0.0L;
    long double total = 0.0L;
    for (std::int64_t i = 0; i < m; ++i) {
        total += static_cast<long double>(sizes[static_cast<std::size_t>(i)]);
        for (std::int64_t j = i + 1; j < m; ++j)
            diff += static_cast<long double>(
                std::llabs(sizes[static_cast<std::size_t>(i)] -
                           sizes[static_cast<std::size_t>(j)]));
    }
    if (total == 0.0L) return 0.0;
    return static_cast<double>(diff / (static_cast<long double>(m - 1) * total));
}

// Fowlkes-Mallows from pair counting: TP / sqrt((TP+FP) (TP+FN)) over the
// (n choose 2) object pairs.
inline double fm_reference(const std::vector<std::int32_t>& a,
                           const std::vector<std::int32_t>& b) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    std::int64_t tp = 0, fp = 0, fn = 0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const bool sa = a[static_cast<std::size_t>(i)] ==
                            a[static_cast<std::size_t>(j)];
            const bool sb = b[static_cast<std::size_t>(i)] ==
                            b[static_cast<std::size_t>(j)];
            if (sa && sb) ++tp;
            else if (sa && !sb) ++fn;
            else if (!sa && sb) ++fp;
        }
    return static_cast<double>(tp) /
           std::sqrt(static_cast<double>(tp + fp) *
                     static_cast<double>(tp + fn));
}

// All pairwise distances of a dataset as a dense list of (d, i, j).
struct PairDist {
    double d;
    std::int64_t i, j;
};

inline std::vector<PairDist> all_pairs(const genie::Distance& dist) {
    std::vector<PairDist> out;
    const std::int64_t n = dist.size();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j)
            out.push_back({dist(i, j), i, j});
    return out;
}

// Textbook Kruskal over the full edge list; ties broken by (d, i, j) so
// the result is deterministic even with equal weights.
inline double mst_weight_reference(const genie::Distance& dist) {
    auto edges = all_pairs(dist);
    std::sort(edges.begin(), edges.end(), [](const PairDist& a, const PairDist& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    const std::int64_t n = dist.size();
    std::vector<std::int64_t> root(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) root[static_cast<std::size_t>(i)] = i;
    auto find = [&](std::int64_t x) {
        while (root[static_cast<std::size_t>(x)] != x)
            x = root[static_cast<std::size_t>(x)];
        return x;
    };
    double total = 0.0;
    std::int64_t used = 0;
    for (const auto& e : edges) {
        const auto a = find(e.i), b = find(e.j);
        if (a == b) continue;
        root[static_cast<std::size_t>(a)] = b;
        total += e.d;
        if (++used == n - 1) break;
    }
    return total;
}

} // namespace testutil
