// Acceptance harness: one line per criterion, [PASS]/[FAIL]/[SKIP].
// Exit status is nonzero iff any criterion fails. Skips mean the check
// could not run in this environment (missing optional dataset, single
// hardware thread) and are spelled out in the detail text.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "engine.hpp"
#include "eval.hpp"
#include "inequity.hpp"
#include "io.hpp"
#include "linkage.hpp"
#include "metrics.hpp"
#include "mst.hpp"
#include "rng.hpp"
#include "synthetic.hpp"
#include "unionfind.hpp"
#include "vptree.hpp"

using namespace genie;

namespace {

constexpr std::uint64_t kProtocolSeed = 0x9e3779b9ull;

enum class Status { pass, fail, skip };

struct Outcome {
    Status status = Status::pass;
    std::string detail;
};

int g_fails = 0;

void report(int index, const std::string& name, const Outcome& outcome) {
    const char* tag = outcome.status == Status::pass   ? "[PASS]"
                      : outcome.status == Status::fail ? "[FAIL]"
                                                       : "[SKIP]";
    if (outcome.status == Status::fail) ++g_fails;
    std::printf("%s criterion %2d: %s%s%s\n", tag, index, name.c_str(),
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// --- small local oracles (independent of src/ internals) --------------

double gini_direct(const std::vector<std::int64_t>& sizes) {
    const auto m = static_cast<std::int64_t>(sizes.size());
    if (m <= 1) return 0.0;
    long double diff = 0.0L, total = 0.0L;
    for (std::int64_t i = 0; i < m; ++i) {
        total += sizes[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < m; ++j)
            diff += std::llabs(sizes[static_cast<std::size_t>(i)] -
                               sizes[static_cast<std::size_t>(j)]);
    }
    return static_cast<double>(diff / ((m - 1) * total));
}

double fm_pairs(const std::vector<std::int32_t>& a,
                const std::vector<std::int32_t>& b) {
    const auto n = static_cast<std::int64_t>(a.size());
    std::int64_t tp = 0, fp = 0, fn = 0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const bool sa = a[static_cast<std::size_t>(i)] ==
                            a[static_cast<std::size_t>(j)];
            const bool sb = b[static_cast<std::size_t>(i)] ==
                            b[static_cast<std::size_t>(j)];
            if (sa && sb) ++tp;
            else if (sa) ++fn;
            else if (sb) ++fp;
        }
    return static_cast<double>(tp) /
           std::sqrt(static_cast<double>(tp + fp) * static_cast<double>(tp + fn));
}

double kruskal_full_matrix(const Distance& dist) {
    struct E {
        double d;
        std::int64_t i, j;
    };
    std::vector<E> edges;
    const std::int64_t n = dist.size();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) edges.push_back({dist(i, j), i, j});
    std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<std::int64_t> parent(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<std::int64_t(std::int64_t)> find = [&](std::int64_t x) {
        return parent[static_cast<std::size_t>(x)] == x
                   ? x
                   : (parent[static_cast<std::size_t>(x)] =
                          find(parent[static_cast<std::size_t>(x)]));
    };
    double total = 0.0;
    std::int64_t used = 0;
    for (const auto& e : edges) {
        const auto a = find(e.i), b = find(e.j);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        total += e.d;
        if (++used == n - 1) break;
    }
    return total;
}

Dataset random_points(Rng& rng, std::int64_t n, std::int64_t dim) {
    std::vector<double> values;
    for (std::int64_t i = 0; i < n * dim; ++i)
        values.push_back(rng.next_uniform(-5.0, 5.0));
    return Dataset::from_matrix(std::move(values), n, dim);
}

MergeHistory cluster_mst(const Dataset& data, double g, MstBackend backend,
                         CallCounter& counter) {
    ClusterConfig config;
    config.algorithm = Algorithm::genie;
    config.gini_threshold = g;
    config.backend = backend;
    return run_clustering(data, Metric::euclidean, config, counter);
}

// Median-of-10 shuffle protocol at the conventional seed.
double protocol_median(const BenchmarkCase& bench, Algorithm algorithm,
                       double g) {
    ClusterConfig config;
    config.algorithm = algorithm;
    config.gini_threshold = g;
    const MedianFmResult r =
        median_fm_protocol(bench.data, bench.metric, config, bench.reference,
                           bench.k, 10, kProtocolSeed);
    return r.median_fm;
}

std::optional<BenchmarkCase> try_load(const std::string& name) {
    try {
        return load_benchmark_case(name);
    } catch (const Error&) {
        return std::nullopt;
    }
}

// ----------------------------------------------------------------------

Outcome criterion1_worked_example() {
    Outcome out;
    CallCounter counter;
    const Dataset data = Dataset::from_matrix({0, 1, 3, 6, 10}, 5, 1);
    const Distance dist(data, Metric::euclidean, counter);

    const auto t0 = std::chrono::steady_clock::now();
    const Mst mst = mst_prim(dist, 1);
    const MergeHistory loose = genie_linkage(mst, 1.0);
    const MergeHistory tight = genie_linkage(mst, 0.3);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::vector<double> weights;
    for (const auto& e : mst.edges) weights.push_back(e.dist);
    std::sort(weights.begin(), weights.end());
    if (weights != std::vector<double>{1, 2, 3, 4}) {
        out.status = Status::fail;
        out.detail = "MST edge weights differ from 1,2,3,4";
        return out;
    }

    // Unconstrained run: chain merges cheapest-first, Gini sequence
    // 0, 0.2, 0.4, 0.6 at 5..2 clusters.
    const auto curve = size_gini_curve(loose);
    const double expect_gini[] = {0.0, 0.2, 0.4, 0.6};
    for (int i = 0; i < 4; ++i)
        if (std::fabs(curve[static_cast<std::size_t>(i)].gini -
                      expect_gini[i]) > 1e-12) {
            out.status = Status::fail;
            out.detail = "g=1.0 Gini sequence mismatch at " +
                         std::to_string(curve[static_cast<std::size_t>(i)].clusters) +
                         " clusters";
            return out;
        }
    const double expect_heights[] = {1, 2, 3, 4};
    for (int i = 0; i < 4; ++i)
        if (loose.steps[static_cast<std::size_t>(i)].height != expect_heights[i]) {
            out.status = Status::fail;
            out.detail = "g=1.0 merge order mismatch";
            return out;
        }

    if (ms >= 1.0) {
        out.status = Status::fail;
        out.detail = "took " + fmt(ms, 3) + " ms (budget 1 ms)";
        return out;
    }

    // Constrained run: the expected 2-partition is {x1,x2,x3} | {x4,x5}.
    const auto labels = cut(tight, 2);
    const std::vector<std::int32_t> expected = {1, 1, 1, 2, 2};
    if (labels != expected) {
        std::string got;
        for (const auto l : labels) got += std::to_string(l);
        out.status = Status::fail;
        out.detail =
            "MST, g=1.0 sequence and timing pass (" + fmt(ms, 3) +
            " ms), but the expected g=0.3 2-partition 11122 is unreachable: "
            "after two merges the sizes are (3,1,1) with Gini 0.4 > 0.3, and "
            "the cheapest edge touching a minimum-size cluster is x3-x4 "
            "(weight 3), not x4-x5 (weight 4), giving " + got +
            ". The same eligibility rule reproduces every reference "
            "benchmark median (criterion 2), so the engine keeps the rule "
            "and this check reports the discrepancy instead of masking it.";
        return out;
    }
    out.detail = "all sub-checks, " + fmt(ms, 3) + " ms";
    return out;
}

Outcome criterion2_reference_spot() {
    Outcome out;
    std::vector<std::string> bad;
    std::vector<std::string> skipped;
    std::vector<std::string> passed;

    const auto iris = try_load("iris");
    if (!iris) {
        out.status = Status::fail;
        out.detail = "bundled iris dataset missing";
        return out;
    }
    struct IrisCheck {
        const char* label;
        Algorithm algorithm;
        double g;
        double expect, tol;
    };
    const IrisCheck iris_checks[] = {
        {"iris/genie(0.2)", Algorithm::genie, 0.2, 0.923, 0.01},
        {"iris/single", Algorithm::single, 0.3, 0.764, 0.01},
        {"iris/ward", Algorithm::ward, 0.3, 0.822, 0.02},
    };
    for (const auto& c : iris_checks) {
        const double got = protocol_median(*iris, c.algorithm, c.g);
        if (std::fabs(got - c.expect) <= c.tol)
            passed.push_back(c.label);
        else
            bad.push_back(std::string(c.label) + " got " + fmt(got));
    }

    struct ExternCheck {
        const char* dataset;
        Algorithm algorithm;
        double g;
        double expect, tol; // tol 0 means "exactly"
    };
    const ExternCheck extern_checks[] = {
        {"flame", Algorithm::genie, 0.2, 1.0, 0.0},
        {"flame", Algorithm::genie, 0.3, 1.0, 0.0},
        {"flame", Algorithm::genie, 0.4, 1.0, 0.0},
        {"flame", Algorithm::genie, 0.5, 1.0, 0.0},
        {"flame", Algorithm::genie, 0.6, 1.0, 0.0},
        {"jain", Algorithm::genie, 0.2, 1.0, 0.0},
        {"spiral", Algorithm::genie, 0.2, 1.0, 0.0},
        {"spiral", Algorithm::single, 0.3, 1.0, 0.0},
        {"pathbased", Algorithm::genie, 0.2, 0.751, 0.01},
    };
    std::map<std::string, std::optional<BenchmarkCase>> cache;
    for (const auto& c : extern_checks) {
        if (!cache.count(c.dataset)) cache[c.dataset] = try_load(c.dataset);
        const auto& slot = cache[c.dataset];
        if (!slot) {
            if (std::find(skipped.begin(), skipped.end(), c.dataset) ==
                skipped.end())
                skipped.push_back(c.dataset);
            continue;
        }
        const double got = protocol_median(*slot, c.algorithm, c.g);
        const std::string label = std::string(c.dataset) + "/" +
                                  (c.algorithm == Algorithm::single
                                       ? "single"
                                       : "genie(" + fmt(c.g, 1) + ")");
        const bool ok = c.tol == 0.0 ? got == c.expect
                                     : std::fabs(got - c.expect) <= c.tol;
        if (ok)
            passed.push_back(label);
        else
            bad.push_back(label + " got " + fmt(got));
    }

    if (!bad.empty()) {
        out.status = Status::fail;
        out.detail = "off target:";
        for (const auto& b : bad) out.detail += " " + b;
        return out;
    }
    out.detail = std::to_string(passed.size()) + " table cells on target";
    if (!skipped.empty()) {
        out.detail += "; not cached locally (run tools/fetch_datasets.sh):";
        for (const auto& s : skipped) out.detail += " " + s;
    }
    return out;
}

Outcome criterion3_midsize() {
    Outcome out;
    struct Check {
        const char* dataset;
        Algorithm algorithm;
        double g;
        double expect, tol;
    };
    const Check checks[] = {
        {"s1", Algorithm::genie, 0.2, 0.989, 0.005},
        {"a1", Algorithm::genie, 0.2, 0.940, 0.01},
        {"unbalance", Algorithm::genie, 0.6, 0.911, 0.02},
        {"unbalance", Algorithm::single, 0.3, 0.999, 0.001},
    };
    std::vector<std::string> bad, skipped, passed;
    std::map<std::string, std::optional<BenchmarkCase>> cache;
    for (const auto& c : checks) {
        if (!cache.count(c.dataset)) cache[c.dataset] = try_load(c.dataset);
        const auto& slot = cache[c.dataset];
        const std::string label = std::string(c.dataset) + "/" +
                                  (c.algorithm == Algorithm::single
                                       ? "single"
                                       : "genie(" + fmt(c.g, 1) + ")");
        if (!slot) {
            if (std::find(skipped.begin(), skipped.end(), c.dataset) ==
                skipped.end())
                skipped.push_back(c.dataset);
            continue;
        }
        const double got = protocol_median(*slot, c.algorithm, c.g);
        if (std::fabs(got - c.expect) <= c.tol)
            passed.push_back(label);
        else
            bad.push_back(label + " got " + fmt(got));
    }
    if (!bad.empty()) {
        out.status = Status::fail;
        out.detail = "off target:";
        for (const auto& b : bad) out.detail += " " + b;
        return out;
    }
    if (passed.empty()) {
        out.status = Status::skip;
        out.detail =
            "datasets not cached locally (run tools/fetch_datasets.sh):";
        for (const auto& s : skipped) out.detail += " " + s;
        return out;
    }
    out.detail = std::to_string(passed.size()) + " cells on target";
    if (!skipped.empty()) {
        out.detail += "; skipped:";
        for (const auto& s : skipped) out.detail += " " + s;
    }
    return out;
}

Outcome criterion4_call_count() {
    Outcome out;
    for (const std::int64_t n : {2, 10, 150, 2048}) {
        const BlobData blobs = gaussian_blobs(n, 3, 4, 1.0, 1000 + static_cast<std::uint64_t>(n));
        CallCounter counter;
        const Distance dist(blobs.points, Metric::euclidean, counter);
        (void)mst_prim(dist, 1);
        const auto expect = static_cast<std::uint64_t>(n) *
                            static_cast<std::uint64_t>(n - 1) / 2;
        if (counter.value() != expect) {
            out.status = Status::fail;
            out.detail = "n=" + std::to_string(n) + ": " +
                         std::to_string(counter.value()) + " calls, expected " +
                         std::to_string(expect);
            return out;
        }
    }
    out.detail = "exact (n^2-n)/2 for n in {2, 10, 150, 2048}";
    return out;
}

Outcome criterion5_backend_equivalence() {
    Outcome out;
    int unique_sets = 0;
    double worst_rel = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const BlobData blobs = gaussian_blobs(
            500, 2, 10, 1.0, 5000 + static_cast<std::uint64_t>(trial));
        CallCounter cp, cv;
        const MergeHistory via_prim =
            cluster_mst(blobs.points, 0.3, MstBackend::prim, cp);
        const MergeHistory via_tree =
            cluster_mst(blobs.points, 0.3, MstBackend::vptree, cv);

        // Compare total weights through the recorded merge heights.
        double wp = 0.0, wv = 0.0;
        for (const auto& s : via_prim.steps) wp += s.height;
        for (const auto& s : via_tree.steps) wv += s.height;
        const double rel = std::fabs(wp - wv) / std::max(1.0, std::fabs(wp));
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-9) {
            out.status = Status::fail;
            out.detail = "trial " + std::to_string(trial) +
                         ": MST weights differ by rel " + fmt(rel, 12);
            return out;
        }

        // Verify uniqueness: all pairwise distances distinct implies a
        // unique MST; only then is partition equality guaranteed.
        CallCounter scratch;
        const Distance dist(blobs.points, Metric::euclidean, scratch);
        std::vector<double> all;
        all.reserve(500 * 499 / 2);
        for (std::int64_t i = 0; i < 500; ++i)
            for (std::int64_t j = i + 1; j < 500; ++j) all.push_back(dist(i, j));
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
        ++unique_sets;

        const double fm = fm_index(cut(via_prim, 10), cut(via_tree, 10));
        if (fm != 1.0) {
            out.status = Status::fail;
            out.detail = "trial " + std::to_string(trial) +
                         ": partitions differ (FM " + fmt(fm, 6) + ")";
            return out;
        }
    }
    if (unique_sets == 0) {
        out.status = Status::fail;
        out.detail = "no trial had a provably unique MST";
        return out;
    }
    out.detail = "20 weight matches (worst rel " + fmt(worst_rel, 12) + "), " +
                 std::to_string(unique_sets) + " unique-MST partition matches";
    return out;
}

Outcome criterion6_oracles() {
    Outcome out;
    Rng rng(0xACCE97);

    // (a) incremental tracker vs direct evaluation.
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(40));
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(n), 1);
        GiniTracker tracker(n);
        while (sizes.size() > 1) {
            const auto a = rng.next_below(static_cast<std::uint32_t>(sizes.size()));
            auto b = rng.next_below(static_cast<std::uint32_t>(sizes.size()));
            while (b == a)
                b = rng.next_below(static_cast<std::uint32_t>(sizes.size()));
            const std::int64_t sa = sizes[a], sb = sizes[b];
            sizes[std::min(a, b)] = sa + sb;
            sizes.erase(sizes.begin() + std::max(a, b));
            tracker.merge(sa, sb);
            if (std::fabs(tracker.value() - gini_direct(sizes)) > 1e-10) {
                out.status = Status::fail;
                out.detail = "(a) tracker drifted from direct Gini";
                return out;
            }
        }
    }

    // (b) neighbor streams vs sorted linear scan, exact.
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = 1 + rng.next_below(50);
        const std::int64_t dim = 1 + rng.next_below(3);
        const Dataset data = random_points(rng, n, dim);
        CallCounter counter;
        const Distance dist(data, Metric::euclidean, counter);
        VpTree tree(dist, 4, 2, 16);
        for (std::int32_t i = 0; i < n; ++i) {
            std::vector<std::pair<double, std::int32_t>> expect;
            for (std::int64_t j = i + 1; j < n; ++j)
                expect.push_back({dist(i, j), static_cast<std::int32_t>(j)});
            std::sort(expect.begin(), expect.end());
            for (const auto& [d, j] : expect) {
                const auto got = tree.next_nearest_neighbor(i, nullptr);
                if (!got || got->index != j || got->dist != d) {
                    out.status = Status::fail;
                    out.detail = "(b) stream mismatch";
                    return out;
                }
            }
            if (tree.next_nearest_neighbor(i, nullptr)) {
                out.status = Status::fail;
                out.detail = "(b) stream not exhausted";
                return out;
            }
        }
    }

    // (c) MST weight vs full-matrix Kruskal, sizes up to 200.
    for (int trial = 0; trial < 25; ++trial) {
        const std::int64_t n =
            trial < 23 ? 2 + rng.next_below(120) : 200;
        const Dataset data = random_points(rng, n, 1 + rng.next_below(3));
        CallCounter counter;
        const Distance dist(data, Metric::euclidean, counter);
        const double expect = kruskal_full_matrix(dist);
        for (const double got : {mst_prim(dist, 1).total_weight(),
                                 mst_kruskal_nn(dist, 1).total_weight()}) {
            if (std::fabs(got - expect) > 1e-12 * std::max(1.0, expect)) {
                out.status = Status::fail;
                out.detail = "(c) MST weight off at n=" + std::to_string(n);
                return out;
            }
        }
    }

    // (d) fm_index vs pair counting.
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 4 + rng.next_below(36);
        auto draw = [&](std::int32_t k) {
            while (true) {
                std::vector<std::int32_t> l;
                for (std::int64_t i = 0; i < n; ++i)
                    l.push_back(1 + static_cast<std::int32_t>(
                                        rng.next_below(static_cast<std::uint32_t>(k))));
                std::map<std::int32_t, int> freq;
                for (const auto v : l) ++freq[v];
                for (const auto& [label, count] : freq)
                    if (count > 1) return l;
            }
        };
        const auto a = draw(2 + rng.next_below(4));
        const auto b = draw(2 + rng.next_below(4));
        if (std::fabs(fm_index(a, b) - fm_pairs(a, b)) > 1e-12) {
            out.status = Status::fail;
            out.detail = "(d) fm_index drifted from pair counting";
            return out;
        }
    }

    // (e) conditional pop vs filtered linear scan, exact.
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(24));
        std::vector<MstEdge> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<std::int32_t>(rng.next_below(
                                 static_cast<std::uint32_t>(v))),
                             static_cast<std::int32_t>(v),
                             std::floor(rng.next_uniform(0.0, 6.0))});
        EdgeQueue queue(edges);
        SizedDisjointSets ds(n);
        std::vector<MstEdge> remaining = edges;
        auto before = [](const MstEdge& a, const MstEdge& b) {
            if (a.dist != b.dist) return a.dist < b.dist;
            if (a.index1 != b.index1) return a.index1 < b.index1;
            return a.index2 < b.index2;
        };
        while (!remaining.empty()) {
            MstEdge want{-1, -1, 0};
            bool found = false;
            MstEdge got{-1, -1, 0};
            if (rng.next_below(2) == 0) {
                const std::int64_t min_size = ds.min_size();
                for (const auto& e : remaining) {
                    if (ds.size_of(e.index1) != min_size &&
                        ds.size_of(e.index2) != min_size)
                        continue;
                    if (!found || before(e, want)) want = e;
                    found = true;
                }
                got = queue.pop_min_touching_min_size(ds);
            } else {
                for (const auto& e : remaining)
                    if (!found || before(e, want)) want = e, found = true;
                got = queue.pop_min();
            }
            if (!found || got.index1 != want.index1 ||
                got.index2 != want.index2 || got.dist != want.dist) {
                out.status = Status::fail;
                out.detail = "(e) conditional pop mismatch";
                return out;
            }
            remaining.erase(std::find_if(
                remaining.begin(), remaining.end(), [&](const MstEdge& e) {
                    return e.index1 == got.index1 && e.index2 == got.index2;
                }));
            if (ds.find_set(got.index1) != ds.find_set(got.index2))
                ds.link(ds.find_set(got.index1), ds.find_set(got.index2));
        }
    }

    // (f) Pigou-Dalton / Schur-convexity, zero violations allowed.
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(10));
        std::vector<std::int64_t> v;
        for (int i = 0; i < m; ++i)
            v.push_back(1 + rng.next_below(30));
        const auto a = rng.next_below(static_cast<std::uint32_t>(m));
        auto b = rng.next_below(static_cast<std::uint32_t>(m));
        if (a == b) continue;
        const auto from = v[a] <= v[b] ? a : b; // concentrate upward
        const auto to = from == a ? b : a;
        if (v[from] == 0) continue;
        const double g0 = gini_index(v), b0 = bonferroni_index(v);
        --v[from];
        ++v[to];
        const double g1 = gini_index(v), b1 = bonferroni_index(v);
        if (g1 < g0 - 1e-12 || b1 < b0 - 1e-12) {
            out.status = Status::fail;
            out.detail = "(f) inequity decreased under concentration";
            return out;
        }
    }

    out.detail = "suites (a)-(f) clean";
    return out;
}

Outcome criterion7_call_ratio() {
    Outcome out;
    const std::int64_t n = 2000;
    const double denom = static_cast<double>(n) * (n - 1) / 2.0;

    const BlobData low = gaussian_blobs(n, 2, 10, 0.5, kProtocolSeed);
    CallCounter c_low;
    const Distance d_low(low.points, Metric::euclidean, c_low);
    (void)mst_kruskal_nn(d_low, 1);
    const double ratio_low = static_cast<double>(c_low.value()) / denom;

    const BlobData high = gaussian_blobs(n, 100, 10, 3.5, kProtocolSeed);
    CallCounter c_high;
    const Distance d_high(high.points, Metric::euclidean, c_high);
    (void)mst_kruskal_nn(d_high, 1);
    const double ratio_high = static_cast<double>(c_high.value()) / denom;

    const bool ok_low = ratio_low < 0.50;
    const bool ok_high = ratio_high >= 0.90;
    out.detail = "d=2: " + fmt(100 * ratio_low, 1) + "% (< 50% wanted), d=100: " +
                 fmt(100 * ratio_high, 1) + "% (>= 90% wanted)";
    if (!ok_low || !ok_high) out.status = Status::fail;
    return out;
}

Outcome criterion8_parallel() {
    Outcome out;
    const BlobData blobs = gaussian_blobs(800, 2, 5, 1.0, 88);

    for (const MstBackend backend : {MstBackend::prim, MstBackend::vptree}) {
        std::string reference;
        for (const int threads : {1, 2, 4}) {
            ClusterConfig config;
            config.backend = backend;
            config.threads = threads;
            CallCounter counter;
            const MergeHistory h =
                run_clustering(blobs.points, Metric::euclidean, config, counter);
            std::ostringstream text;
            write_history(text, h);
            if (threads == 1)
                reference = text.str();
            else if (text.str() != reference) {
                out.status = Status::fail;
                out.detail = std::string("history differs at ") +
                             (backend == MstBackend::prim ? "prim" : "vptree") +
                             "/" + std::to_string(threads) + " workers";
                return out;
            }
        }
    }

    const unsigned cores = std::thread::hardware_concurrency();
    if (cores < 2) {
        out.status = Status::skip;
        out.detail =
            "histories byte-identical across 1/2/4 workers; speedup "
            "unmeasurable on a single-core host (hardware_concurrency = " +
            std::to_string(cores) + ")";
        return out;
    }

    const BlobData big = gaussian_blobs(20000, 10, 10, 2.0, 77);
    CallCounter counter;
    const Distance dist(big.points, Metric::euclidean, counter);
    const auto t1 = std::chrono::steady_clock::now();
    const Mst m1 = mst_prim(dist, 1);
    const auto t2 = std::chrono::steady_clock::now();
    const Mst m4 = mst_prim(dist, 4);
    const auto t3 = std::chrono::steady_clock::now();
    const double s1 = std::chrono::duration<double>(t2 - t1).count();
    const double s4 = std::chrono::duration<double>(t3 - t2).count();
    if (m1.total_weight() != m4.total_weight()) {
        out.status = Status::fail;
        out.detail = "1- and 4-worker trees differ";
        return out;
    }
    const double speedup = s1 / s4;
    out.detail = "histories byte-identical; speedup 1->4 workers " +
                 fmt(speedup, 2) + "x (>= 1.5x wanted)";
    if (speedup < 1.5) out.status = Status::fail;
    return out;
}

Outcome criterion9_single_equivalence() {
    Outcome out;
    Rng rng(0x51461e);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t n = 2 + rng.next_below(80);
        const Dataset data = random_points(rng, n, 1 + rng.next_below(3));
        CallCounter counter;
        const Distance dist(data, Metric::euclidean, counter);
        const Mst mst = mst_prim(dist, 1);
        const MergeHistory a = genie_linkage(mst, 1.0);
        const MergeHistory b = single_linkage(mst);
        for (std::int64_t k = n; k >= 1; --k)
            if (cut(a, k) != cut(b, k)) {
                out.status = Status::fail;
                out.detail = "partition sequences diverge at trial " +
                             std::to_string(trial) + ", k=" + std::to_string(k);
                return out;
            }
    }
    out.detail = "50 instances, identical partition sequences";
    return out;
}

Outcome criterion10_inequity_curves() {
    Outcome out;
    const auto iris = try_load("iris");
    if (!iris) {
        out.status = Status::fail;
        out.detail = "bundled iris dataset missing";
        return out;
    }
    CallCounter counter;
    const Distance dist(iris->data, Metric::euclidean, counter);
    const Mst mst = mst_prim(dist, 1);
    const auto curve_genie = size_gini_curve(genie_linkage(mst, 0.3));
    const auto curve_single = size_gini_curve(single_linkage(mst));

    auto at = [](const std::vector<SizeGiniPoint>& curve, std::int64_t k) {
        for (const auto& p : curve)
            if (p.clusters == k) return p.gini;
        return -1.0;
    };
    for (std::int64_t k = 2; k <= 25; ++k) {
        const double g = at(curve_genie, k);
        const double s = at(curve_single, k);
        if (g > s + 1e-15) {
            out.status = Status::fail;
            out.detail = "genie size-Gini exceeds single linkage at k=" +
                         std::to_string(k) + " (" + fmt(g) + " > " + fmt(s) + ")";
            return out;
        }
    }
    const double s23 = at(curve_single, 23);
    if (s23 < 0.75) {
        out.status = Status::fail;
        out.detail = "single linkage size-Gini at k=23 is " + fmt(s23) +
                     " (>= 0.75 wanted)";
        return out;
    }
    out.detail = "dominance holds for k=2..25; single at k=23: " + fmt(s23);
    return out;
}

} // namespace

int main() {
    report(1, "worked example (5 collinear points)", criterion1_worked_example());
    report(2, "reference benchmark spot checks", criterion2_reference_spot());
    report(3, "mid-size benchmark checks", criterion3_midsize());
    report(4, "prim call-count contract", criterion4_call_count());
    report(5, "backend equivalence on random blobs", criterion5_backend_equivalence());
    report(6, "oracle suites", criterion6_oracles());
    report(7, "vptree call ratio by dimension", criterion7_call_ratio());
    report(8, "parallel determinism and speedup", criterion8_parallel());
    report(9, "threshold-1 equals single linkage", criterion9_single_equivalence());
    report(10, "iris size-inequity curves", criterion10_inequity_curves());

    if (g_fails > 0) {
        std::printf("%d criterion(s) failed\n", g_fails);
        return 1;
    }
    std::printf("all criteria passed or were skipped\n");
    return 0;
}
