#include "mst.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <ostream>

#include "format.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genie {

namespace {

struct Candidate {
    double dist = std::numeric_limits<double>::infinity();
    std::int32_t index = -1;

    bool better_than(const Candidate& o) const {
        return dist < o.dist || (dist == o.dist && index < o.index);
    }
};

} // namespace

Mst mst_prim(const Distance& dist, int threads) {
    const std::int64_t n = dist.size();
    if (threads < 1) threads = 1;
    Mst mst;
    mst.n = n;
    if (n <= 1) return mst;
    mst.edges.reserve(static_cast<std::size_t>(n - 1));

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best_dist(static_cast<std::size_t>(n), inf);
    std::vector<std::int32_t> best_from(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> todo; // objects not yet in the tree
    todo.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t i = 1; i < n; ++i)
        todo.push_back(static_cast<std::int32_t>(i));

    std::int32_t lastj = 0;
    std::vector<Candidate> worker_best(static_cast<std::size_t>(threads));

    for (std::int64_t t = 0; t < n - 1; ++t) {
        const std::int64_t m = static_cast<std::int64_t>(todo.size());
        for (auto& c : worker_best) c = Candidate{};

        // Each worker owns a slice of `todo`: candidate updates are
        // disjoint, and its running best needs no synchronization.
#ifdef _OPENMP
#pragma omp parallel num_threads(threads) if (threads > 1)
#endif
        {
#ifdef _OPENMP
            const int tid = omp_get_thread_num();
#else
            const int tid = 0;
#endif
            Candidate local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (std::int64_t idx = 0; idx < m; ++idx) {
                const std::int32_t u = todo[static_cast<std::size_t>(idx)];
                const double d = dist(lastj, u);
                auto& du = best_dist[static_cast<std::size_t>(u)];
                if (d < du) {
                    du = d;
                    best_from[static_cast<std::size_t>(u)] = lastj;
                }
                const Candidate c{du, u};
                if (c.better_than(local)) local = c;
            }
            worker_best[static_cast<std::size_t>(tid)] = local;
        }

        // Deterministic reduction: (dist, index) lexicographic, so the
        // pick does not depend on how the slice boundaries fell.
        Candidate best;
        for (const auto& c : worker_best)
            if (c.index >= 0 && c.better_than(best)) best = c;
        assert(best.index >= 0);

        const std::int32_t b = best.index;
        const std::int32_t f = best_from[static_cast<std::size_t>(b)];
        mst.edges.push_back({std::min(f, b), std::max(f, b), best.dist});

        todo.erase(std::find(todo.begin(), todo.end(), b));
        lastj = b;
    }
    return mst;
}

void write_mst(std::ostream& out, const Mst& mst) {
    for (const auto& e : mst.edges)
        out << (e.index1 + 1) << ' ' << (e.index2 + 1) << ' '
            << fmt_g12(e.dist) << '\n';
}

} // namespace genie
