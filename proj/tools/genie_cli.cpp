#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <genie/genie.h>

namespace {

// Every failing library call funnels through here: message to stderr,
// process exit 1 (data/config problems are not usage errors).
void check(genie_status st) {
    if (st == GENIE_OK) return;
    std::cerr << "error: " << genie_last_error() << "\n";
    std::exit(1);
}

struct DatasetHandle {
    genie_dataset* p = nullptr;
    ~DatasetHandle() { genie_dataset_free(p); }
};
struct LabelsHandle {
    genie_labels* p = nullptr;
    ~LabelsHandle() { genie_labels_free(p); }
};
struct ClusteringHandle {
    genie_clustering* p = nullptr;
    ~ClusteringHandle() { genie_clustering_free(p); }
};
struct OptionsHandle {
    genie_options* p = nullptr;
    OptionsHandle() : p(genie_options_new()) {
        if (!p) {
            std::cerr << "error: out of memory\n";
            std::exit(1);
        }
    }
    ~OptionsHandle() { genie_options_free(p); }
};

bool string_metric(const std::string& metric) {
    return metric == "hamming" || metric == "levenshtein";
}

void load_input(const std::string& path, const std::string& metric,
                DatasetHandle& data) {
    if (string_metric(metric))
        check(genie_dataset_load_strings(path.c_str(), &data.p));
    else
        check(genie_dataset_load_points(path.c_str(), &data.p));
}

int env_threads() {
    if (const char* env = std::getenv("GENIE_THREADS"); env && *env) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Shared preference order used by the benchmark stats line and its
// cross-check test: quartiles by linear interpolation at h = (n-1)p,
// sample standard deviation.
struct Stats {
    double min, q1, median, q3, max, mean, sd;
};

Stats compute_stats(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto q = [&](double p) {
        const double h = static_cast<double>(v.size() - 1) * p;
        const std::size_t lo = static_cast<std::size_t>(h);
        if (lo + 1 >= v.size()) return v.back();
        return v[lo] + (h - static_cast<double>(lo)) * (v[lo + 1] - v[lo]);
    };
    Stats s{};
    s.min = v.front();
    s.q1 = q(0.25);
    s.median = q(0.5);
    s.q3 = q(0.75);
    s.max = v.back();
    double sum = 0;
    for (double x : v) sum += x;
    s.mean = sum / static_cast<double>(v.size());
    s.sd = 0;
    if (v.size() > 1) {
        double ss = 0;
        for (double x : v) ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
    return s;
}

struct CommonFlags {
    std::string metric = "euclidean";
    std::string algorithm = "genie";
    std::string backend = "prim";
    double g = 0.3;
    int threads = 0; // 0 = resolve from GENIE_THREADS, then 1
    std::uint64_t seed = 0x9e3779b9ull;

    void apply(genie_options* o) const {
        check(genie_options_set_algorithm(o, algorithm.c_str()));
        check(genie_options_set_metric(o, metric.c_str()));
        check(genie_options_set_threshold(o, g));
        check(genie_options_set_backend(o, backend.c_str()));
        check(genie_options_set_threads(o, threads > 0 ? threads
                                                       : env_threads()));
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_algorithm) {
    cmd->add_option("--metric", f.metric,
                    "euclidean|manhattan|maximum|hamming|levenshtein")
        ->capture_default_str();
    if (with_algorithm) {
        cmd->add_option("--algorithm", f.algorithm,
                        "genie|single|complete|average|ward")
            ->capture_default_str();
        cmd->add_option("--g", f.g, "Genie threshold, in (0,1]")
            ->capture_default_str();
    }
    cmd->add_option("--backend", f.backend, "MST backend: prim|vptree")
        ->capture_default_str();
    cmd->add_option("--threads", f.threads,
                    "worker count (default: $GENIE_THREADS or 1)");
    cmd->add_option("--seed", f.seed,
                    "seed for synthetic data and benchmark shuffling "
                    "(clustering itself is deterministic)")
        ->capture_default_str();
}

int cmd_cluster(const CommonFlags& flags, const std::string& input,
                const std::string& labels_path, std::int64_t k,
                const std::string& out_path) {
    DatasetHandle data;
    load_input(input, flags.metric, data);

    OptionsHandle opts;
    flags.apply(opts.p);

    const auto t0 = std::chrono::steady_clock::now();
    ClusteringHandle clustering;
    check(genie_cluster(data.p, opts.p, &clustering.p));
    const double elapsed = seconds_since(t0);

    if (!out_path.empty())
        check(genie_clustering_write(clustering.p, out_path.c_str()));

    if (!labels_path.empty()) {
        LabelsHandle reference;
        check(genie_labels_load(labels_path.c_str(), &reference.p));
        const std::int64_t cut_k =
            k > 0 ? k : genie_labels_k(reference.p);
        LabelsHandle cut;
        check(genie_clustering_cut(clustering.p, cut_k, &cut.p));
        double fm_value = 0;
        check(genie_fm_index(cut.p, reference.p, &fm_value));
        std::cout << "k=" << cut_k << " fm=" << fmt(fm_value, "%.4f")
                  << "\n";
    } else if (k > 0) {
        LabelsHandle cut;
        check(genie_clustering_cut(clustering.p, k, &cut.p));
        std::cout << "k=" << k << "\n";
    }

    std::cout << "n=" << genie_dataset_size(data.p)
              << " calls=" << genie_clustering_distance_calls(clustering.p)
              << " backend=" << genie_clustering_backend(clustering.p)
              << " seconds=" << fmt(elapsed, "%.3f") << "\n";
    return 0;
}

struct GridCell {
    std::string algorithm;
    double g = 0; // meaningful only for genie
};

int cmd_benchmark(const CommonFlags& flags,
                  const std::vector<std::string>& datasets,
                  const std::string& csv_path) {
    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    if (!csv_path.empty()) {
        csv_file.open(csv_path, std::ios::binary);
        if (!csv_file) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return 1;
        }
        csv = &csv_file;
    }

    const std::vector<GridCell> grid = {
        {"genie", 0.2}, {"genie", 0.3}, {"genie", 0.4}, {"genie", 0.5},
        {"genie", 0.6}, {"single", 0}, {"complete", 0}, {"average", 0},
        {"ward", 0}};

    *csv << "dataset,algorithm,threshold,metric,k,median_fm,calls\n";
    std::vector<double> medians;
    for (const std::string& name : datasets) {
        DatasetHandle data;
        LabelsHandle reference;
        const char* metric = nullptr;
        const genie_status st =
            genie_benchmark_load(name.c_str(), &data.p, &reference.p, &metric);
        if (st != GENIE_OK) {
            std::cerr << "dataset '" << name
                      << "' skipped: " << genie_last_error() << "\n";
            *csv << name << ",SKIPPED,,,,,\n";
            continue;
        }
        const std::int64_t k = genie_labels_k(reference.p);

        for (const GridCell& cell : grid) {
            OptionsHandle opts;
            CommonFlags cell_flags = flags;
            cell_flags.algorithm = cell.algorithm;
            cell_flags.metric = metric;
            if (cell.algorithm == "genie") cell_flags.g = cell.g;
            cell_flags.apply(opts.p);

            double median = 0;
            std::uint64_t calls = 0;
            check(genie_median_fm(data.p, opts.p, reference.p, k, 10,
                                  flags.seed, &median, &calls));
            medians.push_back(median);

            *csv << name << ',' << cell.algorithm << ',';
            if (cell.algorithm == "genie") *csv << fmt(cell.g, "%.1f");
            *csv << ',' << metric << ',' << k << ','
                 << fmt(median, "%.4f") << ',' << calls << "\n";
        }
    }
    csv->flush();
    if (csv == &csv_file && !csv_file) {
        std::cerr << "error: write error on " << csv_path << "\n";
        return 1;
    }

    if (!medians.empty()) {
        const Stats s = compute_stats(medians);
        std::cerr << "fm summary: min=" << fmt(s.min, "%.4f")
                  << " q1=" << fmt(s.q1, "%.4f")
                  << " median=" << fmt(s.median, "%.4f")
                  << " q3=" << fmt(s.q3, "%.4f")
                  << " max=" << fmt(s.max, "%.4f")
                  << " mean=" << fmt(s.mean, "%.4f")
                  << " sd=" << fmt(s.sd, "%.4f") << "\n";
    }
    return 0;
}

int cmd_callcount(const CommonFlags& flags, std::int64_t n, std::int64_t dim,
                  double sigma) {
    DatasetHandle data;
    check(genie_dataset_blobs(n, dim, 10, sigma, flags.seed, &data.p,
                              nullptr));

    OptionsHandle opts;
    CommonFlags run_flags = flags;
    run_flags.algorithm = "single"; // pure MST cost, no extra calls
    run_flags.metric = "euclidean";
    run_flags.apply(opts.p);

    const auto t0 = std::chrono::steady_clock::now();
    ClusteringHandle clustering;
    check(genie_cluster(data.p, opts.p, &clustering.p));
    const double elapsed = seconds_since(t0);

    const std::uint64_t calls = genie_clustering_distance_calls(clustering.p);
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const double ratio =
        100.0 * static_cast<double>(calls) / static_cast<double>(pairs);
    std::cout << "n=" << n << " dim=" << dim << " sigma=" << fmt(sigma)
              << " backend=" << genie_clustering_backend(clustering.p)
              << " calls=" << calls << " pairs=" << pairs
              << " ratio=" << fmt(ratio, "%.1f") << "%"
              << " seconds=" << fmt(elapsed, "%.3f") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genie hierarchical clustering"};
    app.require_subcommand(1);
    app.set_version_flag("--version", genie_version());

    CommonFlags cluster_flags;
    std::string cluster_input, cluster_labels, cluster_out;
    std::int64_t cluster_k = 0;
    CLI::App* cluster =
        app.add_subcommand("cluster", "cluster one dataset file");
    cluster->add_option("--input", cluster_input, "points/strings file")
        ->required();
    cluster->add_option("--labels", cluster_labels,
                        "reference labels; prints the FM-index of the cut");
    cluster->add_option("--k", cluster_k,
                        "cluster count for the cut (default: from labels)");
    cluster->add_option("--out", cluster_out, "write merge history here");
    add_common_flags(cluster, cluster_flags, true);

    CommonFlags bench_flags;
    std::vector<std::string> bench_datasets;
    std::string bench_csv;
    CLI::App* benchmark = app.add_subcommand(
        "benchmark",
        "median-FM grid (genie g=0.2..0.6, single/complete/average/ward) "
        "over named datasets from $GENIE_DATA_DIR");
    benchmark->add_option("--datasets", bench_datasets, "dataset names")
        ->required()
        ->delimiter(',');
    benchmark->add_option("--csv", bench_csv,
                          "CSV output path (default: stdout)");
    add_common_flags(benchmark, bench_flags, false);

    CommonFlags call_flags;
    std::int64_t call_n = 2000, call_dim = 2;
    double call_sigma = 0.5;
    CLI::App* callcount = app.add_subcommand(
        "callcount",
        "dissimilarity-call ratio of an MST backend on Gaussian blobs");
    callcount->add_option("--n", call_n, "points")->capture_default_str();
    callcount->add_option("--dim", call_dim, "dimensions")
        ->capture_default_str();
    callcount->add_option("--sigma", call_sigma, "noise scale")
        ->capture_default_str();
    add_common_flags(callcount, call_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help, --version
        app.exit(e);
        return 2;
    }

    if (cluster->parsed())
        return cmd_cluster(cluster_flags, cluster_input, cluster_labels,
                           cluster_k, cluster_out);
    if (benchmark->parsed())
        return cmd_benchmark(bench_flags, bench_datasets, bench_csv);
    if (callcount->parsed())
        return cmd_callcount(call_flags, call_n, call_dim, call_sigma);
    return 2;
}
