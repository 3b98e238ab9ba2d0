#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "metrics.hpp"

namespace genie {

// Whitespace-separated numeric rows with a uniform column count; gzip
// files are read transparently. Blank lines are ignored; ragged rows,
// non-numeric tokens, or an empty file raise a parse error naming the
// line.
Dataset load_points(const std::string& path);

// One integer per line, remapped to 1..k in first-appearance order.
std::vector<std::int32_t> load_labels(const std::string& path);

// One non-empty string per line (single-byte alphabets); a trailing
// final newline is fine, interior empty lines are parse errors.
Dataset load_strings(const std::string& path);

// Plain-text writer: numeric rows at 12 significant digits (a
// write/read round trip is exact at that precision), string data one
// object per line.
void write_points(const std::string& path, const Dataset& data);

// Directory consulted for bare dataset names: $GENIE_DATA_DIR when set,
// otherwise ./data.
std::string data_dir();

// First existing candidate among <data_dir>/<filename> and
// <data_dir>/<filename>.gz; empty string when neither exists.
std::string find_data_file(const std::string& filename);

struct BenchmarkCase {
    std::string name;
    Dataset data;
    std::vector<std::int32_t> reference; // 1..k
    std::int64_t k = 0;                  // distinct reference labels
    Metric metric = Metric::euclidean;   // hint derived from the name
};

// String datasets are recognized by name: actg* use levenshtein,
// binstr* use hamming, everything else is numeric euclidean.
bool is_string_dataset(const std::string& name);

// Load <name>.data(.gz) and <name>.labels(.gz) from data_dir().
// Missing files raise an io error (callers typically skip the case).
BenchmarkCase load_benchmark_case(const std::string& name);

} // namespace genie
