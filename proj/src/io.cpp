#include "io.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "format.hpp"

namespace genie {

namespace {

// Whole file through zlib, which hands back plain bytes when the file is
// not gzip-compressed.
std::string read_file_bytes(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) fail(ErrorCode::io, "cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int got;
    while ((got = gzread(f, buf, sizeof(buf))) > 0)
        out.append(buf, static_cast<std::size_t>(got));
    if (got < 0) {
        gzclose(f);
        fail(ErrorCode::io, "read error in " + path);
    }
    gzclose(f);
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

bool is_blank(const std::string& line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\v' && c != '\f') return false;
    return true;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t lineno,
                             const std::string& what) {
    fail(ErrorCode::parse,
         path + ":" + std::to_string(lineno) + ": " + what);
}

} // namespace

Dataset load_points(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    const auto lines = split_lines(bytes);

    std::vector<double> values;
    std::int64_t n = 0, dim = -1;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        std::int64_t cols = 0;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            if (p >= end) break;
            double v;
            const auto res = std::from_chars(p, end, v);
            if (res.ec != std::errc{} ||
                (res.ptr < end && *res.ptr != ' ' && *res.ptr != '\t'))
                parse_fail(path, li + 1, "not a number: '" +
                                             std::string(p, res.ptr == p
                                                                ? end
                                                                : res.ptr) +
                                             "'");
            values.push_back(v);
            ++cols;
            p = res.ptr;
        }
        if (cols == 0) continue;
        if (dim < 0)
            dim = cols;
        else if (cols != dim)
            parse_fail(path, li + 1,
                       "expected " + std::to_string(dim) + " columns, got " +
                           std::to_string(cols));
        ++n;
    }
    if (n == 0) fail(ErrorCode::parse, path + ": no data rows");
    return Dataset::from_matrix(std::move(values), n, dim);
}

std::vector<std::int32_t> load_labels(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    const auto lines = split_lines(bytes);

    std::vector<std::int64_t> raw;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        std::int64_t v;
        const auto res = std::from_chars(p, end, v);
        const char* rest = res.ptr;
        while (rest < end && (*rest == ' ' || *rest == '\t')) ++rest;
        if (res.ec != std::errc{} || rest != end)
            parse_fail(path, li + 1, "not an integer label: '" + line + "'");
        raw.push_back(v);
    }
    if (raw.empty()) fail(ErrorCode::parse, path + ": no labels");

    std::map<std::int64_t, std::int32_t> remap;
    std::vector<std::int32_t> labels;
    labels.reserve(raw.size());
    for (const std::int64_t v : raw) {
        const auto it =
            remap.emplace(v, static_cast<std::int32_t>(remap.size() + 1))
                .first;
        labels.push_back(it->second);
    }
    return labels;
}

Dataset load_strings(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    const auto lines = split_lines(bytes);

    std::vector<std::string> strings;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (lines[li].empty()) {
            if (li + 1 == lines.size()) continue; // trailing newline
            parse_fail(path, li + 1, "empty line in string dataset");
        }
        strings.push_back(lines[li]);
    }
    if (strings.empty()) fail(ErrorCode::parse, path + ": no strings");
    return Dataset::from_strings(std::move(strings));
}

void write_points(const std::string& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write " + path);
    if (data.kind() == Dataset::Kind::strings) {
        for (std::int64_t i = 0; i < data.size(); ++i)
            out << data.str(i) << '\n';
    } else {
        for (std::int64_t i = 0; i < data.size(); ++i) {
            const double* row = data.row(i);
            for (std::int64_t j = 0; j < data.dim(); ++j) {
                if (j) out << ' ';
                out << fmt_g12(row[j]);
            }
            out << '\n';
        }
    }
    if (!out.flush()) fail(ErrorCode::io, "write error on " + path);
}

std::string data_dir() {
    if (const char* env = std::getenv("GENIE_DATA_DIR"); env && *env)
        return env;
    return "data";
}

std::string find_data_file(const std::string& filename) {
    namespace fs = std::filesystem;
    const fs::path base = fs::path(data_dir()) / filename;
    std::error_code ec;
    if (fs::exists(base, ec)) return base.string();
    const fs::path gz = base.string() + ".gz";
    if (fs::exists(gz, ec)) return gz.string();
    return {};
}

bool is_string_dataset(const std::string& name) {
    return name.rfind("actg", 0) == 0 || name.rfind("binstr", 0) == 0;
}

BenchmarkCase load_benchmark_case(const std::string& name) {
    const std::string data_path = find_data_file(name + ".data");
    const std::string labels_path = find_data_file(name + ".labels");
    if (data_path.empty() || labels_path.empty())
        fail(ErrorCode::io, "dataset '" + name + "' not found under " +
                                data_dir() + " (expected " + name +
                                ".data[.gz] and " + name + ".labels[.gz])");

    BenchmarkCase c;
    c.name = name;
    if (is_string_dataset(name)) {
        c.data = load_strings(data_path);
        c.metric = name.rfind("actg", 0) == 0 ? Metric::levenshtein
                                              : Metric::hamming;
    } else {
        c.data = load_points(data_path);
        c.metric = Metric::euclidean;
    }
    c.reference = load_labels(labels_path);
    if (static_cast<std::int64_t>(c.reference.size()) != c.data.size())
        fail(ErrorCode::parse,
             "dataset '" + name + "': " + std::to_string(c.data.size()) +
                 " objects but " + std::to_string(c.reference.size()) +
                 " labels");
    std::int32_t k = 0;
    for (const auto v : c.reference) k = std::max(k, v);
    c.k = k;
    return c;
}

} // namespace genie
