#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace genie {

// Uniform handle over the two object stores the engine clusters:
// fixed-width numeric vectors and (possibly varying-length) strings.
// Objects are immutable for the lifetime of a clustering run.
class Dataset {
public:
    enum class Kind { numeric, strings };

    Dataset() = default; // empty numeric dataset, n = 0

    static Dataset from_matrix(std::vector<double> values, std::int64_t n,
                               std::int64_t dim);
    static Dataset from_strings(std::vector<std::string> strings);

    Kind kind() const { return kind_; }
    std::int64_t size() const { return n_; }
    // Vector length; 0 for string datasets (lengths may vary per object).
    std::int64_t dim() const { return dim_; }

    const double* row(std::int64_t i) const {
        return values_.data() + static_cast<std::size_t>(i * dim_);
    }
    const std::string& str(std::int64_t i) const {
        return strings_[static_cast<std::size_t>(i)];
    }

    // New dataset whose object i is this dataset's object perm[i].
    Dataset permuted(const std::vector<std::int64_t>& perm) const;

private:
    Kind kind_ = Kind::numeric;
    std::int64_t n_ = 0;
    std::int64_t dim_ = 0;
    std::vector<double> values_;      // row-major, numeric kind
    std::vector<std::string> strings_; // string kind
};

} // namespace genie
