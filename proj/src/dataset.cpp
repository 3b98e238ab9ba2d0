#include "dataset.hpp"

#include <cmath>
#include <utility>

namespace genie {

Dataset Dataset::from_matrix(std::vector<double> values, std::int64_t n,
                             std::int64_t dim) {
    if (n < 1 || dim < 1)
        fail(ErrorCode::invalid_argument, "dataset needs n >= 1 and dim >= 1");
    if (values.size() != static_cast<std::size_t>(n * dim))
        fail(ErrorCode::invalid_argument, "matrix size does not match n*dim");
    for (double v : values)
        if (!std::isfinite(v))
            fail(ErrorCode::invalid_argument, "matrix entries must be finite");
    Dataset d;
    d.kind_ = Kind::numeric;
    d.n_ = n;
    d.dim_ = dim;
    d.values_ = std::move(values);
    return d;
}

Dataset Dataset::from_strings(std::vector<std::string> strings) {
    if (strings.empty())
        fail(ErrorCode::invalid_argument, "dataset needs n >= 1");
    Dataset d;
    d.kind_ = Kind::strings;
    d.n_ = static_cast<std::int64_t>(strings.size());
    d.dim_ = 0;
    d.strings_ = std::move(strings);
    return d;
}

Dataset Dataset::permuted(const std::vector<std::int64_t>& perm) const {
    if (perm.size() != static_cast<std::size_t>(n_))
        fail(ErrorCode::invalid_argument, "permutation length mismatch");
    Dataset d;
    d.kind_ = kind_;
    d.n_ = n_;
    d.dim_ = dim_;
    if (kind_ == Kind::numeric) {
        d.values_.resize(values_.size());
        for (std::int64_t i = 0; i < n_; ++i) {
            const double* src = row(perm[static_cast<std::size_t>(i)]);
            double* dst = d.values_.data() + static_cast<std::size_t>(i * dim_);
            for (std::int64_t m = 0; m < dim_; ++m) dst[m] = src[m];
        }
    } else {
        d.strings_.reserve(strings_.size());
        for (std::int64_t i = 0; i < n_; ++i)
            d.strings_.push_back(strings_[static_cast<std::size_t>(
                perm[static_cast<std::size_t>(i)])]);
    }
    return d;
}

} // namespace genie
