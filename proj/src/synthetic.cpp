#include "synthetic.hpp"

#include "common.hpp"
#include "rng.hpp"

namespace genie {

BlobData gaussian_blobs(std::int64_t n, std::int64_t dim, std::int64_t k,
                        double sigma, std::uint64_t seed) {
    if (n < 1 || dim < 1 || k < 1)
        fail(ErrorCode::invalid_argument,
             "blob generator needs n, dim, k >= 1");
    if (sigma < 0)
        fail(ErrorCode::invalid_argument, "sigma must be non-negative");

    Rng rng(seed);
    std::vector<double> centers(static_cast<std::size_t>(k * dim));
    for (auto& c : centers) c = rng.next_uniform(0.0, 10.0);

    std::vector<double> values(static_cast<std::size_t>(n * dim));
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t c =
            static_cast<std::int64_t>(rng.next_below(static_cast<std::uint32_t>(k)));
        labels[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c + 1);
        for (std::int64_t j = 0; j < dim; ++j)
            values[static_cast<std::size_t>(i * dim + j)] =
                centers[static_cast<std::size_t>(c * dim + j)] +
                sigma * rng.next_normal();
    }
    return {Dataset::from_matrix(std::move(values), n, dim), std::move(labels)};
}

} // namespace genie
