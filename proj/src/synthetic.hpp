#pragma once

#include <cstdint>
#include <vector>

#include "dataset.hpp"

namespace genie {

struct BlobData {
    Dataset points;
    std::vector<std::int32_t> labels; // generating center of each point, 1..k
};

// n points in R^dim scattered around k cluster centers drawn uniformly
// from [0,10]^dim; each point is a uniformly chosen center plus iid
// normal(0, sigma) noise per coordinate. Deterministic for a fixed seed.
BlobData gaussian_blobs(std::int64_t n, std::int64_t dim, std::int64_t k,
                        double sigma, std::uint64_t seed);

} // namespace genie
