#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace genie {

// Union-find over n elements extended with per-set sizes, the current
// number of sets, and the smallest current set size (all O(1) to query).
class SizedDisjointSets {
public:
    explicit SizedDisjointSets(std::int64_t n);

    std::int64_t find_set(std::int64_t i);
    void link(std::int64_t i, std::int64_t j); // roots must differ

    std::int64_t size_of(std::int64_t i) { return size_[static_cast<std::size_t>(find_set(i))]; }
    std::int64_t min_size() const { return min_size_; }
    std::int64_t set_count() const { return set_count_; }
    std::int64_t element_count() const { return n_; }

private:
    std::int64_t n_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int8_t> rank_;
    std::vector<std::int64_t> size_;      // valid at roots
    std::vector<std::int64_t> size_freq_; // size -> number of sets with it
    std::int64_t set_count_;
    std::int64_t min_size_;
};

} // namespace genie
