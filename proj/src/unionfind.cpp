#include "unionfind.hpp"

namespace genie {

SizedDisjointSets::SizedDisjointSets(std::int64_t n)
    : n_(n),
      parent_(static_cast<std::size_t>(n)),
      rank_(static_cast<std::size_t>(n), 0),
      size_(static_cast<std::size_t>(n), 1),
      size_freq_(static_cast<std::size_t>(n) + 1, 0),
      set_count_(n),
      min_size_(1) {
    if (n < 1) fail(ErrorCode::invalid_argument, "union-find needs n >= 1");
    for (std::int64_t i = 0; i < n; ++i)
        parent_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
    size_freq_[1] = n;
}

std::int64_t SizedDisjointSets::find_set(std::int64_t i) {
    if (i < 0 || i >= n_)
        fail(ErrorCode::invalid_argument, "element index out of range");
    std::int32_t root = static_cast<std::int32_t>(i);
    while (parent_[static_cast<std::size_t>(root)] != root)
        root = parent_[static_cast<std::size_t>(root)];
    // Path compression.
    std::int32_t cur = static_cast<std::int32_t>(i);
    while (parent_[static_cast<std::size_t>(cur)] != root) {
        const std::int32_t next = parent_[static_cast<std::size_t>(cur)];
        parent_[static_cast<std::size_t>(cur)] = root;
        cur = next;
    }
    return root;
}

void SizedDisjointSets::link(std::int64_t i, std::int64_t j) {
    std::int64_t a = find_set(i);
    std::int64_t b = find_set(j);
    if (a == b)
        fail(ErrorCode::internal, "link() called on elements of one set");
    // Union by rank.
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)])
        std::swap(a, b);
    else if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)])
        ++rank_[static_cast<std::size_t>(a)];
    const std::int64_t sa = size_[static_cast<std::size_t>(a)];
    const std::int64_t sb = size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(a);
    size_[static_cast<std::size_t>(a)] = sa + sb;

    --size_freq_[static_cast<std::size_t>(sa)];
    --size_freq_[static_cast<std::size_t>(sb)];
    ++size_freq_[static_cast<std::size_t>(sa + sb)];
    --set_count_;
    // Set sizes only grow, so the smallest size never decreases and the
    // cursor advances at most n times over the structure's lifetime.
    while (size_freq_[static_cast<std::size_t>(min_size_)] == 0) ++min_size_;
}

} // namespace genie
