#pragma once

// Test-only brute-force enumeration of set partitions.  The visitor receives
// the multiset of block sizes; each partition of [n] is visited exactly once
// (blocks are created in order of their smallest element).  Independent of
// the closed-form counting in the library.

#include <vector>

namespace sym2gw::testsupport {

namespace detail {
template <typename Fn>
void partitions_rec(int placed, int n, std::vector<int>& sizes, const Fn& fn) {
    if (placed == n) {
        fn(sizes);
        return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        ++sizes[b];
        partitions_rec(placed + 1, n, sizes, fn);
        --sizes[b];
    }
    sizes.push_back(1);
    partitions_rec(placed + 1, n, sizes, fn);
    sizes.pop_back();
}
}  // namespace detail

template <typename Fn>
void for_each_set_partition(int n, const Fn& fn) {
    std::vector<int> sizes;
    detail::partitions_rec(0, n, sizes, fn);
}

}  // namespace sym2gw::testsupport
