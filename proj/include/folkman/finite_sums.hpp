#pragma once

#include <span>
#include <vector>

#include "folkman/arith.hpp"

namespace folkman {

// 2^24 subset sums is the practical memory ceiling for a desk-scale run.
inline constexpr std::size_t kMaxFsElements = 24;

// All nonempty-subset sums of distinct positive elements (each element used
// at most once), ascending and deduplicated. Direct per-subset enumeration;
// this is the reference route the incremental FSState is checked against.
std::vector<u64> fs_set(std::span<const u64> elements);

// A set X together with fs(X), maintained incrementally. States are
// immutable: extend() returns a new value and leaves the input untouched,
// which is what lets the backtracking search share prefixes.
class FSState {
public:
    FSState() = default;

    const std::vector<u64>& elements() const { return elements_; }
    const std::vector<u64>& sums() const { return sums_; }
    u64 total() const { return total_; }

    // State with y added: sums grow by {y} and {s + y : s in sums}.
    FSState extend(u64 y) const;

    // Exactly {y} union {s + y : s in sums}, ascending. These are the only
    // sums extend() can introduce, so a caller that already knows the old
    // sums are monochromatic only needs to colour-check this frontier.
    std::vector<u64> delta_sums(u64 y) const;

private:
    void check_extendable(u64 y) const;

    std::vector<u64> elements_;  // sorted ascending
    std::vector<u64> sums_;      // sorted ascending, deduplicated
    u64 total_ = 0;
};

}  // namespace folkman
