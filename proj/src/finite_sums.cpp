#include "folkman/finite_sums.hpp"

#include <algorithm>

namespace folkman {

std::vector<u64> fs_set(std::span<const u64> elements) {
    const std::size_t n = elements.size();
    if (n > kMaxFsElements) {
        throw UsageError("at most " + std::to_string(kMaxFsElements) + " elements supported, got " +
                         std::to_string(n));
    }
    std::vector<u64> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] == 0) throw UsageError("elements must be positive");
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw UsageError("duplicate element " + std::to_string(sorted[i]));
        }
    }

    std::vector<u64> sums;
    if (n == 0) return sums;
    sums.reserve((std::size_t{1} << n) - 1);
    for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
        u64 sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (u64{1} << i)) sum = checked_add(sum, sorted[i]);
        }
        sums.push_back(sum);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

void FSState::check_extendable(u64 y) const {
    if (y == 0) throw UsageError("elements must be positive");
    if (elements_.size() >= kMaxFsElements) {
        throw UsageError("at most " + std::to_string(kMaxFsElements) + " elements supported");
    }
    if (std::binary_search(elements_.begin(), elements_.end(), y)) {
        throw UsageError("duplicate element " + std::to_string(y));
    }
}

FSState FSState::extend(u64 y) const {
    check_extendable(y);

    FSState next;
    next.elements_ = elements_;
    next.elements_.insert(std::upper_bound(next.elements_.begin(), next.elements_.end(), y), y);
    next.total_ = checked_add(total_, y);

    // delta is already sorted: y < s + y for every old sum s >= 1
    std::vector<u64> delta = delta_sums(y);
    next.sums_.reserve(sums_.size() + delta.size());
    std::merge(sums_.begin(), sums_.end(), delta.begin(), delta.end(), std::back_inserter(next.sums_));
    next.sums_.erase(std::unique(next.sums_.begin(), next.sums_.end()), next.sums_.end());
    return next;
}

std::vector<u64> FSState::delta_sums(u64 y) const {
    check_extendable(y);
    std::vector<u64> delta;
    delta.reserve(sums_.size() + 1);
    delta.push_back(y);
    for (u64 s : sums_) delta.push_back(checked_add(s, y));
    return delta;
}

}  // namespace folkman
