#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "folkman/finite_sums.hpp"
#include "oracles.hpp"

using namespace folkman;

namespace {

std::vector<u64> sorted_unique(std::vector<u64> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

FSState build(const std::vector<u64>& elements) {
    FSState state;
    for (u64 e : elements) state = state.extend(e);
    return state;
}

}  // namespace

TEST_SUITE("finite_sums") {

TEST_CASE("fs_set fixtures") {
    CHECK(fs_set(std::vector<u64>{3, 5}) == std::vector<u64>{3, 5, 8});
    CHECK(fs_set(std::vector<u64>{1, 2, 4}) == std::vector<u64>{1, 2, 3, 4, 5, 6, 7});
    CHECK(fs_set(std::vector<u64>{4, 16, 64}) == std::vector<u64>{4, 16, 20, 64, 68, 80, 84});
    CHECK(fs_set(std::vector<u64>{}) == std::vector<u64>{});
}

TEST_CASE("fs_set rejects bad input") {
    CHECK_THROWS_AS(fs_set(std::vector<u64>{3, 3}), UsageError);
    CHECK_THROWS_AS(fs_set(std::vector<u64>{0, 1}), UsageError);
    std::vector<u64> too_many(25);
    for (u64 i = 0; i < 25; ++i) too_many[i] = i + 1;
    CHECK_THROWS_AS(fs_set(too_many), UsageError);
    CHECK_THROWS_AS(fs_set(std::vector<u64>{kValueCap, 1}), OverflowError);
}

TEST_CASE("extend fixtures") {
    const FSState state = build({3, 5});
    CHECK(state.sums() == std::vector<u64>{3, 5, 8});

    const FSState extended = state.extend(8);
    CHECK(extended.elements() == std::vector<u64>{3, 5, 8});
    CHECK(extended.sums() == std::vector<u64>{3, 5, 8, 11, 13, 16});
    // persistence: the old state is untouched
    CHECK(state.sums() == std::vector<u64>{3, 5, 8});

    const FSState single = FSState().extend(7);
    CHECK(single.elements() == std::vector<u64>{7});
    CHECK(single.sums() == std::vector<u64>{7});
    CHECK(single.total() == 7);

    CHECK(build({1, 2, 4, 8}).sums() ==
          std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
}

TEST_CASE("extend rejects duplicates, zero and overflow") {
    const FSState state = build({3, 5});
    CHECK_THROWS_AS(state.extend(5), UsageError);
    CHECK_THROWS_AS(state.extend(0), UsageError);
    CHECK_THROWS_AS(build({2, kValueCap - 1}), OverflowError);
}

TEST_CASE("delta_sums fixtures") {
    CHECK(build({3, 5}).delta_sums(8) == std::vector<u64>{8, 11, 13, 16});
    CHECK(FSState().delta_sums(5) == std::vector<u64>{5});
    CHECK(build({1}).delta_sums(2) == std::vector<u64>{2, 3});
}

TEST_CASE("incremental states match brute force for every small set") {
    // every X within {1..20}, |X| <= 5: 21699 sets
    std::mt19937_64 rng(7);
    std::size_t checked = 0;
    std::vector<u64> pick;
    for (u64 mask = 1; mask < (u64{1} << 20); ++mask) {
        if (std::popcount(mask) > 5) continue;
        pick.clear();
        for (u64 i = 0; i < 20; ++i) {
            if (mask & (u64{1} << i)) pick.push_back(i + 1);
        }
        const std::vector<u64> expected = sorted_unique(oracle::subset_sums(pick));
        REQUIRE(fs_set(pick) == expected);
        REQUIRE(build(pick).sums() == expected);
        // insertion order must not matter
        std::shuffle(pick.begin(), pick.end(), rng);
        REQUIRE(build(pick).sums() == expected);
        ++checked;
    }
    CHECK(checked == 21699);
}

TEST_CASE("extend grows sums monotonically and at most doubles them") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        FSState state;
        for (int step = 0; step < 8; ++step) {
            u64 y = 1 + rng() % 5000;
            while (std::binary_search(state.elements().begin(), state.elements().end(), y)) ++y;
            const FSState next = state.extend(y);
            REQUIRE(std::includes(next.sums().begin(), next.sums().end(), state.sums().begin(),
                                  state.sums().end()));
            REQUIRE(next.sums().size() <= 2 * state.sums().size() + 1);
            REQUIRE(next.total() == state.total() + y);
            REQUIRE(next.sums().back() == next.total());
            REQUIRE(std::includes(next.sums().begin(), next.sums().end(), next.elements().begin(),
                                  next.elements().end()));
            state = next;
        }
    }
}

}  // TEST_SUITE
