#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "folkman/coloring.hpp"
#include "oracles.hpp"

using namespace folkman;

TEST_SUITE("coloring") {

TEST_CASE("proof1 tuples") {
    const auto b1 = PrimeBasis::first_primes(1);
    CHECK(color_proof1(1, b1).components == std::vector<u64>{0, 1});
    CHECK(color_proof1(20, b1).components == std::vector<u64>{0, 1});

    const auto b2 = PrimeBasis::first_primes(2);
    CHECK(color_proof1(12, b2).components == std::vector<u64>{0, 3, 1});

    CHECK_THROWS_AS(color_proof1(0, b1), DomainError);
}

TEST_CASE("proof2 tuples") {
    CHECK(color_proof2(1, PrimeBasis::first_primes(2)).components == std::vector<u64>{0, 0});
    CHECK(color_proof2(8, PrimeBasis::first_primes(1)).components == std::vector<u64>{1});
    CHECK(color_proof2(12, PrimeBasis::first_primes(2)).components == std::vector<u64>{0, 1});
    CHECK_THROWS_AS(color_proof2(0, PrimeBasis::first_primes(1)), DomainError);
}

TEST_CASE("canonical indices fold most significant first") {
    const auto b1 = PrimeBasis::first_primes(1);
    // proof1 over {2}: tuples (0,1) (0,3) (1,1) (1,3) -> 0 1 2 3
    CHECK(color_proof1(1, b1).canonical == 0);
    CHECK(color_proof1(20, b1).canonical == 0);
    CHECK(color_proof1(12, b1).canonical == 1);
    CHECK(color_proof1(2, b1).canonical == 2);
    CHECK(color_proof1(6, b1).canonical == 3);

    const auto b2 = PrimeBasis::first_primes(2);
    CHECK(color_proof2(12, b2).canonical == 1);  // (0, 1)
    CHECK(color_proof2(2, b2).canonical == 2);   // (1, 0)
    CHECK(color_proof2(6, b2).canonical == 3);   // (1, 1)
}

TEST_CASE("colour counts") {
    CHECK(color_count(Scheme::Proof1, PrimeBasis::first_primes(1)) == 4);
    CHECK(color_count(Scheme::Proof1, PrimeBasis::first_primes(3)) == 32);
    CHECK(color_count(Scheme::Proof2, PrimeBasis::first_primes(3)) == 8);
    CHECK(color_count(Scheme::Proof2, PrimeBasis::first_primes(1)) == 2);
}

TEST_CASE("required witness sizes") {
    CHECK(required_size(Scheme::Proof1, PrimeBasis::first_primes(3)) == 4);
    CHECK(required_size(Scheme::Proof2, PrimeBasis::first_primes(1)) == 32);
    CHECK(required_size(Scheme::Proof2, PrimeBasis::first_primes(2)) == 3888);
    // (N+1) * prod p^4 blows past 2^63 - 1 from N = 7 onwards
    CHECK(required_size(Scheme::Proof2, PrimeBasis::first_primes(6)) == 5692714042685670000ULL);
    CHECK_THROWS_AS(required_size(Scheme::Proof2, PrimeBasis::first_primes(7)), OverflowError);
}

TEST_CASE("components stay in range and match the hot-path index") {
    const auto basis = PrimeBasis::first_primes(3);
    const Proof1Coloring c1(basis);
    const Proof2Coloring c2(basis);
    for (u64 n = 1; n <= 100000; ++n) {
        const ColorKey k1 = color_proof1(n, basis);
        REQUIRE(k1.components.size() == 4);
        REQUIRE(k1.components[0] <= 1);
        REQUIRE((k1.components[1] == 1 || k1.components[1] == 3));
        REQUIRE((k1.components[2] >= 1 && k1.components[2] <= 2));
        REQUIRE((k1.components[3] >= 1 && k1.components[3] <= 4));
        REQUIRE(k1.canonical < 32);
        REQUIRE(c1.index(n) == k1.canonical);

        const ColorKey k2 = color_proof2(n, basis);
        REQUIRE(k2.components.size() == 3);
        for (u64 comp : k2.components) REQUIRE(comp <= 1);
        REQUIRE(k2.canonical < 8);
        REQUIRE(c2.index(n) == k2.canonical);
    }
}

TEST_CASE("canonical packing is a bijection over valid tuples") {
    const auto basis = PrimeBasis::first_primes(3);

    std::set<u64> seen1;
    for (u64 a : {0, 1}) {
        for (u64 b : {1, 3}) {
            for (u64 c = 1; c <= 2; ++c) {
                for (u64 d = 1; d <= 4; ++d) {
                    const std::vector<u64> tuple{a, b, c, d};
                    const u64 index = canonical_index(Scheme::Proof1, basis, tuple);
                    REQUIRE(index < 32);
                    REQUIRE(seen1.insert(index).second);
                }
            }
        }
    }
    CHECK(seen1.size() == 32);

    std::set<u64> seen2;
    for (u64 a : {0, 1}) {
        for (u64 b : {0, 1}) {
            for (u64 c : {0, 1}) {
                const std::vector<u64> tuple{a, b, c};
                const u64 index = canonical_index(Scheme::Proof2, basis, tuple);
                REQUIRE(index < 8);
                REQUIRE(seen2.insert(index).second);
            }
        }
    }
    CHECK(seen2.size() == 8);

    CHECK_THROWS_AS(canonical_index(Scheme::Proof1, basis, std::vector<u64>{0, 2, 1, 1}),
                    UsageError);
    CHECK_THROWS_AS(canonical_index(Scheme::Proof2, basis, std::vector<u64>{0, 1}), UsageError);
}

TEST_CASE("colourings are total beyond the basis") {
    const auto basis = PrimeBasis::first_primes(3);
    for (u64 n = 1; n <= 10000; ++n) {
        CHECK_NOTHROW(color_proof1(n, basis));
        CHECK_NOTHROW(color_proof2(n, basis));
    }
    CHECK(color_proof1(7, PrimeBasis::first_primes(1)).components == std::vector<u64>{0, 3});
}

TEST_CASE("library colourings agree with the independent oracle") {
    for (std::size_t n_primes : {1u, 2u, 3u}) {
        const auto basis = PrimeBasis::first_primes(n_primes);
        const Proof1Coloring c1(basis);
        const Proof2Coloring c2(basis);
        const auto o1 = oracle::proof1_color(basis.primes());
        const auto o2 = oracle::proof2_color(basis.primes());
        for (u64 n = 1; n <= 5000; ++n) {
            REQUIRE(c1.index(n) == o1(n));
            REQUIRE(c2.index(n) == o2(n));
        }
    }
}

TEST_CASE("custom tables colour listed numbers and reject the rest") {
    std::istringstream table(
        "# toy table\n"
        "rule reject\n"
        "1 0\n"
        "2 1\n"
        "3 0\n"
        "\n"
        "4 2\n");
    const CustomColoring coloring = CustomColoring::parse(table);
    CHECK(coloring.count() == 3);
    CHECK(coloring.index(1) == 0);
    CHECK(coloring.index(4) == 2);
    CHECK_FALSE(coloring.index(5).has_value());
    CHECK_FALSE(coloring.index(100).has_value());
    const auto key = coloring.key(2);
    REQUIRE(key.has_value());
    CHECK(key->canonical == 1);
    CHECK(key->components == std::vector<u64>{1});
    CHECK_THROWS_AS(coloring.index(0), DomainError);
}

TEST_CASE("custom table parse errors") {
    std::istringstream missing("1\n");
    CHECK_THROWS_AS(CustomColoring::parse(missing), UsageError);
    std::istringstream zero("0 1\n");
    CHECK_THROWS_AS(CustomColoring::parse(zero), UsageError);
    std::istringstream dup("1 0\n1 1\n");
    CHECK_THROWS_AS(CustomColoring::parse(dup), UsageError);
    std::istringstream rule("rule accept\n");
    CHECK_THROWS_AS(CustomColoring::parse(rule), UsageError);
    std::istringstream trailing("1 0 7\n");
    CHECK_THROWS_AS(CustomColoring::parse(trailing), UsageError);
    CHECK_THROWS_AS(CustomColoring::load_file("/nonexistent/table.txt"), UsageError);
}

TEST_CASE("scheme names round-trip") {
    for (Scheme s : {Scheme::Proof1, Scheme::Proof2, Scheme::Custom}) {
        CHECK(scheme_from_name(scheme_name(s)) == s);
    }
    CHECK_THROWS_AS(scheme_from_name("proof3"), UsageError);
}

}  // TEST_SUITE
