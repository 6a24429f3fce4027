#include <numeric>
#include <random>

#include "doctest.h"
#include "folkman/arith.hpp"

using namespace folkman;

TEST_SUITE("arith") {

TEST_CASE("first_primes returns initial segments") {
    CHECK(PrimeBasis::first_primes(1).primes() == std::vector<u64>{2});
    CHECK(PrimeBasis::first_primes(3).primes() == std::vector<u64>{2, 3, 5});
    CHECK(PrimeBasis::first_primes(5).primes() == std::vector<u64>{2, 3, 5, 7, 11});
    CHECK(PrimeBasis::first_primes(32).primes().back() == 131);
}

TEST_CASE("first_primes rejects out-of-range counts") {
    CHECK_THROWS_AS(PrimeBasis::first_primes(0), UsageError);
    CHECK_THROWS_AS(PrimeBasis::first_primes(33), UsageError);
}

TEST_CASE("basis membership") {
    const auto basis = PrimeBasis::first_primes(4);
    CHECK(basis.contains(2));
    CHECK(basis.contains(7));
    CHECK_FALSE(basis.contains(11));
    CHECK_FALSE(basis.contains(4));
}

TEST_CASE("nu and xi fixtures") {
    CHECK(nu(12, 2) == 2);
    CHECK(nu(12, 3) == 1);
    CHECK(nu(7, 5) == 0);
    CHECK(xi(12, 2) == 3);
    CHECK(xi(12, 3) == 4);
    CHECK(xi(8, 2) == 1);
}

TEST_CASE("nu and xi reject bad input") {
    CHECK_THROWS_AS(nu(0, 2), DomainError);
    CHECK_THROWS_AS(xi(0, 3), DomainError);
    CHECK_THROWS_AS(nu(10, 4), UsageError);
    CHECK_THROWS_AS(xi(10, 1), UsageError);
}

TEST_CASE("factorization identity n = p^nu * xi") {
    for (u64 p : {2, 3, 5, 7, 11}) {
        for (u64 n = 1; n <= 20000; ++n) {
            const u64 order = nu(n, p);
            const u64 rest = xi(n, p);
            u64 power = 1;
            for (u64 i = 0; i < order; ++i) power *= p;
            REQUIRE(power * rest == n);
            REQUIRE(rest % p != 0);
        }
    }
}

TEST_CASE("valuation of a sum equals the smaller valuation") {
    // nu_p(a) < nu_p(b) forces nu_p(a+b) = nu_p(a)
    std::mt19937_64 rng(20240811);
    for (u64 p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const u64 alpha = rng() % 8;
            const u64 beta = alpha + 1 + rng() % 5;
            u64 a_unit = 1 + rng() % 1000000;
            if (a_unit % p == 0) ++a_unit;
            u64 b_unit = 1 + rng() % 1000000;
            if (b_unit % p == 0) ++b_unit;
            u64 a = a_unit, b = b_unit;
            for (u64 i = 0; i < alpha; ++i) a = checked_mul(a, p);
            for (u64 i = 0; i < beta; ++i) b = checked_mul(b, p);
            REQUIRE(nu(a, p) == alpha);
            REQUIRE(nu(b, p) == beta);
            REQUIRE(nu(checked_add(a, b), p) == alpha);
        }
    }
}

TEST_CASE("valuation_profile fixtures") {
    const auto b1 = PrimeBasis::first_primes(1);
    auto profile = valuation_profile(20, b1);
    CHECK(profile.exponents == std::vector<u64>{2});
    CHECK(profile.cofactor == 5);

    const auto b3 = PrimeBasis::first_primes(3);
    profile = valuation_profile(84, b3);
    CHECK(profile.exponents == std::vector<u64>{2, 1, 0});
    CHECK(profile.cofactor == 7);

    const auto b2 = PrimeBasis::first_primes(2);
    profile = valuation_profile(1, b2);
    CHECK(profile.exponents == std::vector<u64>{0, 0});
    CHECK(profile.cofactor == 1);

    CHECK_THROWS_AS(valuation_profile(0, b1), DomainError);
}

TEST_CASE("valuation_profile round-trips") {
    const auto basis = PrimeBasis::first_primes(3);
    for (u64 n = 1; n <= 100000; ++n) {
        const auto profile = valuation_profile(n, basis);
        u64 rebuilt = profile.cofactor;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (u64 e = 0; e < profile.exponents[i]; ++e) rebuilt *= basis[i];
        }
        REQUIRE(rebuilt == n);
        for (u64 p : basis.primes()) REQUIRE(std::gcd(profile.cofactor, p) == 1);
    }
}

TEST_CASE("smooth_part fixtures") {
    CHECK(smooth_part(20, PrimeBasis::first_primes(1)) == 4);
    CHECK(smooth_part(20, PrimeBasis::first_primes(3)) == 20);
    CHECK(smooth_part(13, PrimeBasis::first_primes(1)) == 1);
    CHECK_THROWS_AS(smooth_part(0, PrimeBasis::first_primes(1)), DomainError);
}

TEST_CASE("primality and least factors") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(131));
    CHECK_FALSE(is_prime(131 * 137));

    CHECK(least_prime_factor(2) == 2);
    CHECK(least_prime_factor(15) == 3);
    CHECK(least_prime_factor(49) == 7);
    CHECK(least_prime_factor(97) == 97);
    CHECK_THROWS_AS(least_prime_factor(1), DomainError);
}

TEST_CASE("checked arithmetic stops at 2^63 - 1") {
    CHECK(checked_add(kValueCap - 1, 1) == kValueCap);
    CHECK_THROWS_AS(checked_add(kValueCap, 1), OverflowError);
    CHECK(checked_mul(u64{1} << 31, u64{1} << 31) == u64{1} << 62);
    CHECK_THROWS_AS(checked_mul(u64{1} << 32, u64{1} << 31), OverflowError);
}

}  // TEST_SUITE
