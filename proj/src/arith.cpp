#include "folkman/arith.hpp"

#include <algorithm>

namespace folkman {

u64 checked_add(u64 a, u64 b) {
    if (a > kValueCap - b) throw OverflowError("addition exceeds 2^63 - 1");
    return a + b;
}

u64 checked_mul(u64 a, u64 b) {
    if (a != 0 && b > kValueCap / a) throw OverflowError("multiplication exceeds 2^63 - 1");
    return a * b;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

u64 least_prime_factor(u64 n) {
    if (n < 2) throw DomainError("least_prime_factor requires n >= 2");
    if (n % 2 == 0) return 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

PrimeBasis PrimeBasis::first_primes(std::size_t count) {
    if (count < 1 || count > 32) {
        throw UsageError("prime count must lie in [1, 32], got " + std::to_string(count));
    }
    std::vector<u64> primes;
    primes.reserve(count);
    for (u64 candidate = 2; primes.size() < count; ++candidate) {
        if (is_prime(candidate)) primes.push_back(candidate);
    }
    return PrimeBasis(std::move(primes));
}

bool PrimeBasis::contains(u64 p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

namespace {

void require_positive(u64 n) {
    if (n == 0) throw DomainError("valuations are undefined at 0");
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

}  // namespace

u64 nu(u64 n, u64 p) {
    require_positive(n);
    require_prime(p);
    u64 order = 0;
    while (n % p == 0) {
        n /= p;
        ++order;
    }
    return order;
}

u64 xi(u64 n, u64 p) {
    require_positive(n);
    require_prime(p);
    while (n % p == 0) n /= p;
    return n;
}

ValuationProfile valuation_profile(u64 n, const PrimeBasis& basis) {
    require_positive(n);
    ValuationProfile profile;
    profile.n = n;
    profile.exponents.reserve(basis.size());
    u64 rest = n;
    for (u64 p : basis.primes()) {
        u64 order = 0;
        while (rest % p == 0) {
            rest /= p;
            ++order;
        }
        profile.exponents.push_back(order);
    }
    profile.cofactor = rest;
    return profile;
}

u64 smooth_part(u64 n, const PrimeBasis& basis) {
    require_positive(n);
    u64 rest = n;
    for (u64 p : basis.primes()) {
        while (rest % p == 0) rest /= p;
    }
    return n / rest;
}

}  // namespace folkman
