#pragma once

#include <cstdint>
#include <vector>

#include "folkman/errors.hpp"

namespace folkman {

using u64 = std::uint64_t;

// Every quantity handled by the library stays at or below this cap; the
// checked helpers throw OverflowError instead of wrapping.
inline constexpr u64 kValueCap = (u64{1} << 63) - 1;

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);

// Deterministic trial division; inputs here are small by construction.
bool is_prime(u64 n);

// Smallest prime factor of n (n >= 2).
u64 least_prime_factor(u64 n);

// The first N primes, ascending. Plays the role of a hypothetically
// complete, finite prime universe, so it is always an initial segment
// starting at 2.
class PrimeBasis {
public:
    static PrimeBasis first_primes(std::size_t count);  // 1 <= count <= 32

    const std::vector<u64>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    u64 operator[](std::size_t i) const { return primes_[i]; }
    bool contains(u64 p) const;

    friend bool operator==(const PrimeBasis&, const PrimeBasis&) = default;

private:
    explicit PrimeBasis(std::vector<u64> primes) : primes_(std::move(primes)) {}
    std::vector<u64> primes_;
};

// nu(n, p): largest a with p^a | n.  xi(n, p): n with its p-part removed,
// so n == p^nu(n,p) * xi(n,p) and gcd(xi(n,p), p) == 1.
// Both reject n == 0 with DomainError and non-prime p with UsageError.
u64 nu(u64 n, u64 p);
u64 xi(u64 n, u64 p);

// Factorization of n over the basis: n == cofactor * prod p^exponents[i],
// with the cofactor coprime to every basis prime.
struct ValuationProfile {
    u64 n = 0;
    std::vector<u64> exponents;  // aligned with basis.primes()
    u64 cofactor = 0;

    friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

ValuationProfile valuation_profile(u64 n, const PrimeBasis& basis);

// prod p^nu(n,p) over the basis, i.e. n / cofactor.
u64 smooth_part(u64 n, const PrimeBasis& basis);

}  // namespace folkman
