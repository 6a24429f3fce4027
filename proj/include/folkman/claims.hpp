#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "folkman/search.hpp"

namespace folkman {

// Elements sharing one nu_p value, p fixed. Two or more of these in a
// proof1 witness would contradict monochromaticity.
struct ValuationCollision {
    u64 prime = 0;
    u64 exponent = 0;
    std::vector<u64> elements;  // >= 2 members, ascending
};

struct InjectivityReport {
    u64 prime = 0;
    bool injective = true;
    std::vector<ValuationCollision> collisions;
};

struct MultiplicityReport {
    u64 prime = 0;
    u64 bound = 0;              // (p^2 - 2)^2
    std::map<u64, u64> counts;  // exponent -> how many elements carry it
    std::vector<u64> flagged;   // exponents whose count exceeds the bound
};

// Verdicts for a witness (or any raw set): whether each nu_p is injective
// on the set, and the per-exponent multiplicity table against (p^2 - 2)^2.
// `violations` holds only the failures the scheme actually forbids.
struct ClaimReport {
    Scheme scheme = Scheme::Proof1;
    std::vector<InjectivityReport> injectivity;
    std::vector<MultiplicityReport> multiplicity;
    std::vector<std::string> violations;
    bool passed = true;
};

std::vector<InjectivityReport> check_distinct_valuations(std::span<const u64> elements,
                                                         const PrimeBasis& basis);
std::vector<MultiplicityReport> check_multiplicity_bound(std::span<const u64> elements,
                                                         const PrimeBasis& basis);
ClaimReport claim_report(std::span<const u64> elements, const PrimeBasis& basis, Scheme scheme);

// Discards elements until, for every basis prime, each nu_p value occurs at
// most once. Primes are processed ascending over the current survivors; the
// smallest element of each colliding class is kept.
std::vector<u64> thin(std::span<const u64> elements, const PrimeBasis& basis);

// The greedy selection a_1..a_t: walk basis primes ascending and append the
// nu_p-minimal element unless it is already listed. Requires every nu_p to
// be injective on the input; t never exceeds the basis size.
std::vector<u64> greedy_minima(std::span<const u64> elements, const PrimeBasis& basis);

// Outcome of the constructive final step: adding one unselected element to
// the greedy partial sum leaves every basis valuation unchanged, so the
// total carries a prime factor outside the basis.
struct ExtractionResult {
    std::vector<u64> selected;  // a_1 .. a_t in selection order
    u64 partial_sum = 0;
    u64 extra = 0;     // least element not selected
    u64 total = 0;     // partial_sum + extra
    u64 smooth = 0;    // basis-smooth part of total
    u64 cofactor = 0;  // total / smooth, coprime to the basis, > 1
    u64 new_prime = 0; // least prime factor of the cofactor
};

// Proof2 witnesses are thinned first and the survivor set must keep more
// than N elements (ShortfallError otherwise); proof1 witnesses are used as
// is and need more than N elements themselves. Custom-coloured witnesses
// carry no claim guarantees and are rejected.
ExtractionResult extract_new_prime(const Witness& witness);

}  // namespace folkman
