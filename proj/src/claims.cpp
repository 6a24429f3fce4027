#include "folkman/claims.hpp"

#include <algorithm>
#include <numeric>

namespace folkman {

namespace {

std::vector<u64> sorted_distinct(std::span<const u64> elements) {
    std::vector<u64> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] == 0) throw UsageError("elements must be positive");
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw UsageError("duplicate element " + std::to_string(sorted[i]));
        }
    }
    return sorted;
}

// exponent -> elements carrying it, elements ascending
std::map<u64, std::vector<u64>> valuation_classes(const std::vector<u64>& sorted, u64 p) {
    std::map<u64, std::vector<u64>> classes;
    for (u64 a : sorted) classes[nu(a, p)].push_back(a);
    return classes;
}

}  // namespace

std::vector<InjectivityReport> check_distinct_valuations(std::span<const u64> elements,
                                                         const PrimeBasis& basis) {
    const std::vector<u64> sorted = sorted_distinct(elements);
    std::vector<InjectivityReport> reports;
    reports.reserve(basis.size());
    for (u64 p : basis.primes()) {
        InjectivityReport report;
        report.prime = p;
        for (auto& [exponent, members] : valuation_classes(sorted, p)) {
            if (members.size() > 1) {
                report.injective = false;
                report.collisions.push_back({p, exponent, members});
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<MultiplicityReport> check_multiplicity_bound(std::span<const u64> elements,
                                                         const PrimeBasis& basis) {
    const std::vector<u64> sorted = sorted_distinct(elements);
    std::vector<MultiplicityReport> reports;
    reports.reserve(basis.size());
    for (u64 p : basis.primes()) {
        MultiplicityReport report;
        report.prime = p;
        report.bound = (p * p - 2) * (p * p - 2);
        for (auto& [exponent, members] : valuation_classes(sorted, p)) {
            report.counts[exponent] = members.size();
            if (members.size() > report.bound) report.flagged.push_back(exponent);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

ClaimReport claim_report(std::span<const u64> elements, const PrimeBasis& basis, Scheme scheme) {
    ClaimReport report;
    report.scheme = scheme;
    report.injectivity = check_distinct_valuations(elements, basis);
    report.multiplicity = check_multiplicity_bound(elements, basis);

    if (scheme == Scheme::Proof1) {
        for (const auto& inj : report.injectivity) {
            for (const auto& collision : inj.collisions) {
                std::string msg = "nu_" + std::to_string(inj.prime) + " collides at exponent " +
                                  std::to_string(collision.exponent) + ": {";
                for (std::size_t i = 0; i < collision.elements.size(); ++i) {
                    if (i > 0) msg += ", ";
                    msg += std::to_string(collision.elements[i]);
                }
                msg += "}";
                report.violations.push_back(std::move(msg));
            }
        }
    } else if (scheme == Scheme::Proof2) {
        for (const auto& mult : report.multiplicity) {
            for (u64 exponent : mult.flagged) {
                report.violations.push_back(
                    "nu_" + std::to_string(mult.prime) + " = " + std::to_string(exponent) +
                    " occurs " + std::to_string(mult.counts.at(exponent)) + " times, above " +
                    std::to_string(mult.bound));
            }
        }
    }
    report.passed = report.violations.empty();
    return report;
}

std::vector<u64> thin(std::span<const u64> elements, const PrimeBasis& basis) {
    std::vector<u64> survivors = sorted_distinct(elements);
    for (u64 p : basis.primes()) {
        std::vector<u64> kept;
        kept.reserve(survivors.size());
        std::map<u64, bool> seen;
        for (u64 a : survivors) {  // ascending, so the first of a class is its smallest
            u64 order = nu(a, p);
            if (!seen[order]) {
                seen[order] = true;
                kept.push_back(a);
            }
        }
        survivors = std::move(kept);
    }
    return survivors;
}

std::vector<u64> greedy_minima(std::span<const u64> elements, const PrimeBasis& basis) {
    const std::vector<u64> sorted = sorted_distinct(elements);
    if (sorted.empty()) throw UsageError("greedy selection needs a nonempty set");
    for (const auto& report : check_distinct_valuations(sorted, basis)) {
        if (!report.injective) {
            throw UsageError("nu_" + std::to_string(report.prime) +
                             " is not injective on the input; thin it first");
        }
    }

    std::vector<u64> selected;
    for (u64 p : basis.primes()) {
        u64 best = sorted.front();
        u64 best_order = nu(best, p);
        for (u64 a : sorted) {
            const u64 order = nu(a, p);
            if (order < best_order) {  // ties impossible; ascending scan keeps the smallest anyway
                best = a;
                best_order = order;
            }
        }
        if (std::find(selected.begin(), selected.end(), best) == selected.end()) {
            selected.push_back(best);
        }
    }
    return selected;
}

ExtractionResult extract_new_prime(const Witness& witness) {
    const PrimeBasis& basis = witness.config.basis;
    const std::size_t n_primes = basis.size();

    std::vector<u64> pool;
    switch (witness.config.scheme) {
        case Scheme::Proof1:
            pool = sorted_distinct(witness.elements);
            break;
        case Scheme::Proof2:
            pool = thin(witness.elements, basis);
            break;
        case Scheme::Custom:
            throw UsageError("extraction is defined for proof1/proof2 witnesses only");
    }
    if (pool.size() <= n_primes) throw ShortfallError(n_primes + 1, pool.size());

    ExtractionResult result;
    try {
        result.selected = greedy_minima(pool, basis);
    } catch (const UsageError&) {
        // a verified proof1 witness cannot collide (claims 1-2)
        throw InternalError("valuation collision on a verified witness");
    }

    result.partial_sum = 0;
    for (u64 a : result.selected) result.partial_sum = checked_add(result.partial_sum, a);

    std::vector<u64> chosen = result.selected;
    std::sort(chosen.begin(), chosen.end());
    for (u64 a : pool) {
        if (!std::binary_search(chosen.begin(), chosen.end(), a)) {
            result.extra = a;
            break;
        }
    }
    if (result.extra == 0) throw InternalError("no unselected element despite size check");

    result.total = checked_add(result.partial_sum, result.extra);
    for (u64 p : basis.primes()) {
        if (nu(result.total, p) != nu(result.partial_sum, p)) {
            throw InternalError("adding the extra element changed nu_" + std::to_string(p));
        }
    }

    result.smooth = smooth_part(result.total, basis);
    result.cofactor = result.total / result.smooth;
    if (result.cofactor <= 1) {
        throw InternalError("total is basis-smooth; no new prime to extract");
    }
    result.new_prime = least_prime_factor(result.cofactor);
    if (!is_prime(result.new_prime) || basis.contains(result.new_prime) ||
        result.total % result.new_prime != 0) {
        throw InternalError("extracted factor failed certification");
    }
    return result;
}

}  // namespace folkman
