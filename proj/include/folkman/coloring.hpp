#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folkman/arith.hpp"

namespace folkman {

enum class Scheme { Proof1, Proof2, Custom };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

// One colour: the component tuple plus its dense mixed-radix index.
struct ColorKey {
    Scheme scheme = Scheme::Proof1;
    std::vector<u64> components;
    u64 canonical = 0;

    friend bool operator==(const ColorKey&, const ColorKey&) = default;
};

// The two valuation colourings.
//
// Proof1: (nu_2(n) mod 2, xi_2(n) mod 4) followed by xi_p(n) mod p for each
// odd basis prime, ascending. Proof2: (nu_p(n) mod 2) over all basis primes,
// ascending. Both are total on positive integers; n == 0 is a DomainError.
ColorKey color_proof1(u64 n, const PrimeBasis& basis);
ColorKey color_proof2(u64 n, const PrimeBasis& basis);

// Number of colours a scheme can produce: 4 * prod (p - 1) over odd basis
// primes for Proof1, 2^N for Proof2.
u64 color_count(Scheme scheme, const PrimeBasis& basis);

// The guaranteed-witness size M for the scheme: N + 1 for Proof1,
// (N + 1) * prod p^4 for Proof2 (throws OverflowError once astronomical).
u64 required_size(Scheme scheme, const PrimeBasis& basis);

// Radix of each tuple component, most significant first, and the dense
// packing of an in-range tuple. The packing folds components in tuple order
// after remapping each to a 0-based digit ({1,3} -> {0,1} for the xi_2
// component, r -> r-1 for odd-prime residues), so it is a bijection onto
// [0, color_count).
std::vector<u64> color_radices(Scheme scheme, const PrimeBasis& basis);
u64 canonical_index(Scheme scheme, const PrimeBasis& basis, std::span<const u64> components);

// A total colour assignment as the search consumes it. index() is the hot
// path and avoids building tuples; it returns nullopt where the colouring
// rejects n, which only happens for custom tables.
class Coloring {
public:
    virtual ~Coloring() = default;
    virtual Scheme scheme() const = 0;
    virtual u64 count() const = 0;
    virtual std::optional<u64> index(u64 n) const = 0;
    virtual std::optional<ColorKey> key(u64 n) const = 0;
};

class Proof1Coloring final : public Coloring {
public:
    explicit Proof1Coloring(PrimeBasis basis);
    Scheme scheme() const override { return Scheme::Proof1; }
    u64 count() const override { return count_; }
    std::optional<u64> index(u64 n) const override;
    std::optional<ColorKey> key(u64 n) const override;

private:
    PrimeBasis basis_;
    u64 count_;
};

class Proof2Coloring final : public Coloring {
public:
    explicit Proof2Coloring(PrimeBasis basis);
    Scheme scheme() const override { return Scheme::Proof2; }
    u64 count() const override { return count_; }
    std::optional<u64> index(u64 n) const override;
    std::optional<ColorKey> key(u64 n) const override;

private:
    PrimeBasis basis_;
    u64 count_;
};

// Fixed colour table loaded from lines of "n colour_index". Numbers outside
// the table are rejected (nullopt): sums that escape the table can never be
// declared monochromatic, they just prune the search. An optional directive
// line "rule reject" states that explicitly; no other rule exists.
class CustomColoring final : public Coloring {
public:
    static CustomColoring parse(std::istream& in);
    static CustomColoring load_file(const std::string& path);

    Scheme scheme() const override { return Scheme::Custom; }
    u64 count() const override { return count_; }
    std::optional<u64> index(u64 n) const override;
    std::optional<ColorKey> key(u64 n) const override;

private:
    CustomColoring() = default;
    std::vector<std::optional<u64>> table_;  // indexed by n
    u64 count_ = 0;
};

// Factory used by the CLI: table_path is consulted only for Scheme::Custom.
std::unique_ptr<Coloring> make_coloring(Scheme scheme, const PrimeBasis& basis,
                                        const std::string& table_path = {});

}  // namespace folkman
