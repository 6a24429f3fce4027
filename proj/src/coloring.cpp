#include "folkman/coloring.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace folkman {

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Proof1: return "proof1";
        case Scheme::Proof2: return "proof2";
        case Scheme::Custom: return "custom";
    }
    throw InternalError("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "proof1") return Scheme::Proof1;
    if (name == "proof2") return Scheme::Proof2;
    if (name == "custom") return Scheme::Custom;
    throw UsageError("unknown scheme '" + name + "' (expected proof1, proof2 or custom)");
}

namespace {

void require_positive(u64 n) {
    if (n == 0) throw DomainError("colourings are undefined at 0");
}

// nu_2 via trailing zeros; odd primes by division.
inline u64 two_adic_order(u64 n) {
    return static_cast<u64>(std::countr_zero(n));
}

}  // namespace

ColorKey color_proof1(u64 n, const PrimeBasis& basis) {
    require_positive(n);
    ColorKey key;
    key.scheme = Scheme::Proof1;
    key.components.reserve(basis.size() + 1);

    const u64 alpha = two_adic_order(n);
    const u64 odd = n >> alpha;
    key.components.push_back(alpha & 1);
    key.components.push_back(odd & 3);  // 1 or 3
    for (std::size_t i = 1; i < basis.size(); ++i) {
        const u64 p = basis[i];
        u64 rest = n;
        while (rest % p == 0) rest /= p;
        key.components.push_back(rest % p);  // in [1, p-1]
    }
    key.canonical = canonical_index(Scheme::Proof1, basis, key.components);
    return key;
}

ColorKey color_proof2(u64 n, const PrimeBasis& basis) {
    require_positive(n);
    ColorKey key;
    key.scheme = Scheme::Proof2;
    key.components.reserve(basis.size());
    for (u64 p : basis.primes()) {
        u64 order = 0;
        u64 rest = n;
        while (rest % p == 0) {
            rest /= p;
            ++order;
        }
        key.components.push_back(order & 1);
    }
    key.canonical = canonical_index(Scheme::Proof2, basis, key.components);
    return key;
}

u64 color_count(Scheme scheme, const PrimeBasis& basis) {
    switch (scheme) {
        case Scheme::Proof1: {
            u64 count = 4;
            for (std::size_t i = 1; i < basis.size(); ++i) count = checked_mul(count, basis[i] - 1);
            return count;
        }
        case Scheme::Proof2:
            return u64{1} << basis.size();  // N <= 32
        case Scheme::Custom:
            throw UsageError("colour count of a custom table comes from the table itself");
    }
    throw InternalError("unknown scheme");
}

u64 required_size(Scheme scheme, const PrimeBasis& basis) {
    switch (scheme) {
        case Scheme::Proof1:
            return basis.size() + 1;
        case Scheme::Proof2: {
            u64 m = basis.size() + 1;
            for (u64 p : basis.primes()) {
                const u64 p4 = checked_mul(checked_mul(p, p), checked_mul(p, p));
                m = checked_mul(m, p4);
            }
            return m;
        }
        case Scheme::Custom:
            throw UsageError("no guaranteed witness size for custom colourings");
    }
    throw InternalError("unknown scheme");
}

std::vector<u64> color_radices(Scheme scheme, const PrimeBasis& basis) {
    std::vector<u64> radices;
    switch (scheme) {
        case Scheme::Proof1:
            radices.push_back(2);  // nu_2 parity
            radices.push_back(2);  // xi_2 mod 4, one of {1, 3}
            for (std::size_t i = 1; i < basis.size(); ++i) radices.push_back(basis[i] - 1);
            return radices;
        case Scheme::Proof2:
            radices.assign(basis.size(), 2);
            return radices;
        case Scheme::Custom:
            throw UsageError("custom colour indices are not tuple-packed");
    }
    throw InternalError("unknown scheme");
}

u64 canonical_index(Scheme scheme, const PrimeBasis& basis, std::span<const u64> components) {
    const std::vector<u64> radices = color_radices(scheme, basis);
    if (components.size() != radices.size()) {
        throw UsageError("colour tuple has " + std::to_string(components.size()) +
                         " components, expected " + std::to_string(radices.size()));
    }
    u64 index = 0;
    for (std::size_t i = 0; i < radices.size(); ++i) {
        u64 digit;
        if (scheme == Scheme::Proof1 && i == 1) {
            if (components[i] != 1 && components[i] != 3) {
                throw UsageError("xi_2 mod 4 component must be 1 or 3");
            }
            digit = (components[i] - 1) / 2;
        } else if (scheme == Scheme::Proof1 && i >= 2) {
            if (components[i] < 1 || components[i] > radices[i]) {
                throw UsageError("residue component out of range");
            }
            digit = components[i] - 1;
        } else {
            if (components[i] >= radices[i]) throw UsageError("parity component out of range");
            digit = components[i];
        }
        index = index * radices[i] + digit;
    }
    return index;
}

Proof1Coloring::Proof1Coloring(PrimeBasis basis)
    : basis_(std::move(basis)), count_(color_count(Scheme::Proof1, basis_)) {}

std::optional<u64> Proof1Coloring::index(u64 n) const {
    require_positive(n);
    const u64 alpha = two_adic_order(n);
    const u64 odd = n >> alpha;
    u64 index = alpha & 1;
    index = index * 2 + ((odd & 3) >> 1);
    for (std::size_t i = 1; i < basis_.size(); ++i) {
        const u64 p = basis_[i];
        u64 rest = n;
        while (rest % p == 0) rest /= p;
        index = index * (p - 1) + (rest % p - 1);
    }
    return index;
}

std::optional<ColorKey> Proof1Coloring::key(u64 n) const {
    return color_proof1(n, basis_);
}

Proof2Coloring::Proof2Coloring(PrimeBasis basis)
    : basis_(std::move(basis)), count_(color_count(Scheme::Proof2, basis_)) {}

std::optional<u64> Proof2Coloring::index(u64 n) const {
    require_positive(n);
    u64 index = 0;
    for (u64 p : basis_.primes()) {
        u64 order = 0;
        u64 rest = n;
        while (rest % p == 0) {
            rest /= p;
            ++order;
        }
        index = index * 2 + (order & 1);
    }
    return index;
}

std::optional<ColorKey> Proof2Coloring::key(u64 n) const {
    return color_proof2(n, basis_);
}

CustomColoring CustomColoring::parse(std::istream& in) {
    CustomColoring coloring;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;  // blank line
        if (first[0] == '#') continue;
        if (first == "rule") {
            std::string rule;
            tokens >> rule;
            if (rule != "reject") {
                throw UsageError("unsupported out-of-table rule '" + rule + "' (only: reject)");
            }
            continue;
        }
        u64 n = 0, color = 0;
        std::istringstream pair(line);
        if (!(pair >> n >> color)) {
            throw UsageError("table line " + std::to_string(line_no) + ": expected 'n colour_index'");
        }
        std::string trailing;
        if (pair >> trailing) {
            throw UsageError("table line " + std::to_string(line_no) + ": trailing tokens");
        }
        if (n == 0) throw UsageError("table line " + std::to_string(line_no) + ": n must be positive");
        if (n > kValueCap || color > kValueCap) {
            throw OverflowError("table entry exceeds 2^63 - 1");
        }
        if (coloring.table_.size() <= n) coloring.table_.resize(n + 1);
        if (coloring.table_[n].has_value()) {
            throw UsageError("table line " + std::to_string(line_no) + ": duplicate entry for " +
                             std::to_string(n));
        }
        coloring.table_[n] = color;
        if (color + 1 > coloring.count_) coloring.count_ = color + 1;
    }
    return coloring;
}

CustomColoring CustomColoring::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open colour table '" + path + "'");
    return parse(in);
}

std::optional<u64> CustomColoring::index(u64 n) const {
    require_positive(n);
    if (n >= table_.size()) return std::nullopt;
    return table_[n];
}

std::optional<ColorKey> CustomColoring::key(u64 n) const {
    const auto idx = index(n);
    if (!idx) return std::nullopt;
    return ColorKey{Scheme::Custom, {*idx}, *idx};
}

std::unique_ptr<Coloring> make_coloring(Scheme scheme, const PrimeBasis& basis,
                                        const std::string& table_path) {
    switch (scheme) {
        case Scheme::Proof1: return std::make_unique<Proof1Coloring>(basis);
        case Scheme::Proof2: return std::make_unique<Proof2Coloring>(basis);
        case Scheme::Custom:
            if (table_path.empty()) throw UsageError("custom scheme requires a colour table file");
            return std::make_unique<CustomColoring>(CustomColoring::load_file(table_path));
    }
    throw InternalError("unknown scheme");
}

}  // namespace folkman
