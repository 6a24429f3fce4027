#pragma once

#include <optional>
#include <span>
#include <vector>

#include "folkman/coloring.hpp"
#include "folkman/finite_sums.hpp"

namespace folkman {

inline constexpr u64 kMaxBound = u64{1} << 32;

struct SearchConfig {
    Scheme scheme = Scheme::Proof1;
    PrimeBasis basis = PrimeBasis::first_primes(1);
    u64 target_size = 1;  // M, elements per witness, <= kMaxFsElements
    u64 bound = 1;        // elements drawn from [1..bound]; sums may exceed it
    bool deterministic = true;
    std::optional<u64> node_budget;
    unsigned workers = 1;
    // Proof1 accelerator: skip candidates repeating any nu_p of a chosen
    // element. Such extensions always fail the frontier colour check, so
    // results are identical with or without it.
    bool claim_pruning = false;
};

// A set whose entire finite-sums closure received one colour, re-verified
// from scratch (fs_set route) before being handed out. nodes_explored is the
// branch-local node count at the moment of discovery, which is deterministic
// in every lane.
struct Witness {
    SearchConfig config;
    std::vector<u64> elements;  // sorted ascending
    ColorKey color;
    u64 nodes_explored = 0;
};

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

std::string outcome_name(SearchOutcome outcome);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::optional<Witness> witness;
    u64 nodes_explored = 0;
};

struct EnumerateResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::vector<Witness> witnesses;  // lexicographic when deterministic
    u64 nodes_explored = 0;
};

struct MonoVerdict {
    bool monochromatic = false;
    std::optional<ColorKey> color;  // the shared colour when monochromatic
    // Least sum whose colour differs from the least sum's colour; its colour
    // is nullopt when the colouring rejects that sum outright.
    std::optional<u64> offending_sum;
    std::optional<ColorKey> offending_color;
};

// Full check over fs(elements); independent of the incremental search path.
MonoVerdict is_monochromatic(std::span<const u64> elements, const Coloring& coloring);

// Re-verifies the elements from scratch and wraps them as a Witness.
std::optional<Witness> verify_witness(std::span<const u64> elements, const SearchConfig& config,
                                      const Coloring& coloring);

// Lexicographic DFS over ascending element tuples, colour-checking only the
// frontier sums of each extension. find_monochromatic/enumerate_witnesses
// dispatch on config.workers; the serial lane is the reference, the parallel
// lane farms the choice of first element out to OpenMP workers.
//
// Deterministic parallel runs explore every first-element branch (no
// cross-branch cancellation) and reduce to the lexicographically least
// witness, so witnesses and node counts are reproducible; non-deterministic
// runs cancel the remaining branches once a witness is in hand. A node
// budget under deterministic mode forces the serial lane for exact,
// order-independent accounting.
SearchResult find_monochromatic(const SearchConfig& config, const Coloring& coloring);
EnumerateResult enumerate_witnesses(const SearchConfig& config, const Coloring& coloring, u64 limit);

SearchResult find_serial(const SearchConfig& config, const Coloring& coloring);
SearchResult find_parallel(const SearchConfig& config, const Coloring& coloring);
EnumerateResult enumerate_serial(const SearchConfig& config, const Coloring& coloring, u64 limit);
EnumerateResult enumerate_parallel(const SearchConfig& config, const Coloring& coloring, u64 limit);

}  // namespace folkman
