#include "folkman/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace folkman {

std::string outcome_name(SearchOutcome outcome) {
    switch (outcome) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::NotFound: return "not_found";
        case SearchOutcome::BudgetExhausted: return "budget_exhausted";
    }
    throw InternalError("unknown outcome");
}

MonoVerdict is_monochromatic(std::span<const u64> elements, const Coloring& coloring) {
    if (elements.empty()) throw UsageError("cannot colour-check an empty set");
    MonoVerdict verdict;
    const std::vector<u64> sums = fs_set(elements);

    // reference colour: the colour of the least sum
    const auto reference = coloring.key(sums.front());
    if (!reference) {
        verdict.offending_sum = sums.front();
        return verdict;
    }
    for (u64 s : sums) {
        const auto idx = coloring.index(s);
        if (!idx || *idx != reference->canonical) {
            verdict.offending_sum = s;
            verdict.offending_color = coloring.key(s);
            return verdict;
        }
    }
    verdict.monochromatic = true;
    verdict.color = *reference;
    return verdict;
}

namespace {

void validate_config(const SearchConfig& cfg, const Coloring& coloring) {
    if (cfg.target_size < 1 || cfg.target_size > kMaxFsElements) {
        throw UsageError("target size must lie in [1, " + std::to_string(kMaxFsElements) + "]");
    }
    if (cfg.bound < 1 || cfg.bound > kMaxBound) {
        throw UsageError("bound must lie in [1, 2^32]");
    }
    if (cfg.scheme != coloring.scheme()) {
        throw UsageError("config scheme does not match the colouring");
    }
    if (cfg.claim_pruning && cfg.scheme != Scheme::Proof1) {
        throw UsageError("claim pruning is a proof1-only accelerator");
    }
}

// Largest admissible first element: the rest of the tuple needs
// target_size - 1 strictly larger values below the bound.
u64 first_element_max(const SearchConfig& cfg) {
    return cfg.bound >= cfg.target_size - 1 ? cfg.bound - (cfg.target_size - 1) : 0;
}

constexpr u64 kBudgetChunk = 1024;

struct BranchOutput {
    std::vector<Witness> witnesses;  // lex order within the branch
    u64 nodes = 0;
    bool budget_hit = false;
    bool cancelled = false;
};

// Depth-first exploration of one first-element branch. Candidates extend a
// sorted prefix in increasing order, so witnesses surface in lexicographic
// order and the frontier colour check (delta sums only) keeps the prefix
// monochromatic by induction.
class BranchExplorer {
public:
    BranchExplorer(const SearchConfig& cfg, const Coloring& coloring,
                   const std::atomic<bool>* cancel, u64* serial_budget,
                   std::atomic<u64>* shared_budget)
        : cfg_(cfg),
          coloring_(coloring),
          cancel_(cancel),
          serial_budget_(serial_budget),
          shared_budget_(shared_budget),
          valuation_masks_(cfg.claim_pruning ? cfg.basis.size() : 0, 0) {}

    BranchOutput run(u64 first, u64 witness_limit) {
        out_ = BranchOutput{};
        witness_limit_ = witness_limit;
        budget_chunk_ = 0;
        std::fill(valuation_masks_.begin(), valuation_masks_.end(), 0);

        if (!take_node()) return std::move(out_);
        const auto target = coloring_.index(first);
        if (!target) return std::move(out_);
        target_ = *target;

        prefix_.clear();
        prefix_.reserve(cfg_.target_size);
        prefix_.push_back(first);
        states_.clear();
        states_.reserve(cfg_.target_size + 1);
        states_.push_back(FSState().extend(first));
        if (cfg_.claim_pruning) toggle_masks(first);
        dfs();
        return std::move(out_);
    }

private:
    bool done() const {
        return out_.budget_hit || out_.cancelled || out_.witnesses.size() >= witness_limit_;
    }

    // Accounts one candidate evaluation; false once the budget is gone.
    bool take_node() {
        if (serial_budget_) {
            if (*serial_budget_ == 0) {
                out_.budget_hit = true;
                return false;
            }
            --*serial_budget_;
        } else if (shared_budget_) {
            if (budget_chunk_ == 0) {
                u64 have = shared_budget_->load(std::memory_order_relaxed);
                u64 take = 0;
                do {
                    if (have == 0) {
                        out_.budget_hit = true;
                        return false;
                    }
                    take = std::min(have, kBudgetChunk);
                } while (!shared_budget_->compare_exchange_weak(have, have - take,
                                                                std::memory_order_relaxed));
                budget_chunk_ = take;
            }
            --budget_chunk_;
        }
        ++out_.nodes;
        return true;
    }

    bool shares_valuation(u64 y) const {
        for (std::size_t i = 0; i < cfg_.basis.size(); ++i) {
            const u64 p = cfg_.basis[i];
            u64 order = 0;
            while (y % p == 0) {
                y /= p;
                ++order;
            }
            if (valuation_masks_[i] & (u64{1} << order)) return true;
        }
        return false;
    }

    // Valuations inside a pruned prefix are pairwise distinct per prime, so
    // flipping bits both records and erases an element's exponents.
    void toggle_masks(u64 y) {
        for (std::size_t i = 0; i < cfg_.basis.size(); ++i) {
            const u64 p = cfg_.basis[i];
            u64 order = 0;
            while (y % p == 0) {
                y /= p;
                ++order;
            }
            valuation_masks_[i] ^= u64{1} << order;
        }
    }

    void dfs() {
        if (prefix_.size() == cfg_.target_size) {
            emit();
            return;
        }
        const std::size_t depth = states_.size() - 1;
        const u64 remaining = cfg_.target_size - prefix_.size();
        const u64 max_y = cfg_.bound - (remaining - 1);
        for (u64 y = prefix_.back() + 1; y <= max_y; ++y) {
            if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
                out_.cancelled = true;
                return;
            }
            if (!take_node()) return;
            if (cfg_.claim_pruning && shares_valuation(y)) continue;
            const auto yc = coloring_.index(y);
            if (!yc || *yc != target_) continue;
            bool frontier_ok = true;
            for (u64 s : states_[depth].sums()) {
                const auto sc = coloring_.index(s + y);
                if (!sc || *sc != target_) {
                    frontier_ok = false;
                    break;
                }
            }
            if (!frontier_ok) continue;

            prefix_.push_back(y);
            states_.push_back(states_[depth].extend(y));
            if (cfg_.claim_pruning) toggle_masks(y);
            dfs();
            if (cfg_.claim_pruning) toggle_masks(y);
            states_.pop_back();
            prefix_.pop_back();
            if (done()) return;
        }
    }

    void emit() {
        // The DFS kept the prefix monochromatic incrementally; accept the
        // witness only after the independent full re-check.
        const MonoVerdict verdict = is_monochromatic(prefix_, coloring_);
        if (!verdict.monochromatic || verdict.color->canonical != target_) {
            throw InternalError("witness failed independent re-verification");
        }
        Witness witness;
        witness.config = cfg_;
        witness.elements = prefix_;
        witness.color = *verdict.color;
        witness.nodes_explored = out_.nodes;
        out_.witnesses.push_back(std::move(witness));
    }

    const SearchConfig& cfg_;
    const Coloring& coloring_;
    const std::atomic<bool>* cancel_;
    u64* serial_budget_;
    std::atomic<u64>* shared_budget_;

    BranchOutput out_;
    u64 witness_limit_ = 1;
    u64 target_ = 0;
    u64 budget_chunk_ = 0;
    std::vector<u64> prefix_;
    std::vector<FSState> states_;
    std::vector<u64> valuation_masks_;  // one bitmask of seen exponents per basis prime
};

bool lex_less(const Witness& a, const Witness& b) {
    return a.elements < b.elements;
}

}  // namespace

std::optional<Witness> verify_witness(std::span<const u64> elements, const SearchConfig& config,
                                      const Coloring& coloring) {
    validate_config(config, coloring);
    if (elements.size() != config.target_size) {
        throw UsageError("set has " + std::to_string(elements.size()) + " elements, config expects " +
                         std::to_string(config.target_size));
    }
    for (u64 e : elements) {
        if (e > config.bound) throw UsageError("element " + std::to_string(e) + " exceeds the bound");
    }
    const MonoVerdict verdict = is_monochromatic(elements, coloring);
    if (!verdict.monochromatic) return std::nullopt;

    Witness witness;
    witness.config = config;
    witness.elements.assign(elements.begin(), elements.end());
    std::sort(witness.elements.begin(), witness.elements.end());
    witness.color = *verdict.color;
    return witness;
}

EnumerateResult enumerate_serial(const SearchConfig& cfg, const Coloring& coloring, u64 limit) {
    validate_config(cfg, coloring);
    if (limit < 1) throw UsageError("witness limit must be at least 1");

    EnumerateResult result;
    u64 budget_left = cfg.node_budget.value_or(0);
    BranchExplorer explorer(cfg, coloring, nullptr, cfg.node_budget ? &budget_left : nullptr,
                            nullptr);

    const u64 first_max = first_element_max(cfg);
    for (u64 first = 1; first <= first_max; ++first) {
        BranchOutput out = explorer.run(first, limit - result.witnesses.size());
        result.nodes_explored += out.nodes;
        for (auto& w : out.witnesses) result.witnesses.push_back(std::move(w));
        if (out.budget_hit) {
            result.outcome = SearchOutcome::BudgetExhausted;
            return result;
        }
        if (result.witnesses.size() >= limit) break;
    }
    result.outcome =
        result.witnesses.empty() ? SearchOutcome::NotFound : SearchOutcome::Found;
    return result;
}

EnumerateResult enumerate_parallel(const SearchConfig& cfg, const Coloring& coloring, u64 limit) {
    validate_config(cfg, coloring);
    if (limit < 1) throw UsageError("witness limit must be at least 1");

    // Exact budget accounting is order-dependent; keep deterministic
    // budgeted runs on the serial lane.
    if (cfg.deterministic && cfg.node_budget) return enumerate_serial(cfg, coloring, limit);

    const bool deterministic = cfg.deterministic;
    const u64 first_max = first_element_max(cfg);
    std::atomic<bool> cancel{false};
    std::atomic<u64> shared_budget{cfg.node_budget.value_or(0)};
    std::atomic<u64> total_nodes{0};
    std::atomic<bool> budget_hit{false};
    std::vector<Witness> collected;
    std::mutex collected_mu;
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::mutex failure_mu;

#ifdef _OPENMP
    const int threads = cfg.workers > 0 ? static_cast<int>(cfg.workers) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long first = 1; first <= static_cast<long long>(first_max); ++first) {
        if (failed.load(std::memory_order_relaxed)) continue;
        if (!deterministic && cancel.load(std::memory_order_relaxed)) continue;
        try {
            BranchExplorer explorer(cfg, coloring, deterministic ? nullptr : &cancel, nullptr,
                                    cfg.node_budget ? &shared_budget : nullptr);
            BranchOutput out = explorer.run(static_cast<u64>(first), limit);
            total_nodes.fetch_add(out.nodes, std::memory_order_relaxed);
            if (out.budget_hit) budget_hit.store(true, std::memory_order_relaxed);
            if (!out.witnesses.empty()) {
                const std::lock_guard<std::mutex> lock(collected_mu);
                for (auto& w : out.witnesses) collected.push_back(std::move(w));
                if (!deterministic && collected.size() >= limit) {
                    cancel.store(true, std::memory_order_relaxed);
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(collected.begin(), collected.end(), lex_less);
    if (collected.size() > limit) collected.resize(limit);

    EnumerateResult result;
    result.witnesses = std::move(collected);
    result.nodes_explored = total_nodes.load();
    if (result.witnesses.size() >= limit) {
        result.outcome = SearchOutcome::Found;
    } else if (budget_hit.load()) {
        result.outcome = SearchOutcome::BudgetExhausted;
    } else {
        result.outcome =
            result.witnesses.empty() ? SearchOutcome::NotFound : SearchOutcome::Found;
    }
    return result;
}

namespace {

SearchResult to_find_result(EnumerateResult&& enumerated) {
    SearchResult result;
    result.outcome = enumerated.outcome;
    result.nodes_explored = enumerated.nodes_explored;
    if (!enumerated.witnesses.empty()) {
        result.witness = std::move(enumerated.witnesses.front());
        result.outcome = SearchOutcome::Found;
    }
    return result;
}

}  // namespace

SearchResult find_serial(const SearchConfig& cfg, const Coloring& coloring) {
    return to_find_result(enumerate_serial(cfg, coloring, 1));
}

SearchResult find_parallel(const SearchConfig& cfg, const Coloring& coloring) {
    return to_find_result(enumerate_parallel(cfg, coloring, 1));
}

SearchResult find_monochromatic(const SearchConfig& cfg, const Coloring& coloring) {
    return cfg.workers > 1 ? find_parallel(cfg, coloring) : find_serial(cfg, coloring);
}

EnumerateResult enumerate_witnesses(const SearchConfig& cfg, const Coloring& coloring, u64 limit) {
    return cfg.workers > 1 ? enumerate_parallel(cfg, coloring, limit)
                           : enumerate_serial(cfg, coloring, limit);
}

}  // namespace folkman
