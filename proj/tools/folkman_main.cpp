// folkman: search for monochromatic finite-sums sets under p-adic valuation
// colourings, verify them, and extract a prime outside the chosen basis.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "folkman/claims.hpp"
#include "folkman/coloring.hpp"
#include "folkman/search.hpp"

using json = nlohmann::ordered_json;
using namespace folkman;

namespace {

enum ExitCode : int {
    kExitFound = 0,
    kExitNotFound = 1,
    kExitUsage = 2,
    kExitOverflow = 3,
    kExitBudget = 4,
    kExitShortfall = 5,
};

struct CommonOpts {
    std::string scheme = "proof1";
    std::size_t primes = 1;
    std::string table;
    bool json_output = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--scheme", opts.scheme, "Colouring scheme: proof1, proof2 or custom")
        ->required();
    cmd->add_option("--primes", opts.primes, "Basis size N: the first N primes")->required();
    cmd->add_option("--table", opts.table, "Colour table file (custom scheme only)");
    cmd->add_flag("--json", opts.json_output, "Emit the machine-readable JSON report");
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    u64 elapsed_ms() const {
        return static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
    }
};

std::vector<u64> parse_set(const std::string& csv) {
    std::vector<u64> elements;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            elements.push_back(value);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + item + "' as a positive integer");
        }
    }
    if (elements.empty()) throw UsageError("--set needs at least one element");
    return elements;
}

json witness_json(const Witness& witness) {
    return json{{"elements", witness.elements},
                {"color_tuple", witness.color.components},
                {"color_index", witness.color.canonical}};
}

json claims_json(const ClaimReport& report) {
    json injectivity = json::array();
    for (const auto& inj : report.injectivity) {
        json collisions = json::array();
        for (const auto& c : inj.collisions) {
            collisions.push_back(json{{"exponent", c.exponent}, {"elements", c.elements}});
        }
        injectivity.push_back(
            json{{"p", inj.prime}, {"injective", inj.injective}, {"collisions", collisions}});
    }
    json multiplicity = json::array();
    for (const auto& mult : report.multiplicity) {
        json counts = json::object();
        for (const auto& [exponent, count] : mult.counts) {
            counts[std::to_string(exponent)] = count;
        }
        multiplicity.push_back(json{{"p", mult.prime},
                                    {"bound", mult.bound},
                                    {"counts", counts},
                                    {"flagged", mult.flagged}});
    }
    return json{{"scheme", scheme_name(report.scheme)},
                {"passed", report.passed},
                {"injectivity", injectivity},
                {"multiplicity", multiplicity},
                {"violations", report.violations}};
}

json extraction_json(const ExtractionResult& extraction) {
    return json{{"selected", extraction.selected}, {"partial_sum", extraction.partial_sum},
                {"extra", extraction.extra},       {"total", extraction.total},
                {"smooth", extraction.smooth},     {"cofactor", extraction.cofactor},
                {"new_prime", extraction.new_prime}};
}

json report_head(const std::string& command, const CommonOpts& opts) {
    return json{{"command", command}, {"scheme", opts.scheme}, {"primes", opts.primes}};
}

void emit(json& report, const CommonOpts& opts, u64 nodes, u64 elapsed_ms,
          const std::string& human) {
    report["nodes_explored"] = nodes;
    report["elapsed_ms"] = elapsed_ms;
    if (opts.json_output) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string tuple_text(const ColorKey& key) {
    std::string text = "(";
    for (std::size_t i = 0; i < key.components.size(); ++i) {
        if (i > 0) text += ", ";
        text += std::to_string(key.components[i]);
    }
    text += ")";
    return text;
}

std::string set_text(const std::vector<u64>& elements) {
    std::string text = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) text += ", ";
        text += std::to_string(elements[i]);
    }
    text += "}";
    return text;
}

std::string claims_text(const ClaimReport& report) {
    std::ostringstream out;
    out << "claims: " << (report.passed ? "pass" : "FAIL") << "\n";
    for (const auto& inj : report.injectivity) {
        out << "  nu_" << inj.prime << " injective: " << (inj.injective ? "yes" : "no") << "\n";
    }
    for (const auto& mult : report.multiplicity) {
        out << "  nu_" << mult.prime << " multiplicities (bound " << mult.bound << "):";
        for (const auto& [exponent, count] : mult.counts) {
            out << " " << exponent << ":" << count;
        }
        out << "\n";
    }
    for (const auto& violation : report.violations) out << "  violation: " << violation << "\n";
    return out.str();
}

int run_color(const CommonOpts& opts, const std::vector<u64>& numbers) {
    const Timer timer;
    const auto basis = PrimeBasis::first_primes(opts.primes);
    const Scheme scheme = scheme_from_name(opts.scheme);
    const auto coloring = make_coloring(scheme, basis, opts.table);

    json colors = json::array();
    std::ostringstream human;
    for (u64 n : numbers) {
        const auto key = coloring->key(n);
        if (key) {
            colors.push_back(json{{"n", n},
                                  {"color_tuple", key->components},
                                  {"color_index", key->canonical}});
            human << n << " -> " << tuple_text(*key) << "  index " << key->canonical << "\n";
        } else {
            colors.push_back(json{{"n", n}, {"color_tuple", nullptr}, {"color_index", nullptr}});
            human << n << " -> rejected (outside the colour table)\n";
        }
    }

    json report = report_head("color", opts);
    report["outcome"] = "ok";
    report["colors"] = std::move(colors);
    emit(report, opts, 0, timer.elapsed_ms(), human.str());
    return kExitFound;
}

struct SearchOpts {
    u64 size = 1;
    u64 bound = 1;
    bool deterministic = false;
    bool claim_pruning = false;
    std::optional<u64> budget;
    unsigned workers = 1;
    u64 limit = 1;
};

int run_search(const CommonOpts& opts, const SearchOpts& search_opts) {
    const Timer timer;
    SearchConfig cfg;
    cfg.scheme = scheme_from_name(opts.scheme);
    cfg.basis = PrimeBasis::first_primes(opts.primes);
    cfg.target_size = search_opts.size;
    cfg.bound = search_opts.bound;
    cfg.deterministic = search_opts.deterministic;
    cfg.node_budget = search_opts.budget;
    cfg.workers = search_opts.workers;
    cfg.claim_pruning = search_opts.claim_pruning;
    const auto coloring = make_coloring(cfg.scheme, cfg.basis, opts.table);

    const EnumerateResult result = enumerate_witnesses(cfg, *coloring, search_opts.limit);

    json report = report_head("search", opts);
    report["config"] = json{{"size", cfg.target_size},
                            {"bound", cfg.bound},
                            {"deterministic", cfg.deterministic},
                            {"budget", cfg.node_budget ? json(*cfg.node_budget) : json(nullptr)},
                            {"workers", cfg.workers},
                            {"limit", search_opts.limit},
                            {"claim_pruning", cfg.claim_pruning}};
    report["outcome"] = outcome_name(result.outcome);

    std::ostringstream human;
    human << "outcome: " << outcome_name(result.outcome) << "\n";
    if (!result.witnesses.empty()) {
        report["witness"] = witness_json(result.witnesses.front());
        if (search_opts.limit > 1) {
            json list = json::array();
            for (const auto& w : result.witnesses) list.push_back(witness_json(w));
            report["witnesses"] = std::move(list);
        }
        for (const auto& w : result.witnesses) {
            human << "witness " << set_text(w.elements) << "  colour " << tuple_text(w.color)
                  << "  index " << w.color.canonical << "\n";
        }
    }
    // deterministic runs promise byte-identical reports; wall-clock time is
    // the one field that cannot keep that promise
    const u64 elapsed = cfg.deterministic ? 0 : timer.elapsed_ms();
    human << "nodes: " << result.nodes_explored << "\n";
    emit(report, opts, result.nodes_explored, elapsed, human.str());

    switch (result.outcome) {
        case SearchOutcome::Found: return kExitFound;
        case SearchOutcome::NotFound: return kExitNotFound;
        case SearchOutcome::BudgetExhausted: return kExitBudget;
    }
    return kExitUsage;
}

// Wraps user-supplied elements as a Witness once their monochromaticity has
// been confirmed.
Witness witness_for_set(std::vector<u64> elements, Scheme scheme, const PrimeBasis& basis,
                        const ColorKey& color) {
    Witness witness;
    witness.config.scheme = scheme;
    witness.config.basis = basis;
    witness.config.target_size = elements.size();
    witness.config.bound = *std::max_element(elements.begin(), elements.end());
    witness.elements = std::move(elements);
    std::sort(witness.elements.begin(), witness.elements.end());
    witness.color = color;
    return witness;
}

int run_verify(const CommonOpts& opts, const std::string& set_csv) {
    const Timer timer;
    const auto basis = PrimeBasis::first_primes(opts.primes);
    const Scheme scheme = scheme_from_name(opts.scheme);
    const auto coloring = make_coloring(scheme, basis, opts.table);
    const std::vector<u64> elements = parse_set(set_csv);

    const MonoVerdict verdict = is_monochromatic(elements, *coloring);
    const ClaimReport claims = claim_report(elements, basis, scheme);

    json report = report_head("verify", opts);
    report["config"] = json{{"set", elements}};
    std::ostringstream human;

    if (verdict.monochromatic) {
        report["outcome"] = "found";
        const Witness witness = witness_for_set(elements, scheme, basis, *verdict.color);
        report["witness"] = witness_json(witness);
        report["claims"] = claims_json(claims);
        human << "monochromatic: yes\ncolour " << tuple_text(*verdict.color) << "  index "
              << verdict.color->canonical << "\n"
              << claims_text(claims);
        emit(report, opts, 0, timer.elapsed_ms(), human.str());
        return kExitFound;
    }

    report["outcome"] = "not_found";
    json offender = json{{"sum", *verdict.offending_sum}};
    if (verdict.offending_color) {
        offender["color_tuple"] = verdict.offending_color->components;
        offender["color_index"] = verdict.offending_color->canonical;
    } else {
        offender["color_tuple"] = nullptr;
        offender["color_index"] = nullptr;
    }
    report["offender"] = std::move(offender);
    report["claims"] = claims_json(claims);
    human << "monochromatic: no\noffending sum " << *verdict.offending_sum;
    if (verdict.offending_color) {
        human << " has colour " << tuple_text(*verdict.offending_color);
    } else {
        human << " is outside the colour table";
    }
    human << "\n" << claims_text(claims);
    emit(report, opts, 0, timer.elapsed_ms(), human.str());
    return kExitNotFound;
}

int run_extract(const CommonOpts& opts, const std::string& set_csv) {
    const Timer timer;
    const auto basis = PrimeBasis::first_primes(opts.primes);
    const Scheme scheme = scheme_from_name(opts.scheme);
    const auto coloring = make_coloring(scheme, basis, opts.table);
    const std::vector<u64> elements = parse_set(set_csv);

    const MonoVerdict verdict = is_monochromatic(elements, *coloring);
    if (!verdict.monochromatic) {
        throw UsageError("the set is not monochromatic under " + opts.scheme +
                         "; nothing to extract");
    }
    const Witness witness = witness_for_set(elements, scheme, basis, *verdict.color);
    const ClaimReport claims = claim_report(elements, basis, scheme);
    const ExtractionResult extraction = extract_new_prime(witness);

    json report = report_head("extract", opts);
    report["config"] = json{{"set", elements}};
    report["outcome"] = "found";
    report["witness"] = witness_json(witness);
    report["claims"] = claims_json(claims);
    report["extraction"] = extraction_json(extraction);

    std::ostringstream human;
    human << "selected " << set_text(extraction.selected) << "  partial sum "
          << extraction.partial_sum << "\n"
          << "extra " << extraction.extra << "  total " << extraction.total << "\n"
          << "smooth part " << extraction.smooth << "  cofactor " << extraction.cofactor << "\n"
          << "new prime outside the basis: " << extraction.new_prime << "\n";
    emit(report, opts, 0, timer.elapsed_ms(), human.str());
    return kExitFound;
}

int run_info(const CommonOpts& opts) {
    const Timer timer;
    const auto basis = PrimeBasis::first_primes(opts.primes);
    const Scheme scheme = scheme_from_name(opts.scheme);
    if (scheme == Scheme::Custom) {
        throw UsageError("info describes the proof1/proof2 schemes only");
    }

    const u64 colors = color_count(scheme, basis);
    bool astronomical = false;
    u64 required = 0;
    try {
        required = required_size(scheme, basis);
    } catch (const OverflowError&) {
        astronomical = true;
    }
    const bool feasible = !astronomical && required <= kMaxFsElements;

    json report = report_head("info", opts);
    report["outcome"] = "ok";
    report["info"] = json{{"basis", basis.primes()},
                          {"color_count", colors},
                          {"required_m", astronomical ? json("astronomical") : json(required)},
                          {"feasible", feasible}};

    std::ostringstream human;
    human << "basis " << set_text(basis.primes()) << "\ncolours " << colors << "\nrequired M ";
    if (astronomical) {
        human << "astronomical (exceeds 2^63 - 1)";
    } else {
        human << required;
    }
    human << "\nfeasible at full M (M <= " << kMaxFsElements << "): " << (feasible ? "yes" : "no")
          << "\n";
    emit(report, opts, 0, timer.elapsed_ms(), human.str());
    return astronomical ? kExitOverflow : kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic finite-sums witnesses under p-adic valuation colourings"};
    app.require_subcommand(1);

    CommonOpts color_opts;
    std::vector<u64> color_numbers;
    CLI::App* color_cmd = app.add_subcommand("color", "Colour the given numbers");
    add_common(color_cmd, color_opts);
    color_cmd->add_option("numbers", color_numbers, "Numbers to colour")->required();

    CommonOpts search_common;
    SearchOpts search_opts;
    CLI::App* search_cmd =
        app.add_subcommand("search", "Find monochromatic finite-sums sets within a bound");
    add_common(search_cmd, search_common);
    search_cmd->add_option("--size", search_opts.size, "Elements per witness (M)")->required();
    search_cmd->add_option("--bound", search_opts.bound, "Elements drawn from [1..B]")->required();
    search_cmd->add_flag("--deterministic", search_opts.deterministic,
                         "Reproducible lex-least search with a byte-stable report");
    search_cmd->add_flag("--claim-pruning", search_opts.claim_pruning,
                         "Skip candidates repeating a chosen valuation (proof1 only)");
    u64 budget_flag = 0;
    CLI::Option* budget_opt =
        search_cmd->add_option("--budget", budget_flag, "Abort after this many search nodes");
    search_cmd->add_option("--workers", search_opts.workers, "Worker threads for the search");
    search_cmd->add_option("--limit", search_opts.limit, "Collect up to this many witnesses");

    CommonOpts verify_opts;
    std::string verify_set;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Check a set and report the claim tables");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--set", verify_set, "Comma-separated elements")->required();

    CommonOpts extract_opts;
    std::string extract_set;
    CLI::App* extract_cmd =
        app.add_subcommand("extract", "Derive a prime outside the basis from a witness");
    add_common(extract_cmd, extract_opts);
    extract_cmd->add_option("--set", extract_set, "Comma-separated witness elements")->required();

    CommonOpts info_opts;
    CLI::App* info_cmd =
        app.add_subcommand("info", "Colour count and guaranteed witness size for a scheme");
    add_common(info_cmd, info_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*color_cmd) return run_color(color_opts, color_numbers);
        if (*search_cmd) {
            if (*budget_opt) search_opts.budget = budget_flag;
            return run_search(search_common, search_opts);
        }
        if (*verify_cmd) return run_verify(verify_opts, verify_set);
        if (*extract_cmd) return run_extract(extract_opts, extract_set);
        if (*info_cmd) return run_info(info_opts);
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const ShortfallError& e) {
        std::cerr << "shortfall: " << e.what() << "\n";
        return kExitShortfall;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
