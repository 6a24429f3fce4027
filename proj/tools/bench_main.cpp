// Times the serial search lane against the OpenMP-parallel lane on the same
// workload and checks that they agree. Exhaustive (witness-free) workloads
// give the fairest comparison because both lanes must visit every node.

#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "folkman/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace folkman;

namespace {

double run_ms(const SearchConfig& cfg, const Coloring& coloring, bool parallel,
              SearchResult& result) {
    const auto start = std::chrono::steady_clock::now();
    result = parallel ? find_parallel(cfg, coloring) : find_serial(cfg, coloring);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel search lanes"};
    // default workload has no witness below the bound, so both lanes must
    // visit the same node set
    std::string scheme_name = "proof1";
    std::size_t primes = 3;
    u64 size = 4;
    u64 bound = 2000;
    unsigned workers = 0;  // 0 = all hardware threads
    int repeats = 3;
    app.add_option("--scheme", scheme_name, "proof1 or proof2");
    app.add_option("--primes", primes, "Basis size N");
    app.add_option("--size", size, "Witness size M");
    app.add_option("--bound", bound, "Element bound B");
    app.add_option("--workers", workers, "Parallel worker count (0 = hardware)");
    app.add_option("--repeats", repeats, "Timed repetitions per lane");
    CLI11_PARSE(app, argc, argv);

    const Scheme scheme = scheme_from_name(scheme_name);
    SearchConfig cfg;
    cfg.scheme = scheme;
    cfg.basis = PrimeBasis::first_primes(primes);
    cfg.target_size = size;
    cfg.bound = bound;
    cfg.deterministic = true;

#ifdef _OPENMP
    if (workers == 0) workers = static_cast<unsigned>(omp_get_max_threads());
#else
    if (workers == 0) workers = 1;
    std::printf("built without OpenMP; the parallel lane runs its branches sequentially\n");
#endif

    std::printf("workload: %s, N=%zu, M=%llu, B=%llu, workers=%u\n", scheme_name.c_str(), primes,
                static_cast<unsigned long long>(size), static_cast<unsigned long long>(bound),
                workers);

    SearchResult serial_result, parallel_result;
    double serial_best = 0, parallel_best = 0;
    for (int r = 0; r < repeats; ++r) {
        cfg.workers = 1;
        const double s = run_ms(cfg, *make_coloring(scheme, cfg.basis), false, serial_result);
        cfg.workers = workers;
        const double p = run_ms(cfg, *make_coloring(scheme, cfg.basis), true, parallel_result);
        serial_best = (r == 0) ? s : std::min(serial_best, s);
        parallel_best = (r == 0) ? p : std::min(parallel_best, p);
    }

    std::printf("serial:   %10.2f ms  nodes %llu  outcome %s\n", serial_best,
                static_cast<unsigned long long>(serial_result.nodes_explored),
                outcome_name(serial_result.outcome).c_str());
    std::printf("parallel: %10.2f ms  nodes %llu  outcome %s\n", parallel_best,
                static_cast<unsigned long long>(parallel_result.nodes_explored),
                outcome_name(parallel_result.outcome).c_str());
    std::printf("speedup:  %10.2fx\n", parallel_best > 0 ? serial_best / parallel_best : 0.0);

    if (serial_result.outcome != parallel_result.outcome) {
        std::printf("LANE MISMATCH: outcomes differ\n");
        return 1;
    }
    if (serial_result.witness && parallel_result.witness &&
        serial_result.witness->elements != parallel_result.witness->elements) {
        std::printf("LANE MISMATCH: witnesses differ\n");
        return 1;
    }
    std::printf("lanes agree\n");
    return 0;
}
