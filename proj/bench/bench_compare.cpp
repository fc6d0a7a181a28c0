// Serial-vs-parallel comparison for the two sweep kernels: the exhaustive
// minimax search (fans out over first-round neighborhoods) and a batch of
// certified adversary games (fans out over (n, alpha) cells). Each kernel
// is checked for agreement with its serial reference before timing is
// reported.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lazymatch/bounds.hpp"
#include "lazymatch/engine.hpp"
#include "lazymatch/minimax.hpp"

using namespace lazymatch;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

long long sweep_games_serial(int max_n, int max_alpha) {
    long long total_matched = 0;
    for (int n = 2; n <= max_n; ++n)
        for (int alpha = 1; alpha <= max_alpha; ++alpha) {
            const auto exact = max_sum_exact(n, alpha);
            BalanceScheduler balance;
            AdversaryBuilder builder(AdversarySolution{n, alpha, exact.witness});
            const auto record = run_game(balance, builder, GameConfig{alpha, n, false});
            total_matched += record.result.matched_count;
        }
    return total_matched;
}

long long sweep_games_parallel(int max_n, int max_alpha) {
    long long total_matched = 0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(+ : total_matched)
    for (int n = 2; n <= max_n; ++n)
        for (int alpha = 1; alpha <= max_alpha; ++alpha) {
            const auto exact = max_sum_exact(n, alpha);
            BalanceScheduler balance;
            AdversaryBuilder builder(AdversarySolution{n, alpha, exact.witness});
            const auto record = run_game(balance, builder, GameConfig{alpha, n, false});
            total_matched += record.result.matched_count;
        }
    return total_matched;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    {
        BalanceScheduler balance;
        auto start = std::chrono::steady_clock::now();
        const int serial = minimax_value_serial(4, 2, balance);
        const double serial_s = seconds_since(start);

        start = std::chrono::steady_clock::now();
        const int parallel = minimax_value(4, 2, balance);
        const double parallel_s = seconds_since(start);

        if (serial != parallel) {
            std::printf("minimax kernels disagree: %d vs %d\n", serial, parallel);
            return 1;
        }
        std::printf("%-28s %12.4f %12.4f %8.2fx\n", "minimax n=4 alpha=2", serial_s, parallel_s,
                    serial_s / parallel_s);
    }

    {
        auto start = std::chrono::steady_clock::now();
        const long long serial = sweep_games_serial(120, 4);
        const double serial_s = seconds_since(start);

        start = std::chrono::steady_clock::now();
        const long long parallel = sweep_games_parallel(120, 4);
        const double parallel_s = seconds_since(start);

        if (serial != parallel) {
            std::printf("sweep kernels disagree: %lld vs %lld\n", serial, parallel);
            return 1;
        }
        std::printf("%-28s %12.4f %12.4f %8.2fx\n", "game sweep n<=120 alpha<=4", serial_s,
                    parallel_s, serial_s / parallel_s);
    }
    return 0;
}
