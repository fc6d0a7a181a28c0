#include "lazymatch/minimax.hpp"

#include <limits>
#include <stdexcept>

namespace lazymatch {

namespace {

std::vector<int> mask_to_neighbors(int mask, int n) {
    std::vector<int> neighbors;
    for (int d = 0; d < n; ++d)
        if (mask & (1 << d)) neighbors.push_back(d);
    return neighbors;
}

// Minimum matched count over all completable continuations of `state`.
int dfs_min(const GameState& state, const Scheduler& scheduler, int n) {
    const int depth = state.presented();
    if (depth == n) return state.matched_count();
    int best = std::numeric_limits<int>::max();
    const int full = (1 << n) - 1;
    for (int mask = 1; mask <= full; ++mask) {
        const RoundMove move{depth, mask_to_neighbors(mask, n)};
        const auto decision = scheduler.decide(state, move);
        GameState child = state;
        child.apply_round(move, decision.chosen);
        // The final graph must have a perfect matching, which saturates
        // every prefix; prune prefixes that fall short.
        if (max_matching(child.revealed_graph()).size < depth + 1) continue;
        best = std::min(best, dfs_min(child, scheduler, n));
    }
    return best;  // the all-of-D neighborhood always survives the prune
}

void check_arguments(int n, int alpha, int n_cap) {
    if (n < 1 || alpha < 1) throw std::invalid_argument("minimax: need n >= 1 and alpha >= 1");
    if (n_cap < 1 || n_cap > 20) throw std::invalid_argument("minimax: cap out of range");
    if (n > n_cap)
        throw std::invalid_argument("minimax: n exceeds the exhaustive-search cap of " +
                                    std::to_string(n_cap));
}

}  // namespace

int minimax_value_serial(int n, int alpha, const Scheduler& scheduler, int n_cap) {
    check_arguments(n, alpha, n_cap);
    const GameState root(GameConfig{alpha, n, false});
    return dfs_min(root, scheduler, n);
}

int minimax_value(int n, int alpha, const Scheduler& scheduler, int n_cap) {
    check_arguments(n, alpha, n_cap);
    const GameState root(GameConfig{alpha, n, false});
    const int full = (1 << n) - 1;
    int best = std::numeric_limits<int>::max();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int mask = 1; mask <= full; ++mask) {
        const RoundMove move{0, mask_to_neighbors(mask, n)};
        const auto decision = scheduler.decide(root, move);
        GameState child = root;
        child.apply_round(move, decision.chosen);
        if (max_matching(child.revealed_graph()).size < 1) continue;
        best = std::min(best, dfs_min(child, scheduler, n));
    }
    return best;
}

}  // namespace lazymatch
