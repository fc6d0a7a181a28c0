#include "lazymatch/schedulers.hpp"

#include <algorithm>

namespace lazymatch {

SchedulerDecision balance_decide(Assignment working, std::span<const int> neighbors, int alpha) {
    SchedulerDecision decision;
    working.push_vertex();
    const int u = working.presented() - 1;

    for (int d : neighbors) {
        if (working.group_size(u) >= alpha) break;
        if (is_strongly_available(working, neighbors, u, d)) working.assign(u, d);
    }

    while (true) {
        const int need = working.group_size(u) + 2;
        int donor = -1;
        int donor_size = need - 1;
        for (int e = 0; e < u; ++e) {
            const int size = working.group_size(e);
            if (size <= donor_size) continue;
            if (is_ready(working, neighbors, u, e)) {
                donor = e;
                donor_size = size;
            }
        }
        if (donor == -1) break;
        int moved = -1;
        for (int d : working.group(donor)) {
            if (is_available(working, neighbors, u, d)) {
                moved = d;
                break;
            }
        }
        working.transfer(moved, u);
        decision.transfers.emplace_back(donor, moved);
    }

    decision.chosen = working.group(u);
    return decision;
}

SchedulerDecision greedy_decide(const Assignment& current, std::span<const int> neighbors) {
    return balance_decide(current, neighbors, 1);
}

SchedulerDecision BalanceScheduler::decide(const GameState& state, const RoundMove& move) const {
    return balance_decide(state.assignment(), move.neighbors, state.alpha());
}

SchedulerDecision GreedyScheduler::decide(const GameState& state, const RoundMove& move) const {
    return greedy_decide(state.assignment(), move.neighbors);
}

SchedulerDecision RandomScheduler::decide(const GameState& state, const RoundMove& move) const {
    std::vector<int> pool = move.neighbors;
    std::shuffle(pool.begin(), pool.end(), rng_);
    const int cap = std::min<int>(state.alpha(), static_cast<int>(pool.size()));
    std::uniform_int_distribution<int> size_dist(0, cap);
    pool.resize(size_dist(rng_));
    std::sort(pool.begin(), pool.end());
    return {std::move(pool), {}};
}

std::unique_ptr<Scheduler> make_scheduler(const std::string& name, std::uint64_t seed) {
    if (name == "balance") return std::make_unique<BalanceScheduler>();
    if (name == "greedy") return std::make_unique<GreedyScheduler>();
    if (name == "noop") return std::make_unique<NoopScheduler>();
    if (name == "random") return std::make_unique<RandomScheduler>(seed);
    throw std::invalid_argument("unknown scheduler: " + name);
}

}  // namespace lazymatch
