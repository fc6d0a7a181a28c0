#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "lazymatch/game.hpp"

namespace lazymatch {

class Scheduler {
public:
    virtual ~Scheduler() = default;
    virtual std::string name() const = 0;
    // Decide m(u) for the move's vertex against the current state. Must be
    // thread-compatible: distinct games never share a mutable scheduler.
    virtual SchedulerDecision decide(const GameState& state, const RoundMove& move) const = 0;
};

// Core of the balancing strategy, run on a scratch copy of the current
// assignment. First grab up to `alpha` strongly available elements, lowest
// index first. Then, while some vertex e ready for u satisfies
// |m(u)| + 2 <= |m(e)|, take one available element from the largest such
// group (ties: earliest donor, lowest element). The gap condition keeps
// |m(u)| <= alpha. Transfers are reported in the order they were made.
SchedulerDecision balance_decide(Assignment working, std::span<const int> neighbors, int alpha);

// The alpha = 1 specialization: one strongly available element or nothing.
// In an alpha = 1 game no group ever exceeds one element, so the
// rebalancing loop can never fire.
SchedulerDecision greedy_decide(const Assignment& current, std::span<const int> neighbors);

class BalanceScheduler final : public Scheduler {
public:
    std::string name() const override { return "balance"; }
    SchedulerDecision decide(const GameState& state, const RoundMove& move) const override;
};

class GreedyScheduler final : public Scheduler {
public:
    std::string name() const override { return "greedy"; }
    SchedulerDecision decide(const GameState& state, const RoundMove& move) const override;
};

class NoopScheduler final : public Scheduler {
public:
    std::string name() const override { return "noop"; }
    SchedulerDecision decide(const GameState&, const RoundMove&) const override { return {}; }
};

// Picks a uniformly random legal subset each round; used for fuzzing the
// rule-level invariants. Deterministic per seed and call sequence.
class RandomScheduler final : public Scheduler {
public:
    explicit RandomScheduler(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }
    SchedulerDecision decide(const GameState& state, const RoundMove& move) const override;

private:
    mutable std::mt19937_64 rng_;
};

// Selection by name: "balance", "greedy", "noop", "random". Throws
// std::invalid_argument for unknown names.
std::unique_ptr<Scheduler> make_scheduler(const std::string& name, std::uint64_t seed = 0);

}  // namespace lazymatch
