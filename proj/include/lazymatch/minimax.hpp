#pragma once

#include "lazymatch/schedulers.hpp"

namespace lazymatch {

inline constexpr int kDefaultMinimaxCap = 4;

// Exhaustive worst case over builder play for a deterministic scheduler.
// The builder is restricted to games with |U| = |D| = n where every vertex
// has a nonempty neighborhood and the final graph has a perfect matching;
// branches whose partial graph cannot extend to one are pruned. Each round
// enumerates all 2^n - 1 neighborhoods, so this is a tiny-n oracle only;
// n above n_cap throws std::invalid_argument.
//
// minimax_value fans the first round out across OpenMP threads, each branch
// owning its private game state; minimax_value_serial is the plain
// recursive reference the parallel kernel is tested against.
int minimax_value(int n, int alpha, const Scheduler& scheduler, int n_cap = kDefaultMinimaxCap);
int minimax_value_serial(int n, int alpha, const Scheduler& scheduler,
                         int n_cap = kDefaultMinimaxCap);

}  // namespace lazymatch
