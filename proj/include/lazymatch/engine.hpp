#pragma once

#include "lazymatch/builders.hpp"
#include "lazymatch/schedulers.hpp"

namespace lazymatch {

struct GameRecord {
    GameResult result;
    GameTranscript transcript;
};

// Alternates builder move and scheduler decision until the builder signals
// done or max_rounds is hit. Rule violations from either side propagate as
// exceptions, aborting the game with a diagnostic. With record_snapshots
// the transcript carries the full assignment after every round.
GameRecord run_game(const Scheduler& scheduler, Builder& builder, const GameConfig& config,
                    long long max_rounds = 1'000'000, bool record_snapshots = false);

}  // namespace lazymatch
