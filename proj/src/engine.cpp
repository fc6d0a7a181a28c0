#include "lazymatch/engine.hpp"

namespace lazymatch {

GameRecord run_game(const Scheduler& scheduler, Builder& builder, const GameConfig& config,
                    long long max_rounds, bool record_snapshots) {
    if (max_rounds < 0) throw std::invalid_argument("run_game: max_rounds must be >= 0");
    GameState state(config);
    GameTranscript transcript;
    transcript.config = state.config();
    for (long long round = 0; round < max_rounds; ++round) {
        auto move = builder.next(state);
        if (!move) break;
        state.check_move(*move);
        auto decision = scheduler.decide(state, *move);
        state.apply_round(*move, decision.chosen);
        transcript.moves.push_back(std::move(*move));
        transcript.decisions.push_back(std::move(decision.chosen));
        if (record_snapshots) transcript.snapshots.push_back(state.assignment());
    }
    return {result_of(state), std::move(transcript)};
}

}  // namespace lazymatch
