#include "lazymatch/game.hpp"

#include <algorithm>

namespace lazymatch {

void GameConfig::validate() const {
    if (alpha < 1) throw std::invalid_argument("game config: alpha must be >= 1");
    if (d_count < 1) throw std::invalid_argument("game config: d_count must be >= 1");
}

namespace {

GameConfig validated(GameConfig c) {
    c.validate();
    return c;
}

bool sorted_unique_in_range(const std::vector<int>& v, int upper) {
    int prev = -1;
    for (int d : v) {
        if (d < 0 || d >= upper || d <= prev) return false;
        prev = d;
    }
    return true;
}

}  // namespace

GameState::GameState(GameConfig config)
    : config_(validated(config)), assignment_(config_.d_count) {}

void GameState::check_move(const RoundMove& move) const {
    const std::string where = "round " + std::to_string(round_) + ": ";
    if (move.u_id != presented())
        throw RuleViolation(where + "vertex " + std::to_string(move.u_id) +
                            " presented out of order (expected " + std::to_string(presented()) + ")");
    if (!sorted_unique_in_range(move.neighbors, d_count()))
        throw RuleViolation(where + "neighborhood is not a sorted subset of D");
}

void GameState::apply_round(const RoundMove& move, const std::vector<int>& chosen) {
    check_move(move);
    const std::string where = "round " + std::to_string(round_) + ": ";
    if (!sorted_unique_in_range(chosen, d_count()))
        throw RuleViolation(where + "chosen set is not a sorted subset of D");
    if (static_cast<int>(chosen.size()) > alpha())
        throw RuleViolation(where + "chose " + std::to_string(chosen.size()) +
                            " elements, capacity is " + std::to_string(alpha()));
    if (!std::includes(move.neighbors.begin(), move.neighbors.end(), chosen.begin(), chosen.end()))
        throw RuleViolation(where + "chosen set leaves the revealed neighborhood");

    assignment_.push_vertex();
    const int u = move.u_id;
    for (int d : chosen) {
        if (assignment_.owner(d) != -1) assignment_.release(d);
        assignment_.assign(u, d);
    }
    adjacency_.push_back(move.neighbors);
    ++round_;
}

BipartiteGraph GameState::revealed_graph() const {
    return BipartiteGraph{presented(), d_count(), adjacency_};
}

GameResult result_of(const GameState& state) {
    GameResult r;
    r.matched_count = state.matched_count();
    r.game_size_n = max_matching(state.revealed_graph()).size;
    r.per_u_groups = state.assignment().groups();
    return r;
}

GameResult replay(const GameTranscript& t) {
    if (t.moves.size() != t.decisions.size())
        throw RuleViolation("transcript: move and decision counts differ");
    GameState state(t.config);
    for (std::size_t i = 0; i < t.moves.size(); ++i)
        state.apply_round(t.moves[i], t.decisions[i]);
    return result_of(state);
}

}  // namespace lazymatch
