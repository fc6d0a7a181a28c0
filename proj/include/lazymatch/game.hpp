#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lazymatch/assignment.hpp"
#include "lazymatch/matching.hpp"

namespace lazymatch {

// Thrown when a move or decision breaks the game rules.
class RuleViolation : public std::runtime_error {
public:
    explicit RuleViolation(const std::string& what) : std::runtime_error(what) {}
};

struct GameConfig {
    int alpha = 1;               // per-vertex capacity
    int d_count = 1;             // number of servers
    bool infinite_mode = false;  // capacity effectively unbounded: alpha acts as d_count

    int effective_alpha() const { return infinite_mode ? d_count : alpha; }
    void validate() const;  // throws std::invalid_argument
    bool operator==(const GameConfig&) const = default;
};

struct RoundMove {
    int u_id = 0;                // presentation index, equals prior round count
    std::vector<int> neighbors;  // revealed N(u), sorted ascending (may be empty)
    bool operator==(const RoundMove&) const = default;
};

struct SchedulerDecision {
    std::vector<int> chosen;                     // final m(u), sorted ascending
    std::vector<std::pair<int, int>> transfers;  // (donor u, element d), in move order
};

struct GameResult {
    int matched_count = 0;
    int game_size_n = 0;
    std::vector<std::vector<int>> per_u_groups;
    bool operator==(const GameResult&) const = default;
};

struct GameTranscript {
    GameConfig config;
    std::vector<RoundMove> moves;
    std::vector<std::vector<int>> decisions;
    // Per-round state snapshots, populated only when a game is run with
    // snapshot recording; not part of the wire format.
    std::vector<Assignment> snapshots;
    bool operator==(const GameTranscript&) const = default;
};

// Rules engine for the lazy matching game. One round: a new vertex u is
// revealed with N(u), the scheduler picks m(u) subset of N(u) with
// |m(u)| <= alpha, and every earlier group loses the picked elements. The
// engine enforces only these rules; scheduler self-restrictions such as
// availability are not its business, so a decision may strip another
// vertex's last element.
class GameState {
public:
    explicit GameState(GameConfig config);

    const GameConfig& config() const { return config_; }
    int alpha() const { return config_.effective_alpha(); }
    int d_count() const { return config_.d_count; }
    int round() const { return round_; }
    int presented() const { return assignment_.presented(); }
    const Assignment& assignment() const { return assignment_; }
    std::span<const int> neighbors(int u) const { return adjacency_[u]; }

    // Throws RuleViolation unless the move is next in presentation order
    // with a sorted in-range neighborhood. Schedulers may assume any move
    // they are handed has passed this.
    void check_move(const RoundMove& move) const;
    void apply_round(const RoundMove& move, const std::vector<int>& chosen);

    int matched_count() const { return assignment_.nonempty_groups(); }
    BipartiteGraph revealed_graph() const;

private:
    GameConfig config_;
    Assignment assignment_;
    std::vector<std::vector<int>> adjacency_;
    int round_ = 0;
};

// Final score: nonempty groups, offline maximum matching of the revealed
// graph, and the groups themselves.
GameResult result_of(const GameState& state);

// Re-runs a recorded game through the engine; throws RuleViolation when the
// transcript is internally inconsistent.
GameResult replay(const GameTranscript& transcript);

}  // namespace lazymatch
