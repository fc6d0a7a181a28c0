#pragma once

#include <string>

#include "lazymatch/game.hpp"

namespace lazymatch {

// Canonical wire form:
//   {"config":{"alpha":..,"d_count":..,"infinite_mode":..},
//    "moves":[{"u":..,"neighbors":[..]},...],
//    "decisions":[[..],...]}
// with neighbors and decisions sorted ascending.
std::string transcript_to_json(const GameTranscript& transcript);

// Throws std::invalid_argument on malformed input; game-rule consistency is
// checked by replay, not here.
GameTranscript transcript_from_json(const std::string& text);

}  // namespace lazymatch
