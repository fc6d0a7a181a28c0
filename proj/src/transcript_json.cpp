#include "lazymatch/transcript_json.hpp"

#include <json.hpp>

namespace lazymatch {

std::string transcript_to_json(const GameTranscript& transcript) {
    nlohmann::json root;
    root["config"] = {{"alpha", transcript.config.alpha},
                      {"d_count", transcript.config.d_count},
                      {"infinite_mode", transcript.config.infinite_mode}};
    root["moves"] = nlohmann::json::array();
    for (const auto& move : transcript.moves)
        root["moves"].push_back({{"u", move.u_id}, {"neighbors", move.neighbors}});
    root["decisions"] = transcript.decisions;
    return root.dump();
}

GameTranscript transcript_from_json(const std::string& text) {
    try {
        const auto root = nlohmann::json::parse(text);
        GameTranscript transcript;
        const auto& config = root.at("config");
        transcript.config.alpha = config.at("alpha").get<int>();
        transcript.config.d_count = config.at("d_count").get<int>();
        transcript.config.infinite_mode = config.at("infinite_mode").get<bool>();
        for (const auto& move : root.at("moves"))
            transcript.moves.push_back(
                RoundMove{move.at("u").get<int>(), move.at("neighbors").get<std::vector<int>>()});
        transcript.decisions = root.at("decisions").get<std::vector<std::vector<int>>>();
        return transcript;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("transcript json: ") + e.what());
    }
}

}  // namespace lazymatch
