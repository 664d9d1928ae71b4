#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "arcade/content/pack.hpp"
#include "arcade/datadefenders/engine.hpp"
#include "arcade/keyhunter/session.hpp"
#include "arcade/phishing/engine.hpp"
#include "arcade/platform/store.hpp"
#include "arcade/trivia/engine.hpp"
#include "json.hpp"

namespace arcade::platform {

struct ContentSet {
  std::shared_ptr<const content::ContentPack> questions;
  std::shared_ptr<const content::ContentPack> emails;
  std::shared_ptr<const content::ContentPack> scenarios;
  datadefenders::Tuning tuning;
};

// One game session's engine behind a uniform JSON action interface. Given the
// same (game, start record, seed, content) and the same stamped action log,
// it reaches the same state; this is what transcripts replay through.
class GameRunner {
 public:
  // `start` is the resolved start record: trivia {mode, rank|topic, count},
  // keyhunter/phishing {difficulty}, datadefenders {context}.
  GameRunner(Game game, const nlohmann::json& start, std::uint64_t seed,
             const ContentSet& content);

  Game game() const { return game_; }
  std::uint64_t seed() const { return seed_; }

  // Overwrites any timing fields in `action` with server-side values:
  // milliseconds since the session started and since the current prompt.
  nlohmann::json Stamp(nlohmann::json action, std::int64_t since_start_ms,
                       std::int64_t since_prompt_ms) const;
  // True when the action resolves a prompt (the next prompt's timer restarts).
  static bool ResetsPrompt(const nlohmann::json& action);

  nlohmann::json Apply(const nlohmann::json& action);
  nlohmann::json View() const;
  bool Terminal() const;
  std::int64_t Score() const;
  nlohmann::json Outcome() const;
  nlohmann::json Snapshot() const;
  std::optional<int> NewTriviaRank() const;
  std::optional<DataDefendersContext> Progress() const;

 private:
  nlohmann::json ApplyTrivia(const std::string& name, const nlohmann::json& payload);
  nlohmann::json ApplyKeyHunter(const std::string& name, const nlohmann::json& payload);
  nlohmann::json ApplyPhishing(const std::string& name, const nlohmann::json& payload);
  nlohmann::json ApplyDataDefenders(const std::string& name, const nlohmann::json& payload);

  Game game_;
  std::uint64_t seed_;
  ContentSet content_;
  std::variant<trivia::TriviaSession, keyhunter::KeyHunterSession, phishing::PhishingSession,
               datadefenders::HostingState>
      state_;
};

// Builds the runner for a transcript and re-applies every recorded action.
GameRunner ReplayTranscript(const nlohmann::json& transcript, const ContentSet& content);

}  // namespace arcade::platform
