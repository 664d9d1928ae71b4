#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "arcade/platform/game_runner.hpp"
#include "arcade/rng.hpp"
#include "json.hpp"

namespace fixtures {

arcade::content::Question MakeQuestion(const std::string& id, int rank, const std::string& topic,
                                       arcade::content::QuestionKind kind, int choices,
                                       std::vector<int> correct);

// `per_rank` questions at each rank 1-10, topics cycling over `topics`.
arcade::content::ContentPack QuestionBank(int per_rank = 25,
                                          std::vector<std::string> topics = {"cryptography",
                                                                             "networking"});
// `per_tier` emails per difficulty, alternating phishing and legitimate.
arcade::content::ContentPack EmailCorpus(int per_tier = 30);
// One template per attack type covering exactly its required channels.
arcade::content::ContentPack ScenarioPack();

arcade::platform::ContentSet SyntheticContent();
// The packs shipped in the repository's content/ directory.
arcade::platform::ContentSet RepoContent();
std::string RepoContentDir();

// Every object key path in `doc` whose key is one of `keys`.
std::vector<std::string> FindKeys(const nlohmann::json& doc, const std::vector<std::string>& keys);

inline const std::vector<std::string> kHiddenTruthKeys = {"is_phishing", "correct", "target",
                                                          "attack_type"};

// A start record for `game` that every engine accepts; `variant` picks the
// difficulty or trivia mode.
nlohmann::json StartRecord(arcade::platform::Game game, int variant = 0);

// A plausible next action given the current view. Some are deliberately
// invalid so the error paths get exercised.
nlohmann::json RandomAction(arcade::platform::Game game, const nlohmann::json& view,
                            arcade::Rng& rng);

// Client-side solvers that only use what a player sees plus the shipped packs.
// A key hunter round is cracked by encoding each candidate coordinate phrase.
nlohmann::json CrackKeyHunter(const nlohmann::json& view);
nlohmann::json TriviaAnswerKey(const arcade::content::ContentPack& questions,
                               const nlohmann::json& view);
std::string PhishingVerdict(const arcade::content::ContentPack& emails, const nlohmann::json& view);

struct PlayedGame {
  nlohmann::json transcript;  // {game, start, seed, actions}
  nlohmann::json snapshot;
  std::vector<nlohmann::json> responses;  // everything a client would have seen
};

// Drives a runner with random stamped actions until it is terminal or
// `max_steps` actions have been tried. Rejected actions are not recorded.
PlayedGame PlayRandom(arcade::platform::Game game, std::uint64_t seed,
                      const arcade::platform::ContentSet& content, int max_steps = 400);

class ManualClock {
 public:
  explicit ManualClock(std::int64_t start_ms = 1'700'000'000'000) : now_(start_ms) {}
  std::int64_t Now() const { return now_.load(); }
  void Advance(std::int64_t ms) { now_ += ms; }
  std::function<std::int64_t()> AsClock() {
    return [this] { return now_.load(); };
  }

 private:
  std::atomic<std::int64_t> now_;
};

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
