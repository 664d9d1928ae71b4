#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "arcade/keyhunter/cipher.hpp"
#include "json.hpp"

namespace arcade::keyhunter {

inline constexpr int kRounds = 3;
inline constexpr int kAttempts = 5;
inline constexpr std::int64_t kTimeLimitS = 300;
inline constexpr std::size_t kMaxNotesChars = 10000;
inline constexpr int kGridSize = 5;

struct GridCoordinate {
  char column = 'A';  // A-E
  int row = 1;        // 1-5

  bool InGrid() const {
    return column >= 'A' && column < 'A' + kGridSize && row >= 1 && row <= kGridSize;
  }
  std::string Label() const { return std::string(1, column) + std::to_string(row); }
  bool operator==(const GridCoordinate&) const = default;
};

struct Round {
  CipherSpec spec;
  GridCoordinate target;
  std::string plaintext;
  std::string ciphertext;
  bool solved = false;
  int wrong_presses = 0;
  std::int64_t round_elapsed_s = 0;
  int score = 0;
  std::vector<GridCoordinate> red;  // wrong presses, in order
};

enum class State { kPlaying, kWon, kLost };
enum class Tab { kDictionary, kMessage, kNotes, kQuestion };

struct KeyHunterSession {
  content::Difficulty difficulty = content::Difficulty::kEasy;
  std::uint64_t seed = 0;
  std::vector<Round> rounds;
  std::size_t current = 0;
  int attempts_left = kAttempts;
  std::int64_t session_clock_s = 0;
  std::int64_t round_started_s = 0;
  State state = State::kPlaying;
  std::string notes;
};

struct PressResult {
  bool hit = false;
  int round_score = 0;  // on a hit
  int attempts_left = 0;
  State state = State::kPlaying;
  bool timed_out = false;
  // Filled only once the round is resolved by a hit.
  std::optional<std::string> revealed_plaintext;
};

// Plaintext naming a coordinate, e.g. C4 -> "ROW FOUR COL CHARLIE".
std::string CoordinatePlaintext(const GridCoordinate& coord);

KeyHunterSession NewSession(content::Difficulty difficulty, std::uint64_t seed);
PressResult PressButton(KeyHunterSession& session, const GridCoordinate& coord,
                        std::int64_t at_s);
// Advances the session clock without pressing; ends the game once past 300 s.
void AdvanceClock(KeyHunterSession& session, std::int64_t at_s);
std::string TabContent(const KeyHunterSession& session, Tab tab);
void SetNotes(KeyHunterSession& session, std::string text);
int SessionScore(const KeyHunterSession& session);

std::string_view ToString(State state);
std::string_view ToString(Tab tab);
std::optional<Tab> ParseTab(std::string_view text);

// Player-facing view: the current round's cipher name and ciphertext, red
// coordinates, progress, and solved rounds. Never an unsolved target.
nlohmann::json View(const KeyHunterSession& session);
nlohmann::json ToJson(const PressResult& result);
nlohmann::json Snapshot(const KeyHunterSession& session);

}  // namespace arcade::keyhunter
