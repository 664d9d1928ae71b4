#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

struct sqlite3;

namespace arcade::platform {

enum class Game { kTrivia, kKeyHunter, kPhishing, kDataDefenders };
inline constexpr std::array<Game, 4> kAllGames = {Game::kTrivia, Game::kKeyHunter,
                                                  Game::kPhishing, Game::kDataDefenders};

std::string_view ToString(Game game);
std::optional<Game> ParseGame(std::string_view text);

enum class Role { kPlayer, kAdmin };
std::string_view ToString(Role role);

struct UserRow {
  std::int64_t id = 0;
  std::string nickname;
  std::string email;
  std::string username;
  Role role = Role::kPlayer;
};

struct DataDefendersContext {
  int day = 1;
  int reputation = 50;
  int money = 0;
  std::array<int, 4> upgrades{};

  bool operator==(const DataDefendersContext&) const = default;
};

struct StatsRow {
  std::int64_t user_id = 0;
  std::int64_t trivia_high_score = 0;
  int trivia_rank = 1;
  std::int64_t keyhunter_high_score = 0;
  std::int64_t phishing_high_score = 0;
  DataDefendersContext datadefenders;

  bool operator==(const StatsRow&) const = default;
};

struct LeaderboardRow {
  std::string nickname;
  std::int64_t score = 0;
  std::optional<int> rank;  // trivia only
};

struct LoginRecord {
  std::int64_t user_id = 0;
  std::string password_digest;
};

struct RecoveryRecord {
  std::int64_t user_id = 0;
  std::int64_t expires_at_ms = 0;
  bool used = false;
};

nlohmann::json ToJson(const UserRow& user);
nlohmann::json ToJson(const StatsRow& stats);
nlohmann::json ToJson(const LeaderboardRow& row);

// SQLite-backed store holding the admin, login, recover, stats and user
// tables. All methods are thread-safe; multi-row changes run in transactions.
class Store {
 public:
  // ":memory:" gives a private in-memory database.
  explicit Store(const std::string& path);
  ~Store();
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  // Creates user, login, recover and stats rows (plus admin for admins).
  // Throws kUsernameTaken.
  UserRow CreateUser(const std::string& username, const std::string& nickname,
                     const std::string& email, const std::string& password_digest, Role role,
                     const DataDefendersContext& initial_context);
  std::optional<LoginRecord> FindLogin(const std::string& username);
  std::optional<UserRow> GetUser(std::int64_t user_id);
  std::vector<UserRow> ListUsers();
  void UpdatePassword(std::int64_t user_id, const std::string& password_digest);

  std::optional<std::int64_t> MatchRecovery(const std::string& username,
                                            const std::string& recovery_email);
  void SetRecoveryCode(std::int64_t user_id, const std::string& code_digest,
                       std::int64_t expires_at_ms);
  std::optional<RecoveryRecord> FindRecoveryCode(const std::string& code_digest);
  // Marks the code used; false if it was already used (lost race).
  bool ConsumeRecoveryCode(const std::string& code_digest);

  StatsRow GetStats(std::int64_t user_id);
  // Compare-and-swap: stores `score` only if it beats the stored value.
  bool RaiseHighScore(std::int64_t user_id, Game game, std::int64_t score,
                      std::int64_t achieved_seq);
  void SetTriviaRank(std::int64_t user_id, int rank);
  void SaveDataDefenders(std::int64_t user_id, const DataDefendersContext& context,
                         std::int64_t achieved_seq);
  std::vector<LeaderboardRow> Leaderboard(Game game, int limit);
  std::int64_t MaxAchievedSeq();

 private:
  void Exec(const char* sql);

  std::mutex mutex_;
  sqlite3* db_ = nullptr;
};

}  // namespace arcade::platform
