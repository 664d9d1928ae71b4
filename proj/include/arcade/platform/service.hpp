#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arcade/platform/game_runner.hpp"
#include "arcade/platform/password.hpp"
#include "arcade/platform/store.hpp"
#include "json.hpp"

namespace arcade::platform {

// Milliseconds since the Unix epoch.
using Clock = std::function<std::int64_t()>;
std::int64_t SystemNowMs();

struct ServiceConfig {
  std::string data_dir;     // empty: in-memory database, nothing written to disk
  std::string content_dir;  // where accepted admin packs are installed
  std::int64_t token_ttl_s = 24 * 3600;
  std::int64_t session_ttl_s = 2 * 3600;
  std::int64_t recovery_ttl_s = 15 * 60;
  std::optional<std::uint64_t> deterministic_seed;
  WorkFactor work = WorkFactor::Interactive();
  Clock clock = SystemNowMs;
};

struct OutboxMessage {
  std::string to;
  std::string username;
  std::string code;
  std::int64_t expires_at_ms = 0;
};

enum class SessionStatus { kLive, kCommitted, kAbandoned };
std::string_view ToString(SessionStatus status);

// Loads questions.json, emails.json and scenarios.json (and the optional
// datadefenders_tuning.json) from a directory. Packs must validate.
ContentSet LoadContentDir(const std::string& dir);

// Transport-independent game service. Every method is thread-safe; actions on
// one session are serialized, distinct sessions proceed in parallel.
class GameService {
 public:
  GameService(ServiceConfig config, ContentSet content);
  ~GameService();

  nlohmann::json Register(const std::string& username, const std::string& nickname,
                          const std::string& email, const std::string& password);
  UserRow CreateAdmin(const std::string& username, const std::string& nickname,
                      const std::string& email, const std::string& password);
  nlohmann::json Login(const std::string& username, const std::string& password);
  void Recover(const std::string& username, const std::string& recovery_email);
  void Redeem(const std::string& code, const std::string& new_password);

  nlohmann::json MyStats(const std::string& token);
  nlohmann::json Leaderboard(const std::string& game, int limit);

  nlohmann::json StartGame(const std::string& token, const std::string& game,
                           const nlohmann::json& request);
  nlohmann::json Action(const std::string& token, const std::string& session_id,
                        const nlohmann::json& action);
  nlohmann::json Finish(const std::string& token, const std::string& session_id);
  void Abandon(const std::string& token, const std::string& session_id);
  // Abandons every live session older than the session TTL; returns how many.
  int SweepExpired();

  nlohmann::json ImportPack(const std::string& token, const std::string& kind,
                            const std::string& body);
  nlohmann::json ListUsers(const std::string& token);

  std::vector<OutboxMessage> Outbox() const;
  std::optional<SessionStatus> StatusOf(const std::string& session_id) const;
  ContentSet Content() const;
  Store& store() { return *store_; }

 private:
  struct Session;
  struct TokenInfo {
    std::int64_t user_id = 0;
    std::int64_t expires_at_ms = 0;
  };

  UserRow CreateAccount(const std::string& username, const std::string& nickname,
                        const std::string& email, const std::string& password, Role role);
  UserRow Authenticate(const std::string& token);
  std::shared_ptr<Session> OwnedSession(const UserRow& user, const std::string& session_id);
  void RequireLive(Session& session);
  void MarkEnded(Session& session, SessionStatus status);
  std::uint64_t NextSeed();
  std::int64_t Now() const { return config_.clock(); }
  nlohmann::json ResolveStart(const UserRow& user, Game game, const nlohmann::json& request);
  nlohmann::json ApplyLogged(Session& session, nlohmann::json action);
  void WriteTranscript(const Session& session, std::int64_t score);

  ServiceConfig config_;
  std::unique_ptr<Store> store_;
  std::string timing_digest_;

  mutable std::mutex content_mutex_;
  ContentSet content_;

  mutable std::mutex tokens_mutex_;
  std::map<std::string, TokenInfo> tokens_;  // keyed by token digest

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::pair<std::int64_t, Game>, std::string> live_index_;
  std::uint64_t seed_counter_ = 0;
  std::int64_t achieved_seq_ = 0;

  mutable std::mutex outbox_mutex_;
  std::vector<OutboxMessage> outbox_;
};

}  // namespace arcade::platform
