#include "arcade/platform/service.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::platform {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

bool ValidUsername(const std::string& username) {
  if (username.empty() || username.size() > 32) return false;
  for (char c : username) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

void CheckPasswordPolicy(const std::string& password) {
  if (password.size() < kMinPasswordLength || password.size() > kMaxPasswordLength) {
    throw Error(Errc::kWeakPassword, "passwords must be 8-128 characters");
  }
}

std::shared_ptr<const content::ContentPack> LoadValidated(const fs::path& path,
                                                          content::PackKind kind) {
  auto pack = content::LoadPackFile(path.string(), kind);
  const auto report = content::ValidatePack(pack);
  if (!report.accepted()) {
    std::string message = path.string() + " failed validation:";
    for (const auto& v : report.violations) message += "\n  " + v;
    throw Error(Errc::kInvalidConfig, message);
  }
  return std::make_shared<const content::ContentPack>(std::move(pack));
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

struct GameService::Session {
  std::string id;
  std::int64_t user_id = 0;
  Game game = Game::kTrivia;
  std::uint64_t seed = 0;
  json start;
  std::int64_t created_at_ms = 0;
  std::int64_t prompt_at_ms = 0;
  SessionStatus status = SessionStatus::kLive;
  std::unique_ptr<GameRunner> runner;
  json actions = json::array();
  std::mutex mutex;
};

std::int64_t SystemNowMs() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string_view ToString(SessionStatus status) {
  switch (status) {
    case SessionStatus::kLive: return "live";
    case SessionStatus::kCommitted: return "committed";
    case SessionStatus::kAbandoned: return "abandoned";
  }
  return "?";
}

ContentSet LoadContentDir(const std::string& dir) {
  const fs::path root(dir);
  ContentSet content;
  content.questions = LoadValidated(root / "questions.json", content::PackKind::kQuestions);
  content.emails = LoadValidated(root / "emails.json", content::PackKind::kEmails);
  content.scenarios = LoadValidated(root / "scenarios.json", content::PackKind::kScenarios);
  const fs::path tuning = root / "datadefenders_tuning.json";
  if (fs::exists(tuning)) {
    try {
      content.tuning = datadefenders::TuningFromJson(json::parse(ReadFile(tuning)));
    } catch (const json::parse_error& e) {
      throw Error(Errc::kMalformedSyntax, tuning.string() + ": " + e.what());
    }
  }
  return content;
}

GameService::GameService(ServiceConfig config, ContentSet content)
    : config_(std::move(config)), content_(std::move(content)) {
  std::string db_path = ":memory:";
  if (!config_.data_dir.empty()) {
    fs::create_directories(fs::path(config_.data_dir) / "transcripts");
    db_path = (fs::path(config_.data_dir) / "arcade.db").string();
  }
  store_ = std::make_unique<Store>(db_path);
  achieved_seq_ = store_->MaxAchievedSeq();
  // Verified against when the username is unknown, so both failure paths cost
  // one Argon2 verification.
  timing_digest_ = HashPassword("timing-equaliser-password", config_.work);
}

GameService::~GameService() = default;

UserRow GameService::CreateAccount(const std::string& username, const std::string& nickname,
                                   const std::string& email, const std::string& password,
                                   Role role) {
  if (!ValidUsername(username)) {
    throw Error(Errc::kBadRequest, "usernames are 1-32 letters, digits, '.', '_' or '-'");
  }
  if (nickname.empty() || nickname.size() > 64) {
    throw Error(Errc::kBadRequest, "nickname must be 1-64 characters");
  }
  if (email.find('@') == std::string::npos) throw Error(Errc::kBadRequest, "invalid email");
  CheckPasswordPolicy(password);
  const std::string digest = HashPassword(password, config_.work);
  const auto& t = content_.tuning;
  DataDefendersContext initial{1, t.initial_reputation, t.initial_money, {}};
  return store_->CreateUser(username, nickname, email, digest, role, initial);
}

json GameService::Register(const std::string& username, const std::string& nickname,
                           const std::string& email, const std::string& password) {
  const UserRow user = CreateAccount(username, nickname, email, password, Role::kPlayer);
  return {{"id", user.id},
          {"username", user.username},
          {"nickname", user.nickname},
          {"role", ToString(user.role)}};
}

UserRow GameService::CreateAdmin(const std::string& username, const std::string& nickname,
                                 const std::string& email, const std::string& password) {
  return CreateAccount(username, nickname, email, password, Role::kAdmin);
}

json GameService::Login(const std::string& username, const std::string& password) {
  const auto record = store_->FindLogin(username);
  const bool verified =
      VerifyPassword(password, record ? record->password_digest : timing_digest_);
  if (!record || !verified) {
    throw Error(Errc::kInvalidCredentials, "invalid username or password");
  }
  const std::string token = RandomHex(32);
  const std::int64_t expires = Now() + config_.token_ttl_s * 1000;
  {
    std::lock_guard lock(tokens_mutex_);
    tokens_[FastDigest(token)] = TokenInfo{record->user_id, expires};
  }
  const auto user = store_->GetUser(record->user_id);
  return {{"token", token}, {"expires_at", expires}, {"role", ToString(user->role)}};
}

UserRow GameService::Authenticate(const std::string& token) {
  if (token.empty()) throw Error(Errc::kUnauthenticated, "missing bearer token");
  std::int64_t user_id = 0;
  {
    std::lock_guard lock(tokens_mutex_);
    auto it = tokens_.find(FastDigest(token));
    if (it == tokens_.end()) throw Error(Errc::kUnauthenticated, "unknown or expired token");
    if (it->second.expires_at_ms <= Now()) {
      tokens_.erase(it);
      throw Error(Errc::kUnauthenticated, "unknown or expired token");
    }
    user_id = it->second.user_id;
  }
  auto user = store_->GetUser(user_id);
  if (!user) throw Error(Errc::kUnauthenticated, "account no longer exists");
  return *user;
}

void GameService::Recover(const std::string& username, const std::string& recovery_email) {
  const auto user_id = store_->MatchRecovery(username, recovery_email);
  if (!user_id) throw Error(Errc::kNoMatch, "no account matches that username and email");
  const std::string code = RandomHex(8);
  const std::int64_t expires = Now() + config_.recovery_ttl_s * 1000;
  store_->SetRecoveryCode(*user_id, FastDigest(code), expires);

  OutboxMessage message{recovery_email, username, code, expires};
  std::lock_guard lock(outbox_mutex_);
  outbox_.push_back(message);
  if (!config_.data_dir.empty()) {
    std::ofstream out(fs::path(config_.data_dir) / "outbox.txt", std::ios::app);
    out << "to=" << message.to << " user=" << message.username << " code=" << message.code
        << " expires_at=" << message.expires_at_ms << "\n";
  }
}

void GameService::Redeem(const std::string& code, const std::string& new_password) {
  const std::string digest = FastDigest(code);
  const auto record = store_->FindRecoveryCode(digest);
  if (!record) throw Error(Errc::kNoMatch, "unknown recovery code");
  if (record->used) throw Error(Errc::kCodeUsed, "recovery code already used");
  if (record->expires_at_ms <= Now()) throw Error(Errc::kCodeExpired, "recovery code expired");
  CheckPasswordPolicy(new_password);
  const std::string password_digest = HashPassword(new_password, config_.work);
  if (!store_->ConsumeRecoveryCode(digest)) {
    throw Error(Errc::kCodeUsed, "recovery code already used");
  }
  store_->UpdatePassword(record->user_id, password_digest);
  std::lock_guard lock(tokens_mutex_);
  std::erase_if(tokens_, [&](const auto& entry) { return entry.second.user_id == record->user_id; });
}

json GameService::MyStats(const std::string& token) {
  const UserRow user = Authenticate(token);
  return ToJson(store_->GetStats(user.id));
}

json GameService::Leaderboard(const std::string& game, int limit) {
  auto parsed = ParseGame(game);
  if (!parsed) throw Error(Errc::kUnknownGame, "unknown game \"" + game + "\"");
  limit = std::clamp(limit, 1, 100);
  json rows = json::array();
  for (const auto& row : store_->Leaderboard(*parsed, limit)) rows.push_back(ToJson(row));
  return rows;
}

std::uint64_t GameService::NextSeed() {
  if (config_.deterministic_seed) return MixSeed(*config_.deterministic_seed, seed_counter_++);
  return RandomU64();
}

json GameService::ResolveStart(const UserRow& user, Game game, const json& request) {
  const json req = request.is_object() ? request : json::object();
  auto text = [&](const char* key, const char* fallback) {
    if (!req.contains(key)) return std::string(fallback);
    if (!req[key].is_string()) throw Error(Errc::kBadRequest, std::string(key) + " must be a string");
    return req[key].get<std::string>();
  };
  auto integer = [&](const char* key) {
    if (!req.contains(key) || !req[key].is_number_integer()) {
      throw Error(Errc::kBadRequest, std::string(key) + " must be an integer");
    }
    return req[key].get<std::int64_t>();
  };
  switch (game) {
    case Game::kTrivia: {
      const std::string mode = text("mode", "ranked");
      if (mode == "ranked") {
        return {{"mode", mode}, {"rank", store_->GetStats(user.id).trivia_rank}};
      }
      if (mode == "practice-topic") {
        return {{"mode", mode}, {"topic", text("topic", "")}, {"count", integer("count")}};
      }
      if (mode == "practice-rank") {
        return {{"mode", mode}, {"rank", integer("rank")}, {"count", integer("count")}};
      }
      throw Error(Errc::kBadRequest, "mode must be ranked, practice-topic or practice-rank");
    }
    case Game::kKeyHunter:
    case Game::kPhishing:
      return {{"difficulty", text("difficulty", "easy")}};
    case Game::kDataDefenders: {
      const auto& ctx = store_->GetStats(user.id).datadefenders;
      return {{"context",
               {{"day", ctx.day},
                {"reputation", ctx.reputation},
                {"money", ctx.money},
                {"upgrades", ctx.upgrades}}}};
    }
  }
  return {};
}

json GameService::StartGame(const std::string& token, const std::string& game_name,
                            const json& request) {
  const UserRow user = Authenticate(token);
  auto game = ParseGame(game_name);
  if (!game) throw Error(Errc::kUnknownGame, "unknown game \"" + game_name + "\"");
  const json start = ResolveStart(user, *game, request);
  const ContentSet content = Content();

  std::lock_guard lock(sessions_mutex_);
  const auto key = std::make_pair(user.id, *game);
  if (auto it = live_index_.find(key); it != live_index_.end()) {
    auto existing = sessions_.at(it->second);
    if (Now() - existing->created_at_ms <= config_.session_ttl_s * 1000) {
      throw Error(Errc::kSessionAlreadyLive,
                  "finish or abandon session " + existing->id + " first");
    }
    existing->status = SessionStatus::kAbandoned;
    live_index_.erase(it);
  }

  auto session = std::make_shared<Session>();
  session->id = RandomHex(12);
  session->user_id = user.id;
  session->game = *game;
  session->seed = NextSeed();
  session->start = start;
  session->created_at_ms = Now();
  session->prompt_at_ms = session->created_at_ms;
  session->runner = std::make_unique<GameRunner>(*game, start, session->seed, content);

  sessions_[session->id] = session;
  live_index_[key] = session->id;
  return {{"session_id", session->id}, {"game", ToString(*game)}, {"view", session->runner->View()}};
}

std::shared_ptr<GameService::Session> GameService::OwnedSession(const UserRow& user,
                                                                const std::string& session_id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(Errc::kUnknownSession, "no such session");
  if (it->second->user_id != user.id) {
    throw Error(Errc::kNotOwner, "session belongs to another player");
  }
  return it->second;
}

void GameService::MarkEnded(Session& session, SessionStatus status) {
  std::lock_guard lock(sessions_mutex_);
  session.status = status;
  auto it = live_index_.find({session.user_id, session.game});
  if (it != live_index_.end() && it->second == session.id) live_index_.erase(it);
}

void GameService::RequireLive(Session& session) {
  if (session.status != SessionStatus::kLive) {
    throw Error(Errc::kSessionNotLive, "session is " + std::string(ToString(session.status)));
  }
  if (Now() - session.created_at_ms > config_.session_ttl_s * 1000) {
    MarkEnded(session, SessionStatus::kAbandoned);
    throw Error(Errc::kSessionNotLive, "session expired and was abandoned");
  }
}

json GameService::ApplyLogged(Session& session, json action) {
  const std::int64_t now = Now();
  action = session.runner->Stamp(std::move(action), now - session.created_at_ms,
                                 now - session.prompt_at_ms);
  json result = session.runner->Apply(action);
  session.actions.push_back(action);
  if (GameRunner::ResetsPrompt(action)) session.prompt_at_ms = now;
  return result;
}

json GameService::Action(const std::string& token, const std::string& session_id,
                         const json& action) {
  const UserRow user = Authenticate(token);
  auto session = OwnedSession(user, session_id);
  std::lock_guard lock(session->mutex);
  RequireLive(*session);
  json result = ApplyLogged(*session, action);
  return {{"result", result},
          {"view", session->runner->View()},
          {"terminal", session->runner->Terminal()}};
}

json GameService::Finish(const std::string& token, const std::string& session_id) {
  const UserRow user = Authenticate(token);
  auto session = OwnedSession(user, session_id);
  std::lock_guard lock(session->mutex);
  RequireLive(*session);
  GameRunner& runner = *session->runner;
  if (!runner.Terminal() && (session->game == Game::kPhishing || session->game == Game::kKeyHunter)) {
    // Lets a timed game that ran out of clock end without another input.
    ApplyLogged(*session, json{{"action", "clock"}});
  }
  if (!runner.Terminal()) throw Error(Errc::kSessionNotTerminal, "game is still in progress");

  const std::int64_t score = runner.Score();
  std::int64_t seq = 0;
  {
    std::lock_guard seq_lock(sessions_mutex_);
    seq = ++achieved_seq_;
  }
  switch (session->game) {
    case Game::kTrivia:
      store_->RaiseHighScore(user.id, Game::kTrivia, score, seq);
      if (auto rank = runner.NewTriviaRank()) store_->SetTriviaRank(user.id, *rank);
      break;
    case Game::kKeyHunter:
    case Game::kPhishing:
      store_->RaiseHighScore(user.id, session->game, score, seq);
      break;
    case Game::kDataDefenders:
      store_->SaveDataDefenders(user.id, *runner.Progress(), seq);
      break;
  }
  MarkEnded(*session, SessionStatus::kCommitted);
  WriteTranscript(*session, score);
  return {{"score", score}, {"outcome", runner.Outcome()}, {"stats", ToJson(store_->GetStats(user.id))}};
}

void GameService::Abandon(const std::string& token, const std::string& session_id) {
  const UserRow user = Authenticate(token);
  auto session = OwnedSession(user, session_id);
  std::lock_guard lock(session->mutex);
  RequireLive(*session);
  MarkEnded(*session, SessionStatus::kAbandoned);
}

int GameService::SweepExpired() {
  std::lock_guard lock(sessions_mutex_);
  int swept = 0;
  for (auto it = live_index_.begin(); it != live_index_.end();) {
    auto& session = *sessions_.at(it->second);
    if (Now() - session.created_at_ms > config_.session_ttl_s * 1000) {
      session.status = SessionStatus::kAbandoned;
      it = live_index_.erase(it);
      ++swept;
    } else {
      ++it;
    }
  }
  // Finished sessions are only kept for status queries; drop their engines.
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (it->second->status != SessionStatus::kLive) {
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
  return swept;
}

void GameService::WriteTranscript(const Session& session, std::int64_t score) {
  if (config_.data_dir.empty()) return;
  json transcript{{"session_id", session.id},
                  {"user_id", session.user_id},
                  {"game", ToString(session.game)},
                  {"seed", session.seed},
                  {"start", session.start},
                  {"actions", session.actions},
                  {"score", score},
                  {"final_state", session.runner->Snapshot()}};
  std::ofstream out(fs::path(config_.data_dir) / "transcripts" / (session.id + ".json"));
  out << transcript.dump(2) << "\n";
}

json GameService::ImportPack(const std::string& token, const std::string& kind_name,
                             const std::string& body) {
  const UserRow user = Authenticate(token);
  if (user.role != Role::kAdmin) throw Error(Errc::kForbidden, "admin role required");
  auto kind = content::ParsePackKind(kind_name);
  if (!kind) throw Error(Errc::kBadRequest, "pack kind must be questions, emails or scenarios");

  content::ValidationReport report;
  std::optional<content::ContentPack> pack;
  try {
    pack = content::ParsePack(body, *kind);
    report = content::ValidatePack(*pack);
  } catch (const Error& e) {
    report.violations.push_back(std::string(ErrcName(e.code())) + ": " + e.what());
  }
  if (report.accepted()) {
    auto shared = std::make_shared<const content::ContentPack>(std::move(*pack));
    if (!config_.content_dir.empty()) {
      std::ofstream out(fs::path(config_.content_dir) / (kind_name + ".json"));
      out << content::SerializePack(*shared);
    }
    std::lock_guard lock(content_mutex_);
    switch (*kind) {
      case content::PackKind::kQuestions: content_.questions = shared; break;
      case content::PackKind::kEmails: content_.emails = shared; break;
      case content::PackKind::kScenarios: content_.scenarios = shared; break;
    }
  }
  return {{"accepted", report.accepted()}, {"violations", report.violations}};
}

json GameService::ListUsers(const std::string& token) {
  const UserRow user = Authenticate(token);
  if (user.role != Role::kAdmin) throw Error(Errc::kForbidden, "admin role required");
  json out = json::array();
  for (const auto& row : store_->ListUsers()) out.push_back(ToJson(row));
  return out;
}

std::vector<OutboxMessage> GameService::Outbox() const {
  std::lock_guard lock(outbox_mutex_);
  return outbox_;
}

std::optional<SessionStatus> GameService::StatusOf(const std::string& session_id) const {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) return std::nullopt;
  return it->second->status;
}

ContentSet GameService::Content() const {
  std::lock_guard lock(content_mutex_);
  return content_;
}

}  // namespace arcade::platform
