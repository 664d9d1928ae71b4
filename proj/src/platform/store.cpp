#include "arcade/platform/store.hpp"

#include <sqlite3.h>

#include "arcade/error.hpp"

namespace arcade::platform {
namespace {

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS "user" (
  id INTEGER PRIMARY KEY AUTOINCREMENT,
  nickname TEXT NOT NULL,
  email TEXT NOT NULL,
  username TEXT NOT NULL UNIQUE,
  role TEXT NOT NULL CHECK (role IN ('player', 'admin'))
);
CREATE TABLE IF NOT EXISTS login (
  id INTEGER PRIMARY KEY REFERENCES "user"(id),
  username TEXT NOT NULL UNIQUE,
  password_digest TEXT NOT NULL,
  email TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS admin (
  id INTEGER PRIMARY KEY REFERENCES "user"(id),
  username TEXT NOT NULL UNIQUE,
  password_digest TEXT NOT NULL,
  email TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS recover (
  id INTEGER PRIMARY KEY REFERENCES "user"(id),
  username TEXT NOT NULL UNIQUE,
  password_digest TEXT NOT NULL,
  recovery_email TEXT NOT NULL,
  code_digest TEXT,
  code_expires_at INTEGER,
  code_used INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS stats (
  user_id INTEGER PRIMARY KEY REFERENCES "user"(id),
  trivia_high_score INTEGER NOT NULL DEFAULT 0,
  trivia_achieved INTEGER NOT NULL DEFAULT 0,
  trivia_rank INTEGER NOT NULL DEFAULT 1 CHECK (trivia_rank BETWEEN 1 AND 10),
  keyhunter_high_score INTEGER NOT NULL DEFAULT 0,
  keyhunter_achieved INTEGER NOT NULL DEFAULT 0,
  phishing_high_score INTEGER NOT NULL DEFAULT 0,
  phishing_achieved INTEGER NOT NULL DEFAULT 0,
  dd_day INTEGER NOT NULL DEFAULT 1,
  dd_reputation INTEGER NOT NULL DEFAULT 50,
  dd_money INTEGER NOT NULL DEFAULT 0,
  dd_upgrades TEXT NOT NULL DEFAULT '[0,0,0,0]',
  dd_achieved INTEGER NOT NULL DEFAULT 0
);
CREATE INDEX IF NOT EXISTS recover_code ON recover(code_digest);
)sql";

// Thin RAII wrapper over a prepared statement.
class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) Fail();
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& Bind(int index, std::int64_t value) {
    sqlite3_bind_int64(stmt_, index, value);
    return *this;
  }
  Statement& Bind(int index, const std::string& value) {
    sqlite3_bind_text(stmt_, index, value.c_str(), static_cast<int>(value.size()),
                      SQLITE_TRANSIENT);
    return *this;
  }

  // True while a row is available.
  bool Step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    if (sqlite3_extended_errcode(db_) == SQLITE_CONSTRAINT_UNIQUE) {
      throw Error(Errc::kUsernameTaken, "username already taken");
    }
    Fail();
  }

  std::int64_t Int(int column) const { return sqlite3_column_int64(stmt_, column); }
  std::string Text(int column) const {
    const auto* text = sqlite3_column_text(stmt_, column);
    return text ? reinterpret_cast<const char*>(text) : "";
  }
  bool IsNull(int column) const { return sqlite3_column_type(stmt_, column) == SQLITE_NULL; }

 private:
  [[noreturn]] void Fail() { throw Error(Errc::kStorage, sqlite3_errmsg(db_)); }

  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

class Transaction {
 public:
  explicit Transaction(sqlite3* db) : db_(db) { Run("BEGIN IMMEDIATE"); }
  ~Transaction() {
    if (!done_) sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
  }
  void Commit() {
    Run("COMMIT");
    done_ = true;
  }

 private:
  void Run(const char* sql) {
    if (sqlite3_exec(db_, sql, nullptr, nullptr, nullptr) != SQLITE_OK) {
      throw Error(Errc::kStorage, sqlite3_errmsg(db_));
    }
  }
  sqlite3* db_;
  bool done_ = false;
};

struct GameColumns {
  const char* score;
  const char* achieved;
};

GameColumns ColumnsFor(Game game) {
  switch (game) {
    case Game::kTrivia: return {"trivia_high_score", "trivia_achieved"};
    case Game::kKeyHunter: return {"keyhunter_high_score", "keyhunter_achieved"};
    case Game::kPhishing: return {"phishing_high_score", "phishing_achieved"};
    case Game::kDataDefenders: return {"dd_day - 1", "dd_achieved"};
  }
  return {"0", "0"};
}

UserRow ReadUser(const Statement& s) {
  return UserRow{s.Int(0), s.Text(1), s.Text(2), s.Text(3),
                 s.Text(4) == "admin" ? Role::kAdmin : Role::kPlayer};
}

std::string UpgradesText(const std::array<int, 4>& upgrades) {
  return nlohmann::json(upgrades).dump();
}

}  // namespace

std::string_view ToString(Game game) {
  switch (game) {
    case Game::kTrivia: return "trivia";
    case Game::kKeyHunter: return "keyhunter";
    case Game::kPhishing: return "phishing";
    case Game::kDataDefenders: return "datadefenders";
  }
  return "?";
}

std::optional<Game> ParseGame(std::string_view text) {
  for (Game game : kAllGames) {
    if (ToString(game) == text) return game;
  }
  return std::nullopt;
}

std::string_view ToString(Role role) { return role == Role::kAdmin ? "admin" : "player"; }

nlohmann::json ToJson(const UserRow& user) {
  return {{"id", user.id},
          {"username", user.username},
          {"nickname", user.nickname},
          {"email", user.email},
          {"role", ToString(user.role)}};
}

nlohmann::json ToJson(const StatsRow& stats) {
  return {{"user_id", stats.user_id},
          {"trivia_high_score", stats.trivia_high_score},
          {"trivia_rank", stats.trivia_rank},
          {"keyhunter_high_score", stats.keyhunter_high_score},
          {"phishing_high_score", stats.phishing_high_score},
          {"datadefenders",
           {{"day", stats.datadefenders.day},
            {"reputation", stats.datadefenders.reputation},
            {"money", stats.datadefenders.money},
            {"upgrades", stats.datadefenders.upgrades}}}};
}

nlohmann::json ToJson(const LeaderboardRow& row) {
  nlohmann::json out{{"nickname", row.nickname}, {"score", row.score}};
  if (row.rank) out["rank"] = *row.rank;
  return out;
}

Store::Store(const std::string& path) {
  const int flags = SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX;
  if (sqlite3_open_v2(path.c_str(), &db_, flags, nullptr) != SQLITE_OK) {
    const std::string message = db_ ? sqlite3_errmsg(db_) : "cannot open database";
    sqlite3_close(db_);
    throw Error(Errc::kStorage, message);
  }
  sqlite3_busy_timeout(db_, 5000);
  Exec("PRAGMA foreign_keys = ON");
  Exec("PRAGMA journal_mode = WAL");
  Exec(kSchema);
}

Store::~Store() { sqlite3_close(db_); }

void Store::Exec(const char* sql) {
  char* message = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &message) != SQLITE_OK) {
    std::string text = message ? message : "sqlite error";
    sqlite3_free(message);
    throw Error(Errc::kStorage, text);
  }
}

UserRow Store::CreateUser(const std::string& username, const std::string& nickname,
                          const std::string& email, const std::string& password_digest,
                          Role role, const DataDefendersContext& initial_context) {
  std::lock_guard lock(mutex_);
  Transaction tx(db_);
  Statement(db_, R"(INSERT INTO "user"(nickname, email, username, role) VALUES (?, ?, ?, ?))")
      .Bind(1, nickname)
      .Bind(2, email)
      .Bind(3, username)
      .Bind(4, std::string(ToString(role)))
      .Step();
  const std::int64_t id = sqlite3_last_insert_rowid(db_);
  Statement(db_, "INSERT INTO login(id, username, password_digest, email) VALUES (?, ?, ?, ?)")
      .Bind(1, id)
      .Bind(2, username)
      .Bind(3, password_digest)
      .Bind(4, email)
      .Step();
  Statement(db_,
            "INSERT INTO recover(id, username, password_digest, recovery_email) "
            "VALUES (?, ?, ?, ?)")
      .Bind(1, id)
      .Bind(2, username)
      .Bind(3, password_digest)
      .Bind(4, email)
      .Step();
  if (role == Role::kAdmin) {
    Statement(db_, "INSERT INTO admin(id, username, password_digest, email) VALUES (?, ?, ?, ?)")
        .Bind(1, id)
        .Bind(2, username)
        .Bind(3, password_digest)
        .Bind(4, email)
        .Step();
  }
  Statement(db_,
            "INSERT INTO stats(user_id, dd_day, dd_reputation, dd_money, dd_upgrades) "
            "VALUES (?, ?, ?, ?, ?)")
      .Bind(1, id)
      .Bind(2, initial_context.day)
      .Bind(3, initial_context.reputation)
      .Bind(4, initial_context.money)
      .Bind(5, UpgradesText(initial_context.upgrades))
      .Step();
  tx.Commit();
  return UserRow{id, nickname, email, username, role};
}

std::optional<LoginRecord> Store::FindLogin(const std::string& username) {
  std::lock_guard lock(mutex_);
  Statement s(db_, "SELECT id, password_digest FROM login WHERE username = ?");
  s.Bind(1, username);
  if (!s.Step()) return std::nullopt;
  return LoginRecord{s.Int(0), s.Text(1)};
}

std::optional<UserRow> Store::GetUser(std::int64_t user_id) {
  std::lock_guard lock(mutex_);
  Statement s(db_, R"(SELECT id, nickname, email, username, role FROM "user" WHERE id = ?)");
  s.Bind(1, user_id);
  if (!s.Step()) return std::nullopt;
  return ReadUser(s);
}

std::vector<UserRow> Store::ListUsers() {
  std::lock_guard lock(mutex_);
  Statement s(db_, R"(SELECT id, nickname, email, username, role FROM "user" ORDER BY id)");
  std::vector<UserRow> out;
  while (s.Step()) out.push_back(ReadUser(s));
  return out;
}

void Store::UpdatePassword(std::int64_t user_id, const std::string& password_digest) {
  std::lock_guard lock(mutex_);
  Transaction tx(db_);
  for (const char* sql : {"UPDATE login SET password_digest = ? WHERE id = ?",
                          "UPDATE recover SET password_digest = ? WHERE id = ?",
                          "UPDATE admin SET password_digest = ? WHERE id = ?"}) {
    Statement(db_, sql).Bind(1, password_digest).Bind(2, user_id).Step();
  }
  tx.Commit();
}

std::optional<std::int64_t> Store::MatchRecovery(const std::string& username,
                                                 const std::string& recovery_email) {
  std::lock_guard lock(mutex_);
  Statement s(db_, "SELECT id FROM recover WHERE username = ? AND recovery_email = ?");
  s.Bind(1, username).Bind(2, recovery_email);
  if (!s.Step()) return std::nullopt;
  return s.Int(0);
}

void Store::SetRecoveryCode(std::int64_t user_id, const std::string& code_digest,
                            std::int64_t expires_at_ms) {
  std::lock_guard lock(mutex_);
  Statement(db_,
            "UPDATE recover SET code_digest = ?, code_expires_at = ?, code_used = 0 WHERE id = ?")
      .Bind(1, code_digest)
      .Bind(2, expires_at_ms)
      .Bind(3, user_id)
      .Step();
}

std::optional<RecoveryRecord> Store::FindRecoveryCode(const std::string& code_digest) {
  std::lock_guard lock(mutex_);
  Statement s(db_, "SELECT id, code_expires_at, code_used FROM recover WHERE code_digest = ?");
  s.Bind(1, code_digest);
  if (!s.Step()) return std::nullopt;
  return RecoveryRecord{s.Int(0), s.Int(1), s.Int(2) != 0};
}

bool Store::ConsumeRecoveryCode(const std::string& code_digest) {
  std::lock_guard lock(mutex_);
  Statement(db_, "UPDATE recover SET code_used = 1 WHERE code_digest = ? AND code_used = 0")
      .Bind(1, code_digest)
      .Step();
  return sqlite3_changes(db_) == 1;
}

StatsRow Store::GetStats(std::int64_t user_id) {
  std::lock_guard lock(mutex_);
  Statement s(db_,
              "SELECT user_id, trivia_high_score, trivia_rank, keyhunter_high_score, "
              "phishing_high_score, dd_day, dd_reputation, dd_money, dd_upgrades "
              "FROM stats WHERE user_id = ?");
  s.Bind(1, user_id);
  if (!s.Step()) throw Error(Errc::kStorage, "no stats row for user " + std::to_string(user_id));
  StatsRow row;
  row.user_id = s.Int(0);
  row.trivia_high_score = s.Int(1);
  row.trivia_rank = static_cast<int>(s.Int(2));
  row.keyhunter_high_score = s.Int(3);
  row.phishing_high_score = s.Int(4);
  row.datadefenders.day = static_cast<int>(s.Int(5));
  row.datadefenders.reputation = static_cast<int>(s.Int(6));
  row.datadefenders.money = static_cast<int>(s.Int(7));
  row.datadefenders.upgrades = nlohmann::json::parse(s.Text(8)).get<std::array<int, 4>>();
  return row;
}

bool Store::RaiseHighScore(std::int64_t user_id, Game game, std::int64_t score,
                           std::int64_t achieved_seq) {
  if (game == Game::kDataDefenders) {
    throw Error(Errc::kStorage, "data defenders progress is saved with SaveDataDefenders");
  }
  const GameColumns cols = ColumnsFor(game);
  const std::string sql = std::string("UPDATE stats SET ") + cols.score + " = ?, " +
                          cols.achieved + " = ? WHERE user_id = ? AND " + cols.score + " < ?";
  std::lock_guard lock(mutex_);
  Statement(db_, sql.c_str())
      .Bind(1, score)
      .Bind(2, achieved_seq)
      .Bind(3, user_id)
      .Bind(4, score)
      .Step();
  return sqlite3_changes(db_) == 1;
}

void Store::SetTriviaRank(std::int64_t user_id, int rank) {
  std::lock_guard lock(mutex_);
  // Ranks never go down.
  Statement(db_, "UPDATE stats SET trivia_rank = ? WHERE user_id = ? AND trivia_rank < ?")
      .Bind(1, rank)
      .Bind(2, user_id)
      .Bind(3, rank)
      .Step();
}

void Store::SaveDataDefenders(std::int64_t user_id, const DataDefendersContext& context,
                              std::int64_t achieved_seq) {
  std::lock_guard lock(mutex_);
  Statement(db_,
            "UPDATE stats SET dd_achieved = CASE WHEN ? > dd_day THEN ? ELSE dd_achieved END, "
            "dd_day = ?, dd_reputation = ?, dd_money = ?, dd_upgrades = ? WHERE user_id = ?")
      .Bind(1, context.day)
      .Bind(2, achieved_seq)
      .Bind(3, context.day)
      .Bind(4, context.reputation)
      .Bind(5, context.money)
      .Bind(6, UpgradesText(context.upgrades))
      .Bind(7, user_id)
      .Step();
}

std::vector<LeaderboardRow> Store::Leaderboard(Game game, int limit) {
  const GameColumns cols = ColumnsFor(game);
  const std::string sql = std::string(R"(SELECT u.nickname, )") + cols.score +
                          ", s.trivia_rank FROM stats s JOIN \"user\" u ON u.id = s.user_id "
                          "WHERE " + cols.score + " > 0 ORDER BY " + cols.score + " DESC, " +
                          cols.achieved + " ASC, u.id ASC LIMIT ?";
  std::lock_guard lock(mutex_);
  Statement s(db_, sql.c_str());
  s.Bind(1, static_cast<std::int64_t>(limit));
  std::vector<LeaderboardRow> out;
  while (s.Step()) {
    LeaderboardRow row{s.Text(0), s.Int(1), std::nullopt};
    if (game == Game::kTrivia) row.rank = static_cast<int>(s.Int(2));
    out.push_back(std::move(row));
  }
  return out;
}

std::int64_t Store::MaxAchievedSeq() {
  std::lock_guard lock(mutex_);
  Statement s(db_,
              "SELECT MAX(MAX(trivia_achieved), MAX(keyhunter_achieved), "
              "MAX(phishing_achieved), MAX(dd_achieved)) FROM stats");
  if (!s.Step() || s.IsNull(0)) return 0;
  return s.Int(0);
}

}  // namespace arcade::platform
