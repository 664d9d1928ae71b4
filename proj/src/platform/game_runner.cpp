#include "arcade/platform/game_runner.hpp"

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::platform {
namespace {

using nlohmann::json;

[[noreturn]] void BadRequest(const std::string& what) { throw Error(Errc::kBadRequest, what); }

const json& Field(const json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key)) {
    BadRequest(std::string("missing \"") + key + "\"");
  }
  return payload.at(key);
}

std::int64_t IntField(const json& payload, const char* key) {
  const json& value = Field(payload, key);
  if (!value.is_number_integer()) BadRequest(std::string("\"") + key + "\" must be an integer");
  return value.get<std::int64_t>();
}

std::string StringField(const json& payload, const char* key) {
  const json& value = Field(payload, key);
  if (!value.is_string()) BadRequest(std::string("\"") + key + "\" must be a string");
  return value.get<std::string>();
}

std::vector<int> IntListField(const json& payload, const char* key) {
  const json& value = Field(payload, key);
  if (!value.is_array()) BadRequest(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& element : value) {
    if (!element.is_number_integer()) {
      BadRequest(std::string("\"") + key + "\" must hold integers");
    }
    out.push_back(element.get<int>());
  }
  return out;
}

content::Difficulty DifficultyField(const json& payload) {
  auto parsed = content::ParseDifficulty(StringField(payload, "difficulty"));
  if (!parsed) BadRequest("difficulty must be easy, medium or hard");
  return *parsed;
}

[[noreturn]] void UnknownAction(const std::string& name) {
  throw Error(Errc::kUnknownAction, "unknown action \"" + name + "\"");
}

trivia::TriviaConfig TriviaConfigFrom(const json& start, std::uint64_t seed) {
  auto mode = trivia::ParseMode(StringField(start, "mode"));
  if (!mode) BadRequest("mode must be ranked, practice-topic or practice-rank");
  switch (*mode) {
    case trivia::Mode::kRanked:
      return trivia::TriviaConfig::Ranked(static_cast<int>(IntField(start, "rank")), seed);
    case trivia::Mode::kPracticeTopic:
      return trivia::TriviaConfig::PracticeTopic(StringField(start, "topic"),
                                                 static_cast<int>(IntField(start, "count")), seed);
    case trivia::Mode::kPracticeRank:
      return trivia::TriviaConfig::PracticeRank(static_cast<int>(IntField(start, "rank")),
                                                static_cast<int>(IntField(start, "count")), seed);
  }
  BadRequest("bad mode");
}

datadefenders::HostingState HostingFrom(const json& start, const datadefenders::Tuning& tuning) {
  const json& ctx = Field(start, "context");
  std::array<int, 4> upgrades{};
  const auto levels = IntListField(ctx, "upgrades");
  if (levels.size() != upgrades.size()) BadRequest("upgrades must list 4 levels");
  std::copy(levels.begin(), levels.end(), upgrades.begin());
  return datadefenders::RestoreHosting(static_cast<int>(IntField(ctx, "day")),
                                       static_cast<int>(IntField(ctx, "reputation")),
                                       static_cast<int>(IntField(ctx, "money")), upgrades, tuning);
}

const content::ContentPack& Require(const std::shared_ptr<const content::ContentPack>& pack,
                                    std::string_view what) {
  if (!pack) throw Error(Errc::kInvalidConfig, "no " + std::string(what) + " pack loaded");
  return *pack;
}

}  // namespace

GameRunner::GameRunner(Game game, const json& start, std::uint64_t seed,
                       const ContentSet& content)
    : game_(game), seed_(seed), content_(content) {
  switch (game) {
    case Game::kTrivia:
      state_ = trivia::StartSession(Require(content.questions, "questions"),
                                    TriviaConfigFrom(start, seed));
      break;
    case Game::kKeyHunter:
      state_ = keyhunter::NewSession(DifficultyField(start), seed);
      break;
    case Game::kPhishing:
      state_ = phishing::NewSession(Require(content.emails, "emails"), DifficultyField(start),
                                    seed);
      break;
    case Game::kDataDefenders:
      Require(content.scenarios, "scenarios");
      state_ = HostingFrom(start, content.tuning);
      break;
  }
}

json GameRunner::Stamp(json action, std::int64_t since_start_ms,
                       std::int64_t since_prompt_ms) const {
  if (!action.is_object()) BadRequest("action body must be an object");
  if (!action.contains("payload") || action["payload"].is_null()) {
    action["payload"] = json::object();
  }
  json& payload = action["payload"];
  if (!payload.is_object()) BadRequest("payload must be an object");
  const std::string name = action.value("action", "");
  switch (game_) {
    case Game::kTrivia:
      if (name == "answer") payload["elapsed_ms"] = since_prompt_ms;
      break;
    case Game::kKeyHunter:
      if (name == "press" || name == "clock") payload["at_s"] = since_start_ms / 1000;
      break;
    case Game::kPhishing:
      if (name == "classify" || name == "clock") payload["at_ms"] = since_start_ms;
      break;
    case Game::kDataDefenders:
      if (name == "report") {
        payload["at_tick"] = std::get<datadefenders::HostingState>(state_).tick;
      }
      break;
  }
  return action;
}

bool GameRunner::ResetsPrompt(const json& action) {
  return action.is_object() && action.value("action", "") == "answer";
}

json GameRunner::Apply(const json& action) {
  if (!action.is_object() || !action.contains("action") || !action["action"].is_string()) {
    BadRequest("action must name an \"action\"");
  }
  const std::string name = action["action"].get<std::string>();
  const json payload = action.value("payload", json::object());
  switch (game_) {
    case Game::kTrivia: return ApplyTrivia(name, payload);
    case Game::kKeyHunter: return ApplyKeyHunter(name, payload);
    case Game::kPhishing: return ApplyPhishing(name, payload);
    case Game::kDataDefenders: return ApplyDataDefenders(name, payload);
  }
  UnknownAction(name);
}

json GameRunner::ApplyTrivia(const std::string& name, const json& payload) {
  auto& session = std::get<trivia::TriviaSession>(state_);
  if (name == "view") return json::object();
  if (name == "answer") {
    auto result = trivia::SubmitAnswer(session, IntListField(payload, "selected"),
                                       IntField(payload, "elapsed_ms"));
    return trivia::ToJson(result);
  }
  UnknownAction(name);
}

json GameRunner::ApplyKeyHunter(const std::string& name, const json& payload) {
  auto& session = std::get<keyhunter::KeyHunterSession>(state_);
  if (name == "view") return json::object();
  if (name == "press") {
    const std::string column = StringField(payload, "column");
    if (column.size() != 1) BadRequest("column must be a single letter");
    keyhunter::GridCoordinate coord{column[0], static_cast<int>(IntField(payload, "row"))};
    return keyhunter::ToJson(keyhunter::PressButton(session, coord, IntField(payload, "at_s")));
  }
  if (name == "clock") {
    keyhunter::AdvanceClock(session, IntField(payload, "at_s"));
    return json::object();
  }
  if (name == "tab") {
    auto tab = keyhunter::ParseTab(StringField(payload, "tab"));
    if (!tab) BadRequest("tab must be dictionary, message, notes or question");
    return {{"tab", keyhunter::ToString(*tab)}, {"text", keyhunter::TabContent(session, *tab)}};
  }
  if (name == "notes") {
    keyhunter::SetNotes(session, StringField(payload, "text"));
    return {{"notes", session.notes}};
  }
  UnknownAction(name);
}

json GameRunner::ApplyPhishing(const std::string& name, const json& payload) {
  auto& session = std::get<phishing::PhishingSession>(state_);
  if (name == "view") return json::object();
  if (name == "classify") {
    auto verdict = phishing::ParseVerdict(StringField(payload, "verdict"));
    if (!verdict) BadRequest("verdict must be legitimate or phishing");
    return phishing::ToJson(phishing::Classify(session, *verdict, IntField(payload, "at_ms")));
  }
  if (name == "clock") {
    phishing::AdvanceClock(session, IntField(payload, "at_ms"));
    return json::object();
  }
  if (name == "inbox") {
    auto inbox = phishing::ParseInbox(StringField(payload, "inbox"));
    if (!inbox) BadRequest("inbox must be left or right");
    const std::int64_t position = IntField(payload, "position");
    if (position < 0) throw Error(Errc::kOutOfRange, "position must be non-negative");
    return phishing::ToJson(
        phishing::GetInboxDetail(session, *inbox, static_cast<std::size_t>(position)));
  }
  UnknownAction(name);
}

json GameRunner::ApplyDataDefenders(const std::string& name, const json& payload) {
  auto& state = std::get<datadefenders::HostingState>(state_);
  if (name == "view") return json::object();
  if (name == "start_day") {
    datadefenders::StartDay(state, *content_.scenarios,
                            MixSeed(seed_, 1000 + static_cast<std::uint64_t>(state.day)));
    return json::object();
  }
  if (name == "tick") {
    const std::int64_t count = payload.contains("count") ? IntField(payload, "count") : 1;
    if (!state.day_in_progress) throw Error(Errc::kDayNotStarted);
    if (state.tick >= state.tuning.ticks_per_day) throw Error(Errc::kDayOver);
    if (count < 1 || count > state.tuning.ticks_per_day - state.tick) {
      BadRequest("count must be between 1 and the ticks left today");
    }
    json emitted = json::array();
    for (std::int64_t i = 0; i < count; ++i) {
      for (const auto& event : datadefenders::Tick(state)) {
        emitted.push_back(datadefenders::ToJson(event));
      }
    }
    return {{"events", emitted}};
  }
  if (name == "tab") {
    auto tab = datadefenders::ParseTab(StringField(payload, "tab"));
    if (!tab) BadRequest("tab must be websites, servers, seccams or messages");
    return datadefenders::ViewTab(state, *tab);
  }
  if (name == "report_form") return datadefenders::ReportForm(state);
  if (name == "report") {
    auto diagnosis = content::ParseAttackType(StringField(payload, "diagnosis"));
    if (!diagnosis) BadRequest("unknown diagnosis");
    return datadefenders::ToJson(datadefenders::FileReport(
        state, *diagnosis, IntListField(payload, "answers"),
        static_cast<int>(IntField(payload, "at_tick"))));
  }
  if (name == "end_day") return datadefenders::ToJson(datadefenders::EndDay(state));
  if (name == "upgrade") {
    datadefenders::BuyUpgrade(state, static_cast<int>(IntField(payload, "server_id")));
    return json::object();
  }
  UnknownAction(name);
}

json GameRunner::View() const {
  switch (game_) {
    case Game::kTrivia: {
      const auto& session = std::get<trivia::TriviaSession>(state_);
      std::int64_t points = 0;
      for (const auto& r : session.results) points += r.points;
      json view{{"mode", trivia::ToString(session.config.mode)},
                {"answered", session.cursor},
                {"total", session.questions.size()},
                {"points", points},
                {"finished", session.state == trivia::State::kFinished}};
      if (session.config.mode != trivia::Mode::kPracticeTopic) view["rank"] = session.config.rank;
      if (session.state == trivia::State::kAwaitingAnswer) {
        view["question"] = trivia::ToJson(trivia::CurrentQuestion(session));
      }
      return view;
    }
    case Game::kKeyHunter: return keyhunter::View(std::get<keyhunter::KeyHunterSession>(state_));
    case Game::kPhishing: return phishing::View(std::get<phishing::PhishingSession>(state_));
    case Game::kDataDefenders:
      return datadefenders::View(std::get<datadefenders::HostingState>(state_));
  }
  return {};
}

bool GameRunner::Terminal() const {
  switch (game_) {
    case Game::kTrivia:
      return std::get<trivia::TriviaSession>(state_).state == trivia::State::kFinished;
    case Game::kKeyHunter:
      return std::get<keyhunter::KeyHunterSession>(state_).state != keyhunter::State::kPlaying;
    case Game::kPhishing:
      return std::get<phishing::PhishingSession>(state_).state == phishing::State::kEnded;
    case Game::kDataDefenders:
      return !std::get<datadefenders::HostingState>(state_).day_in_progress;
  }
  return false;
}

std::int64_t GameRunner::Score() const {
  switch (game_) {
    case Game::kTrivia: {
      std::int64_t points = 0;
      for (const auto& r : std::get<trivia::TriviaSession>(state_).results) points += r.points;
      return points;
    }
    case Game::kKeyHunter:
      return keyhunter::SessionScore(std::get<keyhunter::KeyHunterSession>(state_));
    case Game::kPhishing: return std::get<phishing::PhishingSession>(state_).score;
    case Game::kDataDefenders:
      return std::get<datadefenders::HostingState>(state_).day - 1;
  }
  return 0;
}

json GameRunner::Outcome() const {
  if (!Terminal()) throw Error(Errc::kSessionNotTerminal);
  switch (game_) {
    case Game::kTrivia:
      return trivia::ToJson(trivia::Finalize(std::get<trivia::TriviaSession>(state_)));
    case Game::kKeyHunter: {
      const auto& session = std::get<keyhunter::KeyHunterSession>(state_);
      return {{"score", keyhunter::SessionScore(session)},
              {"state", keyhunter::ToString(session.state)}};
    }
    case Game::kPhishing:
      return phishing::ToJson(phishing::Finalize(std::get<phishing::PhishingSession>(state_)));
    case Game::kDataDefenders: {
      const auto progress = *Progress();
      return {{"days_completed", progress.day - 1},
              {"reputation", progress.reputation},
              {"money", progress.money}};
    }
  }
  return {};
}

json GameRunner::Snapshot() const {
  switch (game_) {
    case Game::kTrivia: return trivia::Snapshot(std::get<trivia::TriviaSession>(state_));
    case Game::kKeyHunter:
      return keyhunter::Snapshot(std::get<keyhunter::KeyHunterSession>(state_));
    case Game::kPhishing: return phishing::Snapshot(std::get<phishing::PhishingSession>(state_));
    case Game::kDataDefenders:
      return datadefenders::Snapshot(std::get<datadefenders::HostingState>(state_));
  }
  return {};
}

std::optional<int> GameRunner::NewTriviaRank() const {
  if (game_ != Game::kTrivia || !Terminal()) return std::nullopt;
  return trivia::Finalize(std::get<trivia::TriviaSession>(state_)).new_rank;
}

std::optional<DataDefendersContext> GameRunner::Progress() const {
  if (game_ != Game::kDataDefenders) return std::nullopt;
  const auto& state = std::get<datadefenders::HostingState>(state_);
  DataDefendersContext ctx{state.day, state.reputation, state.money, {}};
  for (int i = 0; i < datadefenders::kServerCount; ++i) {
    ctx.upgrades[i] = state.servers[i].upgrade_level;
  }
  return ctx;
}

GameRunner ReplayTranscript(const json& transcript, const ContentSet& content) {
  auto game = ParseGame(transcript.at("game").get<std::string>());
  if (!game) throw Error(Errc::kUnknownGame);
  GameRunner runner(*game, transcript.at("start"), transcript.at("seed").get<std::uint64_t>(),
                    content);
  for (const auto& entry : transcript.at("actions")) runner.Apply(entry);
  return runner;
}

}  // namespace arcade::platform
