#include "arcade/trivia/engine.hpp"

#include <algorithm>
#include <set>

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::trivia {
namespace {

bool IsPracticeCount(int count) {
  return count == 5 || count == 10 || count == 15 || count == 20 || count == 25;
}

void CheckConfig(const TriviaConfig& config) {
  const bool rank_ok = config.rank >= content::kMinRank && config.rank <= content::kMaxRank;
  switch (config.mode) {
    case Mode::kRanked:
      if (config.question_count != kRankedQuestionCount) {
        throw Error(Errc::kInvalidConfig, "ranked games are always 25 questions");
      }
      if (!rank_ok) throw Error(Errc::kInvalidConfig, "rank must be 1-10");
      break;
    case Mode::kPracticeRank:
      if (!rank_ok) throw Error(Errc::kInvalidConfig, "rank must be 1-10");
      [[fallthrough]];
    case Mode::kPracticeTopic:
      if (!IsPracticeCount(config.question_count)) {
        throw Error(Errc::kInvalidConfig, "practice question count must be 5, 10, 15, 20 or 25");
      }
      break;
  }
}

}  // namespace

TriviaConfig TriviaConfig::Ranked(int start_rank, std::uint64_t seed) {
  return TriviaConfig{Mode::kRanked, {}, start_rank, kRankedQuestionCount, seed};
}

TriviaConfig TriviaConfig::PracticeTopic(std::string topic, int count, std::uint64_t seed) {
  return TriviaConfig{Mode::kPracticeTopic, std::move(topic), 1, count, seed};
}

TriviaConfig TriviaConfig::PracticeRank(int rank, int count, std::uint64_t seed) {
  return TriviaConfig{Mode::kPracticeRank, {}, rank, count, seed};
}

TriviaSession StartSession(const content::ContentPack& bank, const TriviaConfig& config) {
  CheckConfig(config);
  std::vector<const content::Question*> pool;
  for (const auto& q : bank.questions) {
    const bool eligible = config.mode == Mode::kPracticeTopic ? q.topic == config.topic
                                                              : q.rank == config.rank;
    if (eligible) pool.push_back(&q);
  }
  if (pool.size() < static_cast<std::size_t>(config.question_count)) {
    throw Error(Errc::kInsufficientQuestions,
                "only " + std::to_string(pool.size()) + " eligible questions for a " +
                    std::to_string(config.question_count) + "-question game");
  }

  Rng rng(config.seed);
  rng.Shuffle(std::span(pool));

  TriviaSession session;
  session.config = config;
  for (int i = 0; i < config.question_count; ++i) session.questions.push_back(*pool[i]);
  return session;
}

QuestionView CurrentQuestion(const TriviaSession& session) {
  if (session.state == State::kFinished) throw Error(Errc::kSessionFinished);
  const auto& q = session.questions[session.cursor];
  return QuestionView{q.id,     session.cursor, session.questions.size(), q.topic,
                      q.kind,   q.prompt,       q.choices,                q.time_limit_ms};
}

int ScorePoints(std::int64_t elapsed_ms, std::int64_t limit_ms, bool correct) {
  if (!correct || elapsed_ms > limit_ms) return 0;
  // Both operands are non-negative, so integer division is the floor.
  return static_cast<int>(1000 * (2 * limit_ms - elapsed_ms) / (2 * limit_ms));
}

AnswerResult SubmitAnswer(TriviaSession& session, std::vector<int> selected,
                          std::int64_t elapsed_ms) {
  if (session.state == State::kFinished) throw Error(Errc::kSessionFinished);
  if (elapsed_ms < 0) throw Error(Errc::kInvalidConfig, "elapsed_ms must be non-negative");
  const auto& q = session.questions[session.cursor];
  for (int index : selected) {
    if (index < 0 || index >= static_cast<int>(q.choices.size())) {
      throw Error(Errc::kInvalidChoiceIndex,
                  "choice " + std::to_string(index) + " is not on this question");
    }
  }
  std::set<int> chosen(selected.begin(), selected.end());
  const std::set<int> key(q.correct.begin(), q.correct.end());
  const bool correct = chosen == key;

  QuestionResult result;
  result.selected.assign(chosen.begin(), chosen.end());
  result.elapsed_ms = elapsed_ms;
  result.correct = correct && elapsed_ms <= q.time_limit_ms;
  result.points = ScorePoints(elapsed_ms, q.time_limit_ms, correct);
  session.results.push_back(result);

  ++session.cursor;
  if (session.cursor == session.questions.size()) session.state = State::kFinished;
  return AnswerResult{result.correct, result.points, q.correct, q.explanation};
}

TriviaOutcome Finalize(const TriviaSession& session) {
  if (session.state != State::kFinished) throw Error(Errc::kSessionNotFinished);
  TriviaOutcome outcome;
  for (const auto& r : session.results) {
    outcome.total_points += r.points;
    if (r.correct) ++outcome.correct_count;
  }
  if (session.config.mode == Mode::kRanked) {
    const int start = session.config.rank;
    outcome.new_rank = outcome.correct_count >= kPromotionThreshold
                           ? std::min(start + 1, content::kMaxRank)
                           : start;
  }
  return outcome;
}

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kPracticeTopic: return "practice-topic";
    case Mode::kPracticeRank: return "practice-rank";
    case Mode::kRanked: return "ranked";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "practice-topic") return Mode::kPracticeTopic;
  if (text == "practice-rank") return Mode::kPracticeRank;
  if (text == "ranked") return Mode::kRanked;
  return std::nullopt;
}

nlohmann::json ToJson(const QuestionView& view) {
  return {{"id", view.id},
          {"index", view.index},
          {"total", view.total},
          {"topic", view.topic},
          {"kind", content::ToString(view.kind)},
          {"prompt", view.prompt},
          {"choices", view.choices},
          {"time_limit_ms", view.time_limit_ms}};
}

nlohmann::json ToJson(const AnswerResult& result) {
  return {{"was_correct", result.correct},
          {"points", result.points},
          {"answer_key", result.answer_key},
          {"explanation", result.explanation}};
}

nlohmann::json ToJson(const TriviaOutcome& outcome) {
  nlohmann::json out{{"total_points", outcome.total_points},
                     {"correct_count", outcome.correct_count}};
  if (outcome.new_rank) out["new_rank"] = *outcome.new_rank;
  return out;
}

nlohmann::json Snapshot(const TriviaSession& session) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : session.results) {
    results.push_back({{"selected", r.selected},
                       {"elapsed_ms", r.elapsed_ms},
                       {"correct", r.correct},
                       {"points", r.points}});
  }
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& q : session.questions) ids.push_back(q.id);
  return {{"mode", ToString(session.config.mode)},
          {"topic", session.config.topic},
          {"rank", session.config.rank},
          {"question_count", session.config.question_count},
          {"seed", session.config.seed},
          {"question_ids", ids},
          {"cursor", session.cursor},
          {"results", results},
          {"finished", session.state == State::kFinished}};
}

}  // namespace arcade::trivia
