#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "json.hpp"

namespace arcade::trivia {

enum class Mode { kPracticeTopic, kPracticeRank, kRanked };

inline constexpr int kRankedQuestionCount = 25;
inline constexpr int kPromotionThreshold = 18;

struct TriviaConfig {
  Mode mode = Mode::kRanked;
  std::string topic;    // practice-topic only
  int rank = 1;         // practice-rank rank, or the ranked start rank
  int question_count = kRankedQuestionCount;
  std::uint64_t seed = 0;

  static TriviaConfig Ranked(int start_rank, std::uint64_t seed);
  static TriviaConfig PracticeTopic(std::string topic, int count, std::uint64_t seed);
  static TriviaConfig PracticeRank(int rank, int count, std::uint64_t seed);
};

struct QuestionResult {
  std::vector<int> selected;
  std::int64_t elapsed_ms = 0;
  bool correct = false;
  int points = 0;
};

enum class State { kAwaitingAnswer, kFinished };

struct TriviaSession {
  TriviaConfig config;
  std::vector<content::Question> questions;  // drawn, in play order
  std::size_t cursor = 0;
  std::vector<QuestionResult> results;
  State state = State::kAwaitingAnswer;
};

// What the player may see before answering.
struct QuestionView {
  std::string id;
  std::size_t index = 0;
  std::size_t total = 0;
  std::string topic;
  content::QuestionKind kind = content::QuestionKind::kSingleChoice;
  std::string prompt;
  std::vector<std::string> choices;
  std::int64_t time_limit_ms = 0;
};

struct AnswerResult {
  bool correct = false;
  int points = 0;
  std::vector<int> answer_key;
  std::string explanation;
};

struct TriviaOutcome {
  std::int64_t total_points = 0;
  int correct_count = 0;
  std::optional<int> new_rank;
};

TriviaSession StartSession(const content::ContentPack& bank, const TriviaConfig& config);
QuestionView CurrentQuestion(const TriviaSession& session);

// floor(1000 * (1 - elapsed / (2 * limit))) for a correct answer within the
// limit, else 0.
int ScorePoints(std::int64_t elapsed_ms, std::int64_t limit_ms, bool correct);

AnswerResult SubmitAnswer(TriviaSession& session, std::vector<int> selected,
                          std::int64_t elapsed_ms);
TriviaOutcome Finalize(const TriviaSession& session);

std::string_view ToString(Mode mode);
std::optional<Mode> ParseMode(std::string_view text);

nlohmann::json ToJson(const QuestionView& view);
nlohmann::json ToJson(const AnswerResult& result);
nlohmann::json ToJson(const TriviaOutcome& outcome);
// Complete state including answer keys; for transcripts, never for clients.
nlohmann::json Snapshot(const TriviaSession& session);

}  // namespace arcade::trivia
