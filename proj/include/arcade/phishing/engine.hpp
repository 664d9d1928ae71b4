#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "json.hpp"

namespace arcade::phishing {

inline constexpr int kLives = 3;
inline constexpr std::int64_t kSessionMs = 60000;
inline constexpr int kPointsPerCorrect = 100;
inline constexpr std::size_t kMinTierEmails = 30;

enum class Verdict { kLegitimate, kPhishing };
enum class Inbox { kLeft, kRight };  // left holds legitimate verdicts, right phishing

struct SortedEmail {
  std::string email_id;
  Verdict verdict = Verdict::kLegitimate;
  bool was_correct = false;
};

enum class State { kPlaying, kEnded };

struct PhishingSession {
  content::Difficulty difficulty = content::Difficulty::kEasy;
  std::uint64_t seed = 0;
  std::vector<content::EmailItem> queue;
  std::size_t cursor = 0;
  int lives = kLives;
  int score = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<SortedEmail> sorted;
  State state = State::kPlaying;
};

struct EmailView {
  std::string id;
  std::string sender;
  std::string subject;
  std::string body;
};

struct ClassifyResult {
  bool accepted = true;  // false when the verdict arrived after the minute
  bool correct = false;
  Verdict truth = Verdict::kLegitimate;
  std::string explanation;
  Inbox inbox = Inbox::kLeft;
  int score = 0;
  int lives = 0;
  State state = State::kPlaying;
};

struct InboxDetail {
  content::EmailItem email;
  Verdict verdict = Verdict::kLegitimate;
  bool was_correct = false;
};

struct PhishingOutcome {
  int score = 0;
  int correct_count = 0;
  int wrong_count = 0;
};

PhishingSession NewSession(const content::ContentPack& corpus, content::Difficulty difficulty,
                           std::uint64_t seed);
EmailView CurrentEmail(const PhishingSession& session);
ClassifyResult Classify(PhishingSession& session, Verdict verdict, std::int64_t at_ms);
// Moves the clock forward without a verdict; ends the session at 60 s.
void AdvanceClock(PhishingSession& session, std::int64_t at_ms);
std::vector<SortedEmail> InboxContents(const PhishingSession& session, Inbox inbox);
InboxDetail GetInboxDetail(const PhishingSession& session, Inbox inbox, std::size_t position);
PhishingOutcome Finalize(const PhishingSession& session);

std::string_view ToString(Verdict verdict);
std::string_view ToString(Inbox inbox);
std::string_view ToString(State state);
std::optional<Verdict> ParseVerdict(std::string_view text);
std::optional<Inbox> ParseInbox(std::string_view text);

nlohmann::json ToJson(const EmailView& view);
nlohmann::json ToJson(const ClassifyResult& result);
nlohmann::json ToJson(const InboxDetail& detail);
nlohmann::json ToJson(const PhishingOutcome& outcome);
// Player view: lives, score, clock, the current email and both inbox lists
// (id, subject, marker) without truth labels for anything unresolved.
nlohmann::json View(const PhishingSession& session);
nlohmann::json Snapshot(const PhishingSession& session);

}  // namespace arcade::phishing
