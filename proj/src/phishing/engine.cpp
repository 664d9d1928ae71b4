#include "arcade/phishing/engine.hpp"

#include <algorithm>

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::phishing {
namespace {

void CheckClock(const PhishingSession& session, std::int64_t at_ms) {
  if (session.state != State::kPlaying) throw Error(Errc::kSessionEnded);
  if (at_ms < session.elapsed_ms) throw Error(Errc::kTimeWentBackwards);
}

const content::EmailItem* FindEmail(const PhishingSession& session, const std::string& id) {
  for (const auto& email : session.queue) {
    if (email.id == id) return &email;
  }
  return nullptr;
}

Inbox InboxFor(Verdict verdict) {
  return verdict == Verdict::kLegitimate ? Inbox::kLeft : Inbox::kRight;
}

}  // namespace

PhishingSession NewSession(const content::ContentPack& corpus, content::Difficulty difficulty,
                           std::uint64_t seed) {
  PhishingSession session;
  session.difficulty = difficulty;
  session.seed = seed;
  for (const auto& email : corpus.emails) {
    if (email.difficulty == difficulty) session.queue.push_back(email);
  }
  if (session.queue.size() < kMinTierEmails) {
    throw Error(Errc::kInsufficientEmails,
                "tier " + std::string(content::ToString(difficulty)) + " has only " +
                    std::to_string(session.queue.size()) + " emails, need 30");
  }
  Rng rng(seed);
  rng.Shuffle(std::span(session.queue));
  return session;
}

EmailView CurrentEmail(const PhishingSession& session) {
  if (session.state != State::kPlaying) throw Error(Errc::kSessionEnded);
  const auto& email = session.queue[session.cursor];
  return EmailView{email.id, email.sender, email.subject, email.body};
}

void AdvanceClock(PhishingSession& session, std::int64_t at_ms) {
  CheckClock(session, at_ms);
  session.elapsed_ms = std::min(at_ms, kSessionMs);
  if (at_ms >= kSessionMs) session.state = State::kEnded;
}

ClassifyResult Classify(PhishingSession& session, Verdict verdict, std::int64_t at_ms) {
  CheckClock(session, at_ms);
  ClassifyResult result;
  if (at_ms >= kSessionMs) {
    AdvanceClock(session, at_ms);
    result.accepted = false;
  } else {
    session.elapsed_ms = at_ms;
    const auto& email = session.queue[session.cursor];
    result.truth = email.is_phishing ? Verdict::kPhishing : Verdict::kLegitimate;
    result.correct = result.truth == verdict;
    result.explanation = email.explanation;
    result.inbox = InboxFor(verdict);
    session.sorted.push_back(SortedEmail{email.id, verdict, result.correct});
    if (result.correct) {
      session.score += kPointsPerCorrect;
    } else {
      --session.lives;
    }
    ++session.cursor;
    if (session.lives == 0 || session.cursor == session.queue.size()) {
      session.state = State::kEnded;
    }
  }
  result.score = session.score;
  result.lives = session.lives;
  result.state = session.state;
  return result;
}

std::vector<SortedEmail> InboxContents(const PhishingSession& session, Inbox inbox) {
  std::vector<SortedEmail> out;
  for (const auto& entry : session.sorted) {
    if (InboxFor(entry.verdict) == inbox) out.push_back(entry);
  }
  return out;
}

InboxDetail GetInboxDetail(const PhishingSession& session, Inbox inbox, std::size_t position) {
  const auto contents = InboxContents(session, inbox);
  if (position >= contents.size()) {
    throw Error(Errc::kOutOfRange, "inbox " + std::string(ToString(inbox)) + " holds " +
                                       std::to_string(contents.size()) + " emails");
  }
  const auto& entry = contents[position];
  return InboxDetail{*FindEmail(session, entry.email_id), entry.verdict, entry.was_correct};
}

PhishingOutcome Finalize(const PhishingSession& session) {
  if (session.state != State::kEnded) throw Error(Errc::kSessionNotEnded);
  PhishingOutcome outcome;
  for (const auto& entry : session.sorted) {
    (entry.was_correct ? outcome.correct_count : outcome.wrong_count) += 1;
  }
  outcome.score = kPointsPerCorrect * outcome.correct_count;
  return outcome;
}

std::string_view ToString(Verdict verdict) {
  return verdict == Verdict::kLegitimate ? "legitimate" : "phishing";
}
std::string_view ToString(Inbox inbox) { return inbox == Inbox::kLeft ? "left" : "right"; }
std::string_view ToString(State state) { return state == State::kPlaying ? "playing" : "ended"; }

std::optional<Verdict> ParseVerdict(std::string_view text) {
  if (text == "legitimate") return Verdict::kLegitimate;
  if (text == "phishing") return Verdict::kPhishing;
  return std::nullopt;
}

std::optional<Inbox> ParseInbox(std::string_view text) {
  if (text == "left") return Inbox::kLeft;
  if (text == "right") return Inbox::kRight;
  return std::nullopt;
}

nlohmann::json ToJson(const EmailView& view) {
  return {{"id", view.id}, {"sender", view.sender}, {"subject", view.subject}, {"body", view.body}};
}

nlohmann::json ToJson(const ClassifyResult& result) {
  nlohmann::json out{{"accepted", result.accepted},
                     {"score", result.score},
                     {"lives", result.lives},
                     {"state", ToString(result.state)}};
  if (result.accepted) {
    out["was_correct"] = result.correct;
    out["label"] = ToString(result.truth);
    out["explanation"] = result.explanation;
    out["inbox"] = ToString(result.inbox);
    out["marker"] = result.correct ? "green" : "red";
  }
  return out;
}

nlohmann::json ToJson(const InboxDetail& detail) {
  return {{"email",
           {{"id", detail.email.id},
            {"sender", detail.email.sender},
            {"subject", detail.email.subject},
            {"body", detail.email.body}}},
          {"verdict", ToString(detail.verdict)},
          {"was_correct", detail.was_correct},
          {"label", detail.email.is_phishing ? "phishing" : "legitimate"},
          {"explanation", detail.email.explanation}};
}

nlohmann::json ToJson(const PhishingOutcome& outcome) {
  return {{"score", outcome.score},
          {"correct_count", outcome.correct_count},
          {"wrong_count", outcome.wrong_count}};
}

nlohmann::json View(const PhishingSession& session) {
  auto summarize = [&](Inbox inbox) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& entry : InboxContents(session, inbox)) {
      const auto* email = FindEmail(session, entry.email_id);
      list.push_back({{"id", entry.email_id},
                      {"subject", email->subject},
                      {"marker", entry.was_correct ? "green" : "red"}});
    }
    return list;
  };
  nlohmann::json view{{"difficulty", content::ToString(session.difficulty)},
                      {"state", ToString(session.state)},
                      {"lives", session.lives},
                      {"score", session.score},
                      {"elapsed_ms", session.elapsed_ms},
                      {"time_limit_ms", kSessionMs},
                      {"left", summarize(Inbox::kLeft)},
                      {"right", summarize(Inbox::kRight)}};
  if (session.state == State::kPlaying) view["email"] = ToJson(CurrentEmail(session));
  return view;
}

nlohmann::json Snapshot(const PhishingSession& session) {
  nlohmann::json queue = nlohmann::json::array();
  for (const auto& email : session.queue) queue.push_back(email.id);
  nlohmann::json sorted = nlohmann::json::array();
  for (const auto& entry : session.sorted) {
    sorted.push_back({{"email_id", entry.email_id},
                      {"verdict", ToString(entry.verdict)},
                      {"was_correct", entry.was_correct}});
  }
  return {{"difficulty", content::ToString(session.difficulty)},
          {"seed", session.seed},
          {"queue", queue},
          {"cursor", session.cursor},
          {"lives", session.lives},
          {"score", session.score},
          {"elapsed_ms", session.elapsed_ms},
          {"sorted", sorted},
          {"state", ToString(session.state)}};
}

}  // namespace arcade::phishing
