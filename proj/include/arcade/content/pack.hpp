#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcade::content {

enum class QuestionKind { kSingleChoice, kTrueFalse, kMultiCorrect };
enum class Difficulty { kEasy, kMedium, kHard };
enum class AttackType { kDoS, kMalware, kDNS, kInsider, kSQLInjection, kUSBDrop };
enum class ClueChannel { kWebsites, kServers, kSecCams, kMessages };
enum class PackKind { kQuestions, kEmails, kScenarios };

inline constexpr std::array<AttackType, 6> kAllAttackTypes = {
    AttackType::kDoS,     AttackType::kMalware,      AttackType::kDNS,
    AttackType::kInsider, AttackType::kSQLInjection, AttackType::kUSBDrop};
inline constexpr std::array<ClueChannel, 4> kAllChannels = {
    ClueChannel::kWebsites, ClueChannel::kServers, ClueChannel::kSecCams,
    ClueChannel::kMessages};

inline constexpr std::int64_t kDefaultTimeLimitMs = 20000;
inline constexpr int kMinQuestionsPerRank = 25;
inline constexpr int kMinRank = 1;
inline constexpr int kMaxRank = 10;

struct Question {
  std::string id;
  int rank = 1;
  std::string topic;
  QuestionKind kind = QuestionKind::kSingleChoice;
  std::string prompt;
  std::vector<std::string> choices;
  std::vector<int> correct;  // sorted, as authored
  std::string explanation;
  std::int64_t time_limit_ms = kDefaultTimeLimitMs;

  bool operator==(const Question&) const = default;
};

struct EmailItem {
  std::string id;
  std::string sender;
  std::string subject;
  std::string body;
  bool is_phishing = false;
  std::string explanation;
  Difficulty difficulty = Difficulty::kEasy;

  bool operator==(const EmailItem&) const = default;
};

struct ReportQuestion {
  std::string prompt;
  std::vector<std::string> choices;
  int correct = 0;

  bool operator==(const ReportQuestion&) const = default;
};

struct AttackTemplate {
  std::string id;
  AttackType attack_type = AttackType::kDoS;
  std::map<ClueChannel, std::vector<std::string>> clue_texts;
  std::string owner_message;
  std::vector<ReportQuestion> report_questions;

  bool operator==(const AttackTemplate&) const = default;
};

// Exactly one of the item vectors is populated, matching `kind`.
struct ContentPack {
  PackKind kind = PackKind::kQuestions;
  int version = 1;
  std::vector<Question> questions;
  std::vector<EmailItem> emails;
  std::vector<AttackTemplate> scenarios;

  std::size_t size() const;
  bool operator==(const ContentPack&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool accepted() const { return violations.empty(); }
};

// Structural parse of a pack file. Throws Error with kMalformedSyntax,
// kUnknownField or kKindMismatch; semantic checks live in ValidatePack.
ContentPack ParsePack(std::string_view raw, PackKind kind);
std::string SerializePack(const ContentPack& pack);
ValidationReport ValidatePack(const ContentPack& pack);

// Parses a file from disk and throws kMalformedSyntax naming the path when it
// cannot be read.
ContentPack LoadPackFile(const std::string& path, PackKind kind);

// Channels each attack type must surface evidence on.
const std::vector<ClueChannel>& RequiredChannels(AttackType type);

std::string_view ToString(QuestionKind kind);
std::string_view ToString(Difficulty difficulty);
std::string_view ToString(AttackType type);
std::string_view ToString(ClueChannel channel);
std::string_view ToString(PackKind kind);

std::optional<QuestionKind> ParseQuestionKind(std::string_view text);
std::optional<Difficulty> ParseDifficulty(std::string_view text);
std::optional<AttackType> ParseAttackType(std::string_view text);
std::optional<ClueChannel> ParseClueChannel(std::string_view text);
std::optional<PackKind> ParsePackKind(std::string_view text);

}  // namespace arcade::content
