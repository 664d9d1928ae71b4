#include "arcade/content/pack.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "arcade/error.hpp"
#include "json.hpp"

namespace arcade::content {
namespace {

using nlohmann::json;

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::array<std::pair<std::string_view, Enum>, N>& table,
                           std::string_view text) {
  for (const auto& [name, value] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view NameOf(const std::array<std::pair<std::string_view, Enum>, N>& table,
                        Enum value) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

constexpr std::array<std::pair<std::string_view, QuestionKind>, 3> kKindNames{{
    {"single-choice", QuestionKind::kSingleChoice},
    {"true-false", QuestionKind::kTrueFalse},
    {"multi-correct", QuestionKind::kMultiCorrect},
}};
constexpr std::array<std::pair<std::string_view, Difficulty>, 3> kDifficultyNames{{
    {"easy", Difficulty::kEasy},
    {"medium", Difficulty::kMedium},
    {"hard", Difficulty::kHard},
}};
constexpr std::array<std::pair<std::string_view, AttackType>, 6> kAttackNames{{
    {"DoS", AttackType::kDoS},
    {"Malware", AttackType::kMalware},
    {"DNS", AttackType::kDNS},
    {"Insider", AttackType::kInsider},
    {"SQLInjection", AttackType::kSQLInjection},
    {"USBDrop", AttackType::kUSBDrop},
}};
constexpr std::array<std::pair<std::string_view, ClueChannel>, 4> kChannelNames{{
    {"websites", ClueChannel::kWebsites},
    {"servers", ClueChannel::kServers},
    {"seccams", ClueChannel::kSecCams},
    {"messages", ClueChannel::kMessages},
}};
constexpr std::array<std::pair<std::string_view, PackKind>, 3> kPackNames{{
    {"questions", PackKind::kQuestions},
    {"emails", PackKind::kEmails},
    {"scenarios", PackKind::kScenarios},
}};

// Strict reader over one JSON object: every key must be known, and required
// keys must be present with the right JSON type.
class FieldReader {
 public:
  FieldReader(const json& object, std::string context,
              std::initializer_list<std::string_view> allowed)
      : object_(object), context_(std::move(context)) {
    if (!object_.is_object()) Fail("expected an object");
    for (const auto& [key, value] : object_.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw Error(Errc::kUnknownField, context_ + ": unknown field \"" + key + "\"");
      }
    }
  }

  const json& Required(std::string_view key) const {
    auto it = object_.find(std::string(key));
    if (it == object_.end()) {
      Fail("missing field \"" + std::string(key) + "\"");
    }
    return *it;
  }

  bool Has(std::string_view key) const { return object_.contains(std::string(key)); }

  std::string String(std::string_view key) const {
    const json& value = Required(key);
    if (!value.is_string()) WrongType(key, "string");
    return value.get<std::string>();
  }

  std::int64_t Integer(std::string_view key) const {
    const json& value = Required(key);
    if (!value.is_number_integer()) WrongType(key, "integer");
    return value.get<std::int64_t>();
  }

  bool Boolean(std::string_view key) const {
    const json& value = Required(key);
    if (!value.is_boolean()) WrongType(key, "boolean");
    return value.get<bool>();
  }

  std::vector<std::string> StringList(std::string_view key) const {
    const json& value = Required(key);
    if (!value.is_array()) WrongType(key, "array of strings");
    std::vector<std::string> out;
    for (const auto& element : value) {
      if (!element.is_string()) WrongType(key, "array of strings");
      out.push_back(element.get<std::string>());
    }
    return out;
  }

  std::vector<int> IntList(std::string_view key) const {
    const json& value = Required(key);
    if (!value.is_array()) WrongType(key, "array of integers");
    std::vector<int> out;
    for (const auto& element : value) {
      if (!element.is_number_integer()) WrongType(key, "array of integers");
      out.push_back(element.get<int>());
    }
    return out;
  }

  template <typename Enum>
  Enum EnumField(std::string_view key, std::optional<Enum> (*parse)(std::string_view)) const {
    const std::string text = String(key);
    auto parsed = parse(text);
    if (!parsed) Fail("bad value \"" + text + "\" for \"" + std::string(key) + "\"");
    return *parsed;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(Errc::kMalformedSyntax, context_ + ": " + what);
  }

 private:
  [[noreturn]] void WrongType(std::string_view key, std::string_view expected) const {
    Fail("field \"" + std::string(key) + "\" must be " + std::string(expected));
  }

  const json& object_;
  std::string context_;
};

std::string ItemContext(const json& item, std::size_t index) {
  if (item.is_object()) {
    auto it = item.find("id");
    if (it != item.end() && it->is_string()) {
      return "item \"" + it->get<std::string>() + "\"";
    }
  }
  return "item #" + std::to_string(index);
}

Question ParseQuestion(const json& item, std::size_t index) {
  FieldReader r(item, ItemContext(item, index),
                {"id", "rank", "topic", "kind", "prompt", "choices", "correct", "explanation",
                 "time_limit_ms"});
  Question q;
  q.id = r.String("id");
  q.rank = static_cast<int>(r.Integer("rank"));
  q.topic = r.String("topic");
  q.kind = r.EnumField<QuestionKind>("kind", ParseQuestionKind);
  q.prompt = r.String("prompt");
  q.choices = r.StringList("choices");
  q.correct = r.IntList("correct");
  q.explanation = r.String("explanation");
  if (r.Has("time_limit_ms")) q.time_limit_ms = r.Integer("time_limit_ms");
  return q;
}

EmailItem ParseEmail(const json& item, std::size_t index) {
  FieldReader r(item, ItemContext(item, index),
                {"id", "sender", "subject", "body", "is_phishing", "explanation", "difficulty"});
  EmailItem e;
  e.id = r.String("id");
  e.sender = r.String("sender");
  e.subject = r.String("subject");
  e.body = r.String("body");
  e.is_phishing = r.Boolean("is_phishing");
  e.explanation = r.String("explanation");
  e.difficulty = r.EnumField<Difficulty>("difficulty", ParseDifficulty);
  return e;
}

AttackTemplate ParseScenario(const json& item, std::size_t index) {
  const std::string context = ItemContext(item, index);
  FieldReader r(item, context,
                {"id", "attack_type", "clue_texts", "owner_message", "report_questions"});
  AttackTemplate t;
  t.id = r.String("id");
  t.attack_type = r.EnumField<AttackType>("attack_type", ParseAttackType);
  t.owner_message = r.String("owner_message");

  const json& clues = r.Required("clue_texts");
  if (!clues.is_object()) r.Fail("field \"clue_texts\" must be an object");
  for (const auto& [name, texts] : clues.items()) {
    auto channel = ParseClueChannel(name);
    if (!channel) {
      throw Error(Errc::kUnknownField, context + ": unknown clue channel \"" + name + "\"");
    }
    if (!texts.is_array()) r.Fail("clue_texts." + name + " must be an array of strings");
    auto& out = t.clue_texts[*channel];
    for (const auto& text : texts) {
      if (!text.is_string()) r.Fail("clue_texts." + name + " must be an array of strings");
      out.push_back(text.get<std::string>());
    }
  }

  const json& questions = r.Required("report_questions");
  if (!questions.is_array()) r.Fail("field \"report_questions\" must be an array");
  for (std::size_t i = 0; i < questions.size(); ++i) {
    FieldReader qr(questions[i], context + " report_questions[" + std::to_string(i) + "]",
                   {"prompt", "choices", "correct"});
    ReportQuestion rq;
    rq.prompt = qr.String("prompt");
    rq.choices = qr.StringList("choices");
    rq.correct = static_cast<int>(qr.Integer("correct"));
    t.report_questions.push_back(std::move(rq));
  }
  return t;
}

json ToJson(const Question& q) {
  return json{{"id", q.id},
              {"rank", q.rank},
              {"topic", q.topic},
              {"kind", ToString(q.kind)},
              {"prompt", q.prompt},
              {"choices", q.choices},
              {"correct", q.correct},
              {"explanation", q.explanation},
              {"time_limit_ms", q.time_limit_ms}};
}

json ToJson(const EmailItem& e) {
  return json{{"id", e.id},
              {"sender", e.sender},
              {"subject", e.subject},
              {"body", e.body},
              {"is_phishing", e.is_phishing},
              {"explanation", e.explanation},
              {"difficulty", ToString(e.difficulty)}};
}

json ToJson(const AttackTemplate& t) {
  json clues = json::object();
  for (const auto& [channel, texts] : t.clue_texts) clues[std::string(ToString(channel))] = texts;
  json questions = json::array();
  for (const auto& rq : t.report_questions) {
    questions.push_back({{"prompt", rq.prompt}, {"choices", rq.choices}, {"correct", rq.correct}});
  }
  return json{{"id", t.id},
              {"attack_type", ToString(t.attack_type)},
              {"clue_texts", clues},
              {"owner_message", t.owner_message},
              {"report_questions", questions}};
}

void CheckQuestion(const Question& q, std::vector<std::string>& out) {
  auto add = [&](const std::string& what) { out.push_back("question " + q.id + ": " + what); };
  if (q.rank < kMinRank || q.rank > kMaxRank) {
    add("rank " + std::to_string(q.rank) + " outside 1-10");
  }
  if (q.choices.size() < 2 || q.choices.size() > 6) {
    add("has " + std::to_string(q.choices.size()) + " choices, expected 2-6");
  }
  if (q.correct.empty()) add("empty correct set");
  std::set<int> distinct;
  for (int index : q.correct) {
    if (index < 0 || index >= static_cast<int>(q.choices.size())) {
      add("correct index " + std::to_string(index) + " out of range");
    }
    if (!distinct.insert(index).second) add("duplicate correct index " + std::to_string(index));
  }
  switch (q.kind) {
    case QuestionKind::kTrueFalse:
      if (q.choices.size() != 2) add("true-false must have exactly 2 choices");
      if (q.correct.size() != 1) add("true-false must have exactly 1 correct index");
      break;
    case QuestionKind::kSingleChoice:
      if (q.correct.size() != 1) add("single-choice must have exactly 1 correct index");
      break;
    case QuestionKind::kMultiCorrect:
      if (q.correct.size() < 2) add("multi-correct needs at least 2 correct indices");
      break;
  }
  if (q.time_limit_ms <= 0) add("time_limit_ms must be positive");
  if (q.prompt.empty()) add("empty prompt");
}

void CheckEmail(const EmailItem& e, std::vector<std::string>& out) {
  if (e.explanation.empty()) out.push_back("email " + e.id + ": empty explanation");
  if (e.sender.empty()) out.push_back("email " + e.id + ": empty sender");
}

void CheckScenario(const AttackTemplate& t, std::vector<std::string>& out) {
  auto add = [&](const std::string& what) { out.push_back("scenario " + t.id + ": " + what); };
  const auto& required = RequiredChannels(t.attack_type);
  for (ClueChannel channel : required) {
    auto it = t.clue_texts.find(channel);
    if (it == t.clue_texts.end() || it->second.empty()) {
      add("missing clue_texts for channel " + std::string(ToString(channel)));
    }
  }
  for (const auto& [channel, texts] : t.clue_texts) {
    if (std::find(required.begin(), required.end(), channel) == required.end()) {
      add("clue_texts for channel " + std::string(ToString(channel)) +
          " not in the signature of " + std::string(ToString(t.attack_type)));
    }
  }
  const bool needs_owner =
      std::find(required.begin(), required.end(), ClueChannel::kMessages) != required.end();
  if (needs_owner && t.owner_message.empty()) add("empty owner_message");
  if (t.report_questions.size() < 4) {
    add("has " + std::to_string(t.report_questions.size()) + " report questions, expected >= 4");
  }
  for (std::size_t i = 0; i < t.report_questions.size(); ++i) {
    const auto& rq = t.report_questions[i];
    const std::string where = "report question " + std::to_string(i);
    if (rq.choices.size() < 2 || rq.choices.size() > 4) {
      add(where + " has " + std::to_string(rq.choices.size()) + " choices, expected 2-4");
    }
    if (rq.correct < 0 || rq.correct >= static_cast<int>(rq.choices.size())) {
      add(where + " correct index out of range");
    }
  }
}

template <typename Item>
void CheckUniqueIds(const std::vector<Item>& items, std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (item.id.empty()) out.push_back("item with empty id");
    if (!seen.insert(item.id).second) out.push_back("duplicate id " + item.id);
  }
}

}  // namespace

std::size_t ContentPack::size() const {
  switch (kind) {
    case PackKind::kQuestions: return questions.size();
    case PackKind::kEmails: return emails.size();
    case PackKind::kScenarios: return scenarios.size();
  }
  return 0;
}

ContentPack ParsePack(std::string_view raw, PackKind kind) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::kMalformedSyntax,
                "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  FieldReader envelope(doc, "pack", {"kind", "version", "items"});
  const std::string kind_text = envelope.String("kind");
  auto parsed_kind = ParsePackKind(kind_text);
  if (!parsed_kind) envelope.Fail("unknown pack kind \"" + kind_text + "\"");
  if (*parsed_kind != kind) {
    throw Error(Errc::kKindMismatch, "expected a " + std::string(ToString(kind)) +
                                         " pack, found " + kind_text);
  }

  ContentPack pack;
  pack.kind = kind;
  pack.version = static_cast<int>(envelope.Integer("version"));
  const json& items = envelope.Required("items");
  if (!items.is_array()) envelope.Fail("field \"items\" must be an array");
  for (std::size_t i = 0; i < items.size(); ++i) {
    switch (kind) {
      case PackKind::kQuestions: pack.questions.push_back(ParseQuestion(items[i], i)); break;
      case PackKind::kEmails: pack.emails.push_back(ParseEmail(items[i], i)); break;
      case PackKind::kScenarios: pack.scenarios.push_back(ParseScenario(items[i], i)); break;
    }
  }
  return pack;
}

std::string SerializePack(const ContentPack& pack) {
  json items = json::array();
  switch (pack.kind) {
    case PackKind::kQuestions:
      for (const auto& q : pack.questions) items.push_back(ToJson(q));
      break;
    case PackKind::kEmails:
      for (const auto& e : pack.emails) items.push_back(ToJson(e));
      break;
    case PackKind::kScenarios:
      for (const auto& t : pack.scenarios) items.push_back(ToJson(t));
      break;
  }
  json doc{{"kind", ToString(pack.kind)}, {"version", pack.version}, {"items", items}};
  return doc.dump(2) + "\n";
}

ValidationReport ValidatePack(const ContentPack& pack) {
  ValidationReport report;
  auto& out = report.violations;
  if (pack.size() == 0) out.push_back("pack has no items");
  switch (pack.kind) {
    case PackKind::kQuestions: {
      CheckUniqueIds(pack.questions, out);
      std::array<int, kMaxRank + 1> per_rank{};
      for (const auto& q : pack.questions) {
        CheckQuestion(q, out);
        if (q.rank >= kMinRank && q.rank <= kMaxRank) ++per_rank[q.rank];
      }
      for (int rank = kMinRank; rank <= kMaxRank; ++rank) {
        if (per_rank[rank] < kMinQuestionsPerRank) {
          out.push_back("rank " + std::to_string(rank) + " has " + std::to_string(per_rank[rank]) +
                        " < " + std::to_string(kMinQuestionsPerRank) + " questions");
        }
      }
      break;
    }
    case PackKind::kEmails:
      CheckUniqueIds(pack.emails, out);
      for (const auto& e : pack.emails) CheckEmail(e, out);
      break;
    case PackKind::kScenarios: {
      CheckUniqueIds(pack.scenarios, out);
      std::set<AttackType> covered;
      for (const auto& t : pack.scenarios) {
        CheckScenario(t, out);
        covered.insert(t.attack_type);
      }
      for (AttackType type : kAllAttackTypes) {
        if (!covered.contains(type)) {
          out.push_back("no scenario template for " + std::string(ToString(type)));
        }
      }
      break;
    }
  }
  return report;
}

ContentPack LoadPackFile(const std::string& path, PackKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kMalformedSyntax, "cannot read pack file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParsePack(buffer.str(), kind);
}

const std::vector<ClueChannel>& RequiredChannels(AttackType type) {
  using C = ClueChannel;
  static const std::map<AttackType, std::vector<ClueChannel>> kTable{
      {AttackType::kDoS, {C::kServers, C::kMessages}},
      {AttackType::kMalware, {C::kWebsites, C::kServers, C::kMessages}},
      {AttackType::kDNS, {C::kWebsites, C::kMessages}},
      {AttackType::kInsider, {C::kServers, C::kSecCams}},
      {AttackType::kSQLInjection, {C::kServers, C::kMessages}},
      {AttackType::kUSBDrop, {C::kWebsites, C::kSecCams}},
  };
  return kTable.at(type);
}

std::string_view ToString(QuestionKind kind) { return NameOf(kKindNames, kind); }
std::string_view ToString(Difficulty difficulty) { return NameOf(kDifficultyNames, difficulty); }
std::string_view ToString(AttackType type) { return NameOf(kAttackNames, type); }
std::string_view ToString(ClueChannel channel) { return NameOf(kChannelNames, channel); }
std::string_view ToString(PackKind kind) { return NameOf(kPackNames, kind); }

std::optional<QuestionKind> ParseQuestionKind(std::string_view text) {
  return Lookup(kKindNames, text);
}
std::optional<Difficulty> ParseDifficulty(std::string_view text) {
  return Lookup(kDifficultyNames, text);
}
std::optional<AttackType> ParseAttackType(std::string_view text) {
  return Lookup(kAttackNames, text);
}
std::optional<ClueChannel> ParseClueChannel(std::string_view text) {
  return Lookup(kChannelNames, text);
}
std::optional<PackKind> ParsePackKind(std::string_view text) { return Lookup(kPackNames, text); }

}  // namespace arcade::content
