#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "arcade/content/pack.hpp"
#include "arcade/error.hpp"
#include "fixtures.hpp"
#include "json.hpp"

namespace {

using namespace arcade;
using namespace arcade::content;
using nlohmann::json;

Errc ParseError(const std::string& raw, PackKind kind, std::string* message = nullptr) {
  try {
    ParsePack(raw, kind);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error";
  return Errc::kBadRequest;
}

json QuestionJson(const std::string& id) {
  return {{"id", id},       {"rank", 1},           {"topic", "t"},
          {"kind", "single-choice"},                {"prompt", "p"},
          {"choices", {"a", "b"}},                  {"correct", {0}},
          {"explanation", "e"}};
}

TEST(ParsePack, ReadsEveryItemOfALargeFile) {
  json items = json::array();
  for (int i = 0; i < 250; ++i) items.push_back(QuestionJson("q" + std::to_string(i)));
  const std::string raw = json{{"kind", "questions"}, {"version", 3}, {"items", items}}.dump();

  const ContentPack pack = ParsePack(raw, PackKind::kQuestions);
  // Independent count: occurrences of the id key in the raw text.
  std::size_t ids = 0;
  for (std::size_t pos = raw.find("\"id\""); pos != std::string::npos; pos = raw.find("\"id\"", pos + 1)) {
    ++ids;
  }
  EXPECT_EQ(pack.questions.size(), ids);
  EXPECT_EQ(pack.questions.size(), 250u);
  EXPECT_EQ(pack.version, 3);
  EXPECT_EQ(pack.questions[0].time_limit_ms, 20000);
}

TEST(ParsePack, EmptyItemListParsesButFailsValidation) {
  const ContentPack pack = ParsePack(R"({"kind":"questions","version":1,"items":[]})",
                                     PackKind::kQuestions);
  EXPECT_EQ(pack.size(), 0u);
  EXPECT_FALSE(ValidatePack(pack).accepted());
  for (const char* kind : {"emails", "scenarios"}) {
    const auto parsed = ParsePackKind(kind);
    const ContentPack empty =
        ParsePack(std::string(R"({"kind":")") + kind + R"(","version":1,"items":[]})", *parsed);
    const auto report = ValidatePack(empty);
    ASSERT_FALSE(report.accepted());
    EXPECT_EQ(report.violations[0], "pack has no items");
  }
}

TEST(ParsePack, MissingPromptNamesTheItem) {
  json q = QuestionJson("q-missing");
  q.erase("prompt");
  std::string message;
  const std::string raw = json{{"kind", "questions"}, {"version", 1}, {"items", {q}}}.dump();
  EXPECT_EQ(ParseError(raw, PackKind::kQuestions, &message), Errc::kMalformedSyntax);
  EXPECT_NE(message.find("q-missing"), std::string::npos) << message;
  EXPECT_NE(message.find("prompt"), std::string::npos) << message;
}

TEST(ParsePack, RejectsUnknownFields) {
  json q = QuestionJson("q1");
  q["difficulty"] = "hard";
  const std::string raw = json{{"kind", "questions"}, {"version", 1}, {"items", {q}}}.dump();
  EXPECT_EQ(ParseError(raw, PackKind::kQuestions), Errc::kUnknownField);
  EXPECT_EQ(ParseError(R"({"kind":"questions","version":1,"items":[],"extra":1})",
                       PackKind::kQuestions),
            Errc::kUnknownField);
}

TEST(ParsePack, ReportsSyntaxErrorPosition) {
  std::string message;
  EXPECT_EQ(ParseError(R"({"kind": "questions", "version": 1, "items": [)", PackKind::kQuestions,
                       &message),
            Errc::kMalformedSyntax);
  EXPECT_NE(message.find("byte"), std::string::npos) << message;
}

TEST(ParsePack, KindMismatch) {
  EXPECT_EQ(ParseError(R"({"kind":"emails","version":1,"items":[]})", PackKind::kQuestions),
            Errc::kKindMismatch);
}

TEST(ParsePack, WrongFieldTypeIsMalformed) {
  json q = QuestionJson("q1");
  q["rank"] = "one";
  const std::string raw = json{{"kind", "questions"}, {"version", 1}, {"items", {q}}}.dump();
  EXPECT_EQ(ParseError(raw, PackKind::kQuestions), Errc::kMalformedSyntax);
}

TEST(ValidatePack, EmptyCorrectSet) {
  ContentPack pack = fixtures::QuestionBank();
  pack.questions[0].correct.clear();
  const auto report = ValidatePack(pack);
  ASSERT_FALSE(report.accepted());
  EXPECT_EQ(report.violations[0], "question " + pack.questions[0].id + ": empty correct set");
}

TEST(ValidatePack, ShortRank) {
  ContentPack pack = fixtures::QuestionBank();
  std::erase_if(pack.questions, [](const Question& q) { return q.rank == 3; });
  for (int i = 0; i < 10; ++i) {
    pack.questions.push_back(fixtures::MakeQuestion("extra" + std::to_string(i), 3, "t",
                                                    QuestionKind::kSingleChoice, 3, {1}));
  }
  const auto report = ValidatePack(pack);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], "rank 3 has 10 < 25 questions");
}

TEST(ValidatePack, QuestionShapeRules) {
  using K = QuestionKind;
  const std::vector<Question> bad = {
      fixtures::MakeQuestion("tf3", 1, "t", K::kTrueFalse, 3, {0}),
      fixtures::MakeQuestion("tf2", 1, "t", K::kTrueFalse, 2, {0, 1}),
      fixtures::MakeQuestion("sc2", 1, "t", K::kSingleChoice, 4, {0, 1}),
      fixtures::MakeQuestion("mc1", 1, "t", K::kMultiCorrect, 4, {2}),
      fixtures::MakeQuestion("range", 1, "t", K::kSingleChoice, 4, {4}),
      fixtures::MakeQuestion("seven", 1, "t", K::kSingleChoice, 7, {0}),
      fixtures::MakeQuestion("one", 1, "t", K::kSingleChoice, 1, {0}),
      fixtures::MakeQuestion("dup", 1, "t", K::kMultiCorrect, 4, {1, 1}),
  };
  for (const Question& q : bad) {
    ContentPack pack = fixtures::QuestionBank();
    pack.questions.push_back(q);
    EXPECT_FALSE(ValidatePack(pack).accepted()) << q.id;
  }
  ContentPack pack = fixtures::QuestionBank();
  pack.questions[0].rank = 11;
  EXPECT_FALSE(ValidatePack(pack).accepted());
  pack = fixtures::QuestionBank();
  pack.questions[0].time_limit_ms = 0;
  EXPECT_FALSE(ValidatePack(pack).accepted());
}

TEST(ValidatePack, DuplicateIds) {
  ContentPack pack = fixtures::EmailCorpus();
  pack.emails[1].id = pack.emails[0].id;
  EXPECT_FALSE(ValidatePack(pack).accepted());
}

TEST(ValidatePack, ValidEmailCorpusHasEmptyReport) {
  EXPECT_TRUE(ValidatePack(fixtures::EmailCorpus()).violations.empty());
}

TEST(ValidatePack, EmailNeedsExplanationAndSender) {
  ContentPack pack = fixtures::EmailCorpus();
  pack.emails[0].explanation.clear();
  pack.emails[1].sender.clear();
  const auto report = ValidatePack(pack);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0], "email " + pack.emails[0].id + ": empty explanation");
  EXPECT_EQ(report.violations[1], "email " + pack.emails[1].id + ": empty sender");
}

TEST(ValidatePack, ScenarioRules) {
  EXPECT_TRUE(ValidatePack(fixtures::ScenarioPack()).accepted());

  ContentPack missing = fixtures::ScenarioPack();
  missing.scenarios[0].clue_texts.erase(ClueChannel::kServers);  // DoS
  EXPECT_FALSE(ValidatePack(missing).accepted());

  ContentPack few = fixtures::ScenarioPack();
  few.scenarios[1].report_questions.resize(3);
  EXPECT_FALSE(ValidatePack(few).accepted());

  ContentPack choices = fixtures::ScenarioPack();
  choices.scenarios[2].report_questions[0].choices = {"only"};
  EXPECT_FALSE(ValidatePack(choices).accepted());

  ContentPack correct = fixtures::ScenarioPack();
  correct.scenarios[2].report_questions[0].correct = 4;
  EXPECT_FALSE(ValidatePack(correct).accepted());

  ContentPack uncovered = fixtures::ScenarioPack();
  uncovered.scenarios.pop_back();
  EXPECT_FALSE(ValidatePack(uncovered).accepted());
}

TEST(ValidatePack, IsPure) {
  ContentPack pack = fixtures::QuestionBank(20);
  const auto first = ValidatePack(pack);
  const auto second = ValidatePack(pack);
  EXPECT_EQ(first.violations, second.violations);
  EXPECT_FALSE(first.accepted());
}

TEST(RoundTrip, ParseSerializeParseIsIdentity) {
  for (const ContentPack& pack :
       {fixtures::QuestionBank(), fixtures::EmailCorpus(), fixtures::ScenarioPack()}) {
    const ContentPack again = ParsePack(SerializePack(pack), pack.kind);
    EXPECT_EQ(again, pack);
    EXPECT_EQ(SerializePack(again), SerializePack(pack));
  }
}

TEST(RoundTrip, RandomAcceptedQuestionPacks) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ContentPack pack = fixtures::QuestionBank(25 + static_cast<int>(rng() % 5));
    for (auto& q : pack.questions) {
      q.time_limit_ms = 1000 + static_cast<std::int64_t>(rng() % 60000);
      q.prompt += " \"quoted\" é \\ " + std::to_string(rng() % 1000);
    }
    ASSERT_TRUE(ValidatePack(pack).accepted());
    EXPECT_EQ(ParsePack(SerializePack(pack), PackKind::kQuestions), pack);
  }
}

TEST(ShippedContent, AllPacksAccepted) {
  for (auto [file, kind] : {std::pair{"questions.json", PackKind::kQuestions},
                            std::pair{"emails.json", PackKind::kEmails},
                            std::pair{"scenarios.json", PackKind::kScenarios}}) {
    const ContentPack pack = LoadPackFile(fixtures::RepoContentDir() + "/" + file, kind);
    const auto report = ValidatePack(pack);
    EXPECT_TRUE(report.accepted()) << file << ": " << (report.violations.empty() ? "" : report.violations[0]);
    EXPECT_EQ(ParsePack(SerializePack(pack), kind), pack);
  }
}

TEST(ShippedContent, EveryRankCanFillARankedSession) {
  const ContentPack pack =
      LoadPackFile(fixtures::RepoContentDir() + "/questions.json", PackKind::kQuestions);
  for (int rank = kMinRank; rank <= kMaxRank; ++rank) {
    std::set<std::string> ids;
    for (const auto& q : pack.questions) {
      if (q.rank == rank) ids.insert(q.id);
    }
    EXPECT_GE(ids.size(), 25u) << "rank " << rank;
  }
}

TEST(ShippedContent, ClueTextsNeverNameTheAttack) {
  const ContentPack pack =
      LoadPackFile(fixtures::RepoContentDir() + "/scenarios.json", PackKind::kScenarios);
  for (const auto& t : pack.scenarios) {
    for (const auto& [channel, texts] : t.clue_texts) {
      for (const auto& text : texts) {
        for (AttackType type : kAllAttackTypes) {
          EXPECT_EQ(text.find(std::string(ToString(type))), std::string::npos) << t.id << ": " << text;
        }
      }
    }
  }
}

TEST(LoadPackFile, MissingFileIsMalformed) {
  try {
    LoadPackFile("/nonexistent/questions.json", PackKind::kQuestions);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMalformedSyntax);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/questions.json"), std::string::npos);
  }
}

}  // namespace
