#include <gtest/gtest.h>

#include "arcade/error.hpp"
#include "arcade/platform/game_runner.hpp"
#include "fixtures.hpp"

namespace {

using namespace arcade;
using namespace arcade::platform;
using nlohmann::json;

const ContentSet& Content() {
  static const ContentSet content = fixtures::SyntheticContent();
  return content;
}

Errc CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kBadRequest;
}

TEST(Stamp, OverwritesClientTiming) {
  GameRunner trivia(Game::kTrivia, fixtures::StartRecord(Game::kTrivia), 1, Content());
  const json a = trivia.Stamp({{"action", "answer"}, {"payload", {{"selected", {0}}, {"elapsed_ms", 1}}}},
                              90000, 4200);
  EXPECT_EQ(a["payload"]["elapsed_ms"], 4200);

  GameRunner kh(Game::kKeyHunter, fixtures::StartRecord(Game::kKeyHunter), 1, Content());
  const json p = kh.Stamp({{"action", "press"}, {"payload", {{"at_s", 0}}}}, 61999, 5);
  EXPECT_EQ(p["payload"]["at_s"], 61);

  GameRunner ph(Game::kPhishing, fixtures::StartRecord(Game::kPhishing), 1, Content());
  const json c = ph.Stamp({{"action", "classify"}}, 1234, 5);
  EXPECT_EQ(c["payload"]["at_ms"], 1234);

  EXPECT_TRUE(GameRunner::ResetsPrompt(a));
  EXPECT_FALSE(GameRunner::ResetsPrompt(p));
}

TEST(Apply, RejectsMalformedActions) {
  GameRunner runner(Game::kPhishing, fixtures::StartRecord(Game::kPhishing), 1, Content());
  EXPECT_EQ(CodeOf([&] { runner.Apply(json::array()); }), Errc::kBadRequest);
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "dance"}}); }), Errc::kUnknownAction);
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "classify"}, {"payload", {{"verdict", "spam"}, {"at_ms", 1}}}}); }),
            Errc::kBadRequest);
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "classify"}, {"payload", {{"verdict", "phishing"}}}}); }),
            Errc::kBadRequest);
}

TEST(Start, RejectsBadStartRecords) {
  EXPECT_EQ(CodeOf([] { GameRunner(Game::kKeyHunter, {{"difficulty", "extreme"}}, 1, Content()); }),
            Errc::kBadRequest);
  EXPECT_EQ(CodeOf([] { GameRunner(Game::kTrivia, {{"mode", "ranked"}, {"rank", 11}}, 1, Content()); }),
            Errc::kInvalidConfig);
  EXPECT_EQ(CodeOf([] {
              GameRunner(Game::kDataDefenders, {{"context", {{"day", 1}, {"reputation", 50}, {"money", 0}, {"upgrades", {0}}}}},
                         1, Content());
            }),
            Errc::kBadRequest);
  ContentSet empty;
  EXPECT_EQ(CodeOf([&] { GameRunner(Game::kPhishing, fixtures::StartRecord(Game::kPhishing), 1, empty); }),
            Errc::kInvalidConfig);
}

TEST(Trivia, AnswerFlow) {
  GameRunner runner(Game::kTrivia, {{"mode", "practice-rank"}, {"rank", 2}, {"count", 5}}, 9, Content());
  for (int i = 0; i < 5; ++i) {
    ASSERT_FALSE(runner.Terminal());
    const json view = runner.View();
    EXPECT_EQ(view["answered"], i);
    const json result = runner.Apply(runner.Stamp({{"action", "answer"}, {"payload", {{"selected", {0}}}}}, 0, 1000));
    EXPECT_TRUE(result.contains("was_correct"));
    EXPECT_TRUE(result.contains("answer_key"));
  }
  EXPECT_TRUE(runner.Terminal());
  EXPECT_FALSE(runner.NewTriviaRank());
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "answer"}, {"payload", {{"selected", {0}}, {"elapsed_ms", 1}}}}); }),
            Errc::kSessionFinished);
}

TEST(KeyHunter, TabsAndNotes) {
  GameRunner runner(Game::kKeyHunter, fixtures::StartRecord(Game::kKeyHunter), 3, Content());
  const json tab = runner.Apply({{"action", "tab"}, {"payload", {{"tab", "message"}}}});
  EXPECT_EQ(tab["tab"], "message");
  EXPECT_FALSE(tab["text"].get<std::string>().empty());
  const json notes = runner.Apply({{"action", "notes"}, {"payload", {{"text", "abc"}}}});
  EXPECT_EQ(notes["notes"], "abc");
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "press"}, {"payload", {{"column", "AB"}, {"row", 1}, {"at_s", 1}}}}); }),
            Errc::kBadRequest);
}

TEST(KeyHunter, ClockEndsSession) {
  GameRunner runner(Game::kKeyHunter, fixtures::StartRecord(Game::kKeyHunter), 3, Content());
  runner.Apply(runner.Stamp({{"action", "clock"}}, 301000, 0));
  EXPECT_TRUE(runner.Terminal());
  EXPECT_EQ(runner.Outcome()["state"], "lost");
}

TEST(Phishing, ClockEndsSession) {
  GameRunner runner(Game::kPhishing, fixtures::StartRecord(Game::kPhishing), 3, Content());
  EXPECT_EQ(CodeOf([&] { runner.Outcome(); }), Errc::kSessionNotTerminal);
  runner.Apply(runner.Stamp({{"action", "clock"}}, 60000, 0));
  EXPECT_TRUE(runner.Terminal());
  EXPECT_EQ(runner.Score(), 0);
}

TEST(DataDefenders, DayFlow) {
  GameRunner runner(Game::kDataDefenders, fixtures::StartRecord(Game::kDataDefenders), 5, Content());
  runner.Apply({{"action", "start_day"}});
  EXPECT_FALSE(runner.Terminal());
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "tick"}, {"payload", {{"count", 121}}}}); }),
            Errc::kBadRequest);
  EXPECT_EQ(runner.View()["tick"], 0);
  runner.Apply({{"action", "tick"}, {"payload", {{"count", 120}}}});
  EXPECT_EQ(CodeOf([&] { runner.Apply({{"action", "tick"}}); }), Errc::kDayOver);
  const json summary = runner.Apply({{"action", "end_day"}});
  EXPECT_EQ(summary["money_earned"], 160);
  EXPECT_TRUE(runner.Terminal());
  EXPECT_EQ(runner.Score(), 1);
  EXPECT_EQ(runner.Progress()->day, 2);
  EXPECT_EQ(runner.Outcome()["days_completed"], 1);
}

TEST(DataDefenders, ReportIsStampedWithCurrentTick) {
  GameRunner runner(Game::kDataDefenders, fixtures::StartRecord(Game::kDataDefenders), 5, Content());
  runner.Apply({{"action", "start_day"}});
  runner.Apply({{"action", "tick"}, {"payload", {{"count", 37}}}});
  const json stamped = runner.Stamp({{"action", "report"}, {"payload", {{"at_tick", 1}}}}, 0, 0);
  EXPECT_EQ(stamped["payload"]["at_tick"], 37);
}

class RandomPlay : public ::testing::TestWithParam<Game> {};

TEST_P(RandomPlay, ReplayReachesTheSameState) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto played = fixtures::PlayRandom(GetParam(), seed, Content());
    const GameRunner replayed = ReplayTranscript(played.transcript, Content());
    ASSERT_EQ(replayed.Snapshot().dump(), played.snapshot.dump()) << "seed " << seed;
    for (const auto& response : played.responses) {
      ASSERT_TRUE(fixtures::FindKeys(response, fixtures::kHiddenTruthKeys).empty())
          << response.dump();
    }
  }
}

TEST_P(RandomPlay, ReplayThroughJsonText) {
  const auto played = fixtures::PlayRandom(GetParam(), 99, Content());
  const json reparsed = json::parse(played.transcript.dump(2));
  EXPECT_EQ(ReplayTranscript(reparsed, Content()).Snapshot(), played.snapshot);
}

INSTANTIATE_TEST_SUITE_P(AllGames, RandomPlay,
                         ::testing::Values(Game::kTrivia, Game::kKeyHunter, Game::kPhishing,
                                           Game::kDataDefenders),
                         [](const auto& info) { return std::string(ToString(info.param)); });

TEST(Replay, UnknownGame) {
  EXPECT_EQ(CodeOf([] { ReplayTranscript({{"game", "chess"}, {"start", {}}, {"seed", 1}, {"actions", json::array()}}, Content()); }),
            Errc::kUnknownGame);
}

}  // namespace
