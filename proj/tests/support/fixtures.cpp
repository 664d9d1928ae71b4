#include "fixtures.hpp"

#include <random>

#include "arcade/error.hpp"
#include "arcade/keyhunter/cipher.hpp"
#include "arcade/keyhunter/session.hpp"
#include "arcade/platform/service.hpp"

namespace fixtures {

using namespace arcade::content;

Question MakeQuestion(const std::string& id, int rank, const std::string& topic, QuestionKind kind,
                      int choices, std::vector<int> correct) {
  Question q;
  q.id = id;
  q.rank = rank;
  q.topic = topic;
  q.kind = kind;
  q.prompt = "Prompt for " + id;
  for (int i = 0; i < choices; ++i) q.choices.push_back(id + " choice " + std::to_string(i));
  q.correct = std::move(correct);
  q.explanation = "Explanation for " + id;
  return q;
}

ContentPack QuestionBank(int per_rank, std::vector<std::string> topics) {
  ContentPack pack;
  pack.kind = PackKind::kQuestions;
  int n = 0;
  for (int rank = kMinRank; rank <= kMaxRank; ++rank) {
    for (int i = 0; i < per_rank; ++i, ++n) {
      const std::string id = "r" + std::to_string(rank) + "-" + std::to_string(i);
      const std::string& topic = topics[n % topics.size()];
      switch (n % 3) {
        case 0:
          pack.questions.push_back(MakeQuestion(id, rank, topic, QuestionKind::kSingleChoice, 4, {n % 4}));
          break;
        case 1:
          pack.questions.push_back(MakeQuestion(id, rank, topic, QuestionKind::kTrueFalse, 2, {n % 2}));
          break;
        default:
          pack.questions.push_back(MakeQuestion(id, rank, topic, QuestionKind::kMultiCorrect, 5, {0, 3}));
          break;
      }
    }
  }
  return pack;
}

ContentPack EmailCorpus(int per_tier) {
  ContentPack pack;
  pack.kind = PackKind::kEmails;
  for (Difficulty tier : {Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard}) {
    for (int i = 0; i < per_tier; ++i) {
      EmailItem e;
      e.id = std::string(ToString(tier)) + "-" + std::to_string(i);
      e.is_phishing = i % 2 == 0;
      e.sender = e.is_phishing ? "alerts@examp1e-bank.test" : "colleague@example.test";
      e.subject = "Subject " + e.id;
      e.body = "Body of " + e.id;
      e.explanation = (e.is_phishing ? "Lookalike domain in " : "Known colleague in ") + e.id;
      e.difficulty = tier;
      pack.emails.push_back(std::move(e));
    }
  }
  return pack;
}

ContentPack ScenarioPack() {
  ContentPack pack;
  pack.kind = PackKind::kScenarios;
  const std::map<ClueChannel, std::string> sample = {
      {ClueChannel::kWebsites, "Observation on {site} ({url})"},
      {ClueChannel::kServers, "Observation on {server} at {ip}"},
      {ClueChannel::kSecCams, "Camera feed near {server}"},
      {ClueChannel::kMessages, "Please help."},
  };
  for (AttackType type : kAllAttackTypes) {
    AttackTemplate t;
    t.id = "tmpl-" + std::string(ToString(type));
    t.attack_type = type;
    for (ClueChannel channel : RequiredChannels(type)) t.clue_texts[channel] = {sample.at(channel)};
    const auto& required = RequiredChannels(type);
    if (std::find(required.begin(), required.end(), ClueChannel::kMessages) != required.end()) {
      t.owner_message = "Owner of {site} here.";
    }
    for (int q = 0; q < 5; ++q) {
      t.report_questions.push_back(ReportQuestion{
          "Question " + std::to_string(q), {"first", "second", "third", "fourth"}, q % 4});
    }
    pack.scenarios.push_back(std::move(t));
  }
  return pack;
}

arcade::platform::ContentSet SyntheticContent() {
  arcade::platform::ContentSet set;
  set.questions = std::make_shared<const ContentPack>(QuestionBank());
  set.emails = std::make_shared<const ContentPack>(EmailCorpus());
  set.scenarios = std::make_shared<const ContentPack>(ScenarioPack());
  return set;
}

std::string RepoContentDir() { return ARCADE_CONTENT_DIR; }

arcade::platform::ContentSet RepoContent() {
  return arcade::platform::LoadContentDir(RepoContentDir());
}

namespace {

void Walk(const nlohmann::json& node, const std::string& path,
          const std::vector<std::string>& keys, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      const std::string child = path + "." + key;
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) out.push_back(child);
      Walk(value, child, keys, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      Walk(node[i], path + "[" + std::to_string(i) + "]", keys, out);
    }
  }
}

}  // namespace

std::vector<std::string> FindKeys(const nlohmann::json& doc, const std::vector<std::string>& keys) {
  std::vector<std::string> out;
  Walk(doc, "$", keys, out);
  return out;
}

nlohmann::json StartRecord(arcade::platform::Game game, int variant) {
  using arcade::platform::Game;
  static const char* kDifficulties[] = {"easy", "medium", "hard"};
  switch (game) {
    case Game::kTrivia:
      if (variant % 3 == 1) return {{"mode", "practice-topic"}, {"topic", "networking"}, {"count", 10}};
      if (variant % 3 == 2) return {{"mode", "practice-rank"}, {"rank", 1 + variant % 10}, {"count", 5}};
      return {{"mode", "ranked"}, {"rank", 1 + variant % 10}};
    case Game::kKeyHunter:
    case Game::kPhishing: return {{"difficulty", kDifficulties[variant % 3]}};
    case Game::kDataDefenders:
      return {{"context",
               {{"day", 1 + variant % 9},
                {"reputation", 50},
                {"money", 100 * (variant % 4)},
                {"upgrades", {0, variant % 2, 0, variant % 4}}}}};
  }
  return {};
}

nlohmann::json RandomAction(arcade::platform::Game game, const nlohmann::json& view,
                            arcade::Rng& rng) {
  using arcade::platform::Game;
  using nlohmann::json;
  const auto roll = rng.Uniform(0, 99);
  switch (game) {
    case Game::kTrivia: {
      if (roll < 5) return {{"action", "view"}};
      const int choices =
          view.contains("question") ? static_cast<int>(view["question"]["choices"].size()) : 4;
      json selected = json::array();
      selected.push_back(rng.Uniform(0, choices - 1));
      if (roll < 25) selected.push_back(rng.Uniform(0, choices - 1));
      if (roll > 97) selected.push_back(choices);
      return {{"action", "answer"}, {"payload", {{"selected", selected}}}};
    }
    case Game::kKeyHunter: {
      if (roll < 5) return {{"action", "tab"}, {"payload", {{"tab", "dictionary"}}}};
      if (roll < 8) return {{"action", "notes"}, {"payload", {{"text", "try row " + std::to_string(roll)}}}};
      if (roll < 10) return {{"action", "clock"}};
      const char column = static_cast<char>('A' + rng.Uniform(0, roll > 97 ? 5 : 4));
      return {{"action", "press"},
              {"payload", {{"column", std::string(1, column)}, {"row", rng.Uniform(1, 5)}}}};
    }
    case Game::kPhishing: {
      if (roll < 10) {
        return {{"action", "inbox"},
                {"payload", {{"inbox", roll < 5 ? "left" : "right"}, {"position", rng.Uniform(0, 3)}}}};
      }
      if (roll < 13) return {{"action", "clock"}};
      return {{"action", "classify"},
              {"payload", {{"verdict", rng.Uniform(0, 1) ? "phishing" : "legitimate"}}}};
    }
    case Game::kDataDefenders: {
      static const char* kTabs[] = {"websites", "servers", "seccams", "messages"};
      static const char* kTypes[] = {"DoS", "Malware", "DNS", "Insider", "SQLInjection", "USBDrop"};
      if (!view.value("day_in_progress", false)) {
        if (roll < 20) return {{"action", "upgrade"}, {"payload", {{"server_id", rng.Uniform(1, 4)}}}};
        return {{"action", "start_day"}};
      }
      const int left = view["ticks_per_day"].get<int>() - view["tick"].get<int>();
      if (left == 0) return {{"action", "end_day"}};
      if (view.value("report_available", false) && roll < 30) {
        json answers = json::array();
        for (int i = 0; i < 4; ++i) answers.push_back(rng.Uniform(0, 3));
        return {{"action", "report"},
                {"payload", {{"diagnosis", kTypes[rng.Index(6)]}, {"answers", answers}}}};
      }
      if (roll < 40) return {{"action", "tab"}, {"payload", {{"tab", kTabs[rng.Index(4)]}}}};
      if (roll < 45) return {{"action", "report_form"}};
      return {{"action", "tick"}, {"payload", {{"count", rng.Uniform(1, std::min(left, 15))}}}};
    }
  }
  return {};
}

nlohmann::json CrackKeyHunter(const nlohmann::json& view) {
  using namespace arcade::keyhunter;
  const auto id = ParseCipherId(view.at("cipher").get<std::string>());
  const std::string ciphertext = view.at("ciphertext").get<std::string>();
  std::vector<CipherSpec> specs;
  switch (*id) {
    case CipherId::kCaesar:
      for (int k = 1; k <= 25; ++k) specs.push_back(CipherSpec::Caesar(k));
      break;
    case CipherId::kTransposition:
      for (int k = 2; k <= 5; ++k) specs.push_back(CipherSpec::Transposition(k));
      break;
    case CipherId::kZigzag:
      for (int k = 2; k <= 4; ++k) specs.push_back(CipherSpec::Zigzag(k));
      break;
    default: specs.push_back(CipherSpec{*id, std::nullopt});
  }
  for (char column = 'A'; column <= 'E'; ++column) {
    for (int row = 1; row <= 5; ++row) {
      const std::string plain = CoordinatePlaintext(GridCoordinate{column, row});
      for (const auto& spec : specs) {
        if (Encode(spec, plain) == ciphertext) {
          return {{"column", std::string(1, column)}, {"row", row}};
        }
      }
    }
  }
  return nullptr;
}

nlohmann::json TriviaAnswerKey(const ContentPack& questions, const nlohmann::json& view) {
  const std::string id = view.at("question").at("id").get<std::string>();
  for (const auto& q : questions.questions) {
    if (q.id == id) return q.correct;
  }
  return nlohmann::json::array();
}

std::string PhishingVerdict(const ContentPack& emails, const nlohmann::json& view) {
  const std::string id = view.at("email").at("id").get<std::string>();
  for (const auto& e : emails.emails) {
    if (e.id == id) return e.is_phishing ? "phishing" : "legitimate";
  }
  return "legitimate";
}

PlayedGame PlayRandom(arcade::platform::Game game, std::uint64_t seed,
                      const arcade::platform::ContentSet& content, int max_steps) {
  using arcade::platform::Game;
  using arcade::platform::GameRunner;
  const nlohmann::json start = StartRecord(game, static_cast<int>(seed % 7));
  GameRunner runner(game, start, seed, content);
  arcade::Rng rng(arcade::MixSeed(seed, 77));
  PlayedGame played;
  played.transcript = {{"game", arcade::platform::ToString(game)},
                       {"start", start},
                       {"seed", seed},
                       {"actions", nlohmann::json::array()}};
  std::int64_t since_start = 0;
  std::int64_t since_prompt = 0;
  played.responses.push_back(runner.View());
  for (int step = 0; step < max_steps; ++step) {
    if (runner.Terminal() && !played.transcript["actions"].empty()) break;
    std::int64_t advance = 0;
    switch (game) {
      case Game::kTrivia: advance = rng.Uniform(0, 24000); break;
      case Game::kKeyHunter: advance = rng.Uniform(0, 40000); break;
      case Game::kPhishing: advance = rng.Uniform(0, 6000); break;
      case Game::kDataDefenders: break;
    }
    since_start += advance;
    since_prompt += advance;
    const nlohmann::json action =
        runner.Stamp(RandomAction(game, runner.View(), rng), since_start, since_prompt);
    try {
      played.responses.push_back(runner.Apply(action));
    } catch (const arcade::Error&) {
      continue;
    }
    played.responses.push_back(runner.View());
    played.transcript["actions"].push_back(action);
    if (GameRunner::ResetsPrompt(action)) since_prompt = 0;
  }
  played.snapshot = runner.Snapshot();
  return played;
}

TempDir::TempDir() {
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("arcade-test-" + std::to_string(rd()) + std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace fixtures
