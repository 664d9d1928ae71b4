#include "arcade/keyhunter/session.hpp"

#include <algorithm>
#include <array>

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::keyhunter {
namespace {

constexpr std::array<std::string_view, 5> kRowWords = {"ONE", "TWO", "THREE", "FOUR", "FIVE"};
constexpr std::array<std::string_view, 5> kColumnWords = {"ALPHA", "BRAVO", "CHARLIE", "DELTA",
                                                          "ECHO"};

constexpr std::string_view kOverview =
    "Key Hunter: each round shows a message encrypted with one classical cipher. "
    "Decrypt it to learn which button on the 5x5 grid (columns A-E, rows 1-5) is the key, "
    "then press it. Wrong buttons turn red and cost one of your five attempts. "
    "Solve all three rounds within five minutes; faster solves with fewer mistakes score "
    "higher.";

std::string_view Mechanics(CipherId id) {
  switch (id) {
    case CipherId::kPigpen:
      return "Pigpen: every letter is drawn as a fragment of a tic-tac-toe grid or an X, "
             "with or without a dot. Find each symbol's cell in the key grids to read the "
             "letter.";
    case CipherId::kCaesar:
      return "Caesar: every letter was moved forward the same number of places in the "
             "alphabet, wrapping from Z to A. Try moving letters back one place at a time "
             "until words appear.";
    case CipherId::kTransposition:
      return "Transposition: the letters were written in rows of a fixed width and read "
             "back column by column. Spaces stay where they were. Guess the width, rebuild "
             "the columns, then read across the rows.";
    case CipherId::kAtbash:
      return "Atbash: the alphabet is folded in half, so A swaps with Z, B with Y, C with X "
             "and so on. Applying it twice gives back the original.";
    case CipherId::kZigzag:
      return "Zigzag (rail fence): letters were written diagonally down and up across a "
             "few rails, then each rail was read left to right. Spaces stay in place. Guess "
             "the rail count and redraw the zigzag.";
    case CipherId::kPolybius:
      return "Polybius square: letters sit in a 5x5 square with I and J sharing a cell "
             "(rows ABCDE, FGHIK, LMNOP, QRSTU, VWXYZ). Each letter becomes its row digit "
             "then its column digit; a double gap separates words.";
  }
  return {};
}

std::string_view Description(CipherId id) {
  switch (id) {
    case CipherId::kPigpen:
      return "Pigpen - a substitution cipher that swaps letters for geometric symbols; "
             "used by freemasons in the 1700s.";
    case CipherId::kCaesar:
      return "Caesar - a shift cipher named after Julius Caesar; only 25 possible keys, so "
             "it falls to brute force.";
    case CipherId::kTransposition:
      return "Transposition - keeps the letters but scrambles their order; letter "
             "frequencies match normal text.";
    case CipherId::kAtbash:
      return "Atbash - an ancient mirror-alphabet substitution with no key at all.";
    case CipherId::kZigzag:
      return "Zigzag - the rail fence transposition; the key is the number of rails.";
    case CipherId::kPolybius:
      return "Polybius - a Greek signalling code turning letters into pairs of numbers.";
  }
  return {};
}

std::vector<CipherId> DrawCiphers(content::Difficulty difficulty, Rng& rng) {
  std::vector<CipherId> pool;
  switch (difficulty) {
    case content::Difficulty::kEasy:
      pool = {CipherId::kPigpen, CipherId::kCaesar, CipherId::kTransposition};
      break;
    case content::Difficulty::kMedium:
      pool = {CipherId::kAtbash, CipherId::kZigzag, CipherId::kPolybius};
      break;
    case content::Difficulty::kHard:
      pool.assign(kAllCiphers.begin(), kAllCiphers.end());
      break;
  }
  rng.Shuffle(std::span(pool));
  pool.resize(kRounds);
  return pool;
}

CipherSpec DrawSpec(CipherId id, Rng& rng) {
  switch (id) {
    case CipherId::kCaesar: return CipherSpec::Caesar(static_cast<int>(rng.Uniform(1, 25)));
    case CipherId::kTransposition:
      return CipherSpec::Transposition(static_cast<int>(rng.Uniform(2, 5)));
    case CipherId::kZigzag: return CipherSpec::Zigzag(static_cast<int>(rng.Uniform(2, 4)));
    default: return CipherSpec{id, std::nullopt};
  }
}

std::vector<std::string> Labels(const std::vector<GridCoordinate>& coords) {
  std::vector<std::string> out;
  for (const auto& c : coords) out.push_back(c.Label());
  return out;
}

}  // namespace

std::string CoordinatePlaintext(const GridCoordinate& coord) {
  return "ROW " + std::string(kRowWords[coord.row - 1]) + " COL " +
         std::string(kColumnWords[coord.column - 'A']);
}

KeyHunterSession NewSession(content::Difficulty difficulty, std::uint64_t seed) {
  Rng rng(seed);
  KeyHunterSession session;
  session.difficulty = difficulty;
  session.seed = seed;
  for (CipherId id : DrawCiphers(difficulty, rng)) {
    Round round;
    round.spec = DrawSpec(id, rng);
    round.target.column = static_cast<char>('A' + rng.Uniform(0, kGridSize - 1));
    round.target.row = static_cast<int>(rng.Uniform(1, kGridSize));
    round.plaintext = CoordinatePlaintext(round.target);
    round.ciphertext = Encode(round.spec, round.plaintext);
    session.rounds.push_back(std::move(round));
  }
  return session;
}

void AdvanceClock(KeyHunterSession& session, std::int64_t at_s) {
  if (session.state != State::kPlaying) throw Error(Errc::kSessionOver);
  if (at_s < session.session_clock_s) throw Error(Errc::kTimeWentBackwards);
  session.session_clock_s = at_s;
  if (at_s > kTimeLimitS) session.state = State::kLost;
}

PressResult PressButton(KeyHunterSession& session, const GridCoordinate& coord,
                        std::int64_t at_s) {
  if (session.state != State::kPlaying) throw Error(Errc::kSessionOver);
  if (!coord.InGrid()) throw Error(Errc::kOutOfGrid, "coordinate outside the 5x5 grid");
  AdvanceClock(session, at_s);

  PressResult result;
  if (session.state == State::kLost) {
    result.timed_out = true;
  } else {
    Round& round = session.rounds[session.current];
    round.round_elapsed_s = at_s - session.round_started_s;
    if (coord == round.target) {
      round.solved = true;
      round.score = std::max<int>(
          100, static_cast<int>(1000 - 3 * round.round_elapsed_s - 150 * round.wrong_presses));
      result.hit = true;
      result.round_score = round.score;
      result.revealed_plaintext = round.plaintext;
      ++session.current;
      session.round_started_s = at_s;
      if (session.current == session.rounds.size()) session.state = State::kWon;
    } else {
      ++round.wrong_presses;
      round.red.push_back(coord);
      if (--session.attempts_left == 0) session.state = State::kLost;
    }
  }
  result.attempts_left = session.attempts_left;
  result.state = session.state;
  return result;
}

std::string TabContent(const KeyHunterSession& session, Tab tab) {
  switch (tab) {
    case Tab::kQuestion: return std::string(kOverview);
    case Tab::kNotes: return session.notes;
    case Tab::kDictionary: {
      const std::size_t index = std::min(session.current, session.rounds.size() - 1);
      return std::string(Mechanics(session.rounds[index].spec.id));
    }
    case Tab::kMessage: {
      std::string out;
      for (CipherId id : kAllCiphers) {
        if (!out.empty()) out += "\n";
        out += Description(id);
      }
      return out;
    }
  }
  return {};
}

void SetNotes(KeyHunterSession& session, std::string text) {
  if (session.state != State::kPlaying) throw Error(Errc::kSessionOver);
  std::size_t code_points = 0;
  for (unsigned char c : text) code_points += (c & 0xC0) != 0x80 ? 1 : 0;
  if (code_points > kMaxNotesChars) {
    throw Error(Errc::kTextTooLong, "notes are limited to 10000 characters");
  }
  session.notes = std::move(text);
}

int SessionScore(const KeyHunterSession& session) {
  int total = 0;
  for (const auto& round : session.rounds) total += round.solved ? round.score : 0;
  return total;
}

std::string_view ToString(State state) {
  switch (state) {
    case State::kPlaying: return "playing";
    case State::kWon: return "won";
    case State::kLost: return "lost";
  }
  return "?";
}

std::string_view ToString(Tab tab) {
  switch (tab) {
    case Tab::kDictionary: return "dictionary";
    case Tab::kMessage: return "message";
    case Tab::kNotes: return "notes";
    case Tab::kQuestion: return "question";
  }
  return "?";
}

std::optional<Tab> ParseTab(std::string_view text) {
  for (Tab tab : {Tab::kDictionary, Tab::kMessage, Tab::kNotes, Tab::kQuestion}) {
    if (ToString(tab) == text) return tab;
  }
  return std::nullopt;
}

nlohmann::json View(const KeyHunterSession& session) {
  nlohmann::json solved = nlohmann::json::array();
  for (const auto& round : session.rounds) {
    if (!round.solved) continue;
    solved.push_back({{"cipher", ToString(round.spec.id)},
                      {"plaintext", round.plaintext},
                      {"coordinate", round.target.Label()},
                      {"score", round.score}});
  }
  nlohmann::json view{{"difficulty", content::ToString(session.difficulty)},
                      {"state", ToString(session.state)},
                      {"round", session.current},
                      {"rounds", session.rounds.size()},
                      {"attempts_left", session.attempts_left},
                      {"clock_s", session.session_clock_s},
                      {"time_limit_s", kTimeLimitS},
                      {"score", SessionScore(session)},
                      {"solved_rounds", solved}};
  if (session.state == State::kPlaying) {
    const Round& round = session.rounds[session.current];
    view["cipher"] = ToString(round.spec.id);
    view["ciphertext"] = round.ciphertext;
    view["red"] = Labels(round.red);
  }
  return view;
}

nlohmann::json ToJson(const PressResult& result) {
  nlohmann::json out{{"hit", result.hit},
                     {"round_score", result.round_score},
                     {"attempts_left", result.attempts_left},
                     {"state", ToString(result.state)},
                     {"timed_out", result.timed_out}};
  if (result.revealed_plaintext) out["revealed_plaintext"] = *result.revealed_plaintext;
  return out;
}

nlohmann::json Snapshot(const KeyHunterSession& session) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& round : session.rounds) {
    rounds.push_back({{"cipher", ToString(round.spec.id)},
                      {"param", round.spec.param ? nlohmann::json(*round.spec.param) : nullptr},
                      {"target", round.target.Label()},
                      {"plaintext", round.plaintext},
                      {"ciphertext", round.ciphertext},
                      {"solved", round.solved},
                      {"wrong_presses", round.wrong_presses},
                      {"round_elapsed_s", round.round_elapsed_s},
                      {"score", round.score},
                      {"red", Labels(round.red)}});
  }
  return {{"difficulty", content::ToString(session.difficulty)},
          {"seed", session.seed},
          {"rounds", rounds},
          {"current", session.current},
          {"attempts_left", session.attempts_left},
          {"session_clock_s", session.session_clock_s},
          {"round_started_s", session.round_started_s},
          {"state", ToString(session.state)},
          {"notes", session.notes},
          {"score", SessionScore(session)}};
}

}  // namespace arcade::keyhunter
