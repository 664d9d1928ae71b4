#include "arcade/keyhunter/cipher.hpp"

#include <vector>

#include "arcade/error.hpp"

namespace arcade::keyhunter {
namespace {

constexpr std::string_view kPolybiusSquare = "ABCDEFGHIKLMNOPQRSTUVWXYZ";

void CheckPlaintext(std::string_view text) {
  if (text.empty()) throw Error(Errc::kInvalidAlphabet, "plaintext is empty");
  for (char c : text) {
    if (c != ' ' && (c < 'A' || c > 'Z')) {
      throw Error(Errc::kInvalidAlphabet,
                  std::string("character '") + c + "' is outside A-Z and space");
    }
  }
}

char Shift(char c, int shift) { return static_cast<char>('A' + (c - 'A' + shift + 26) % 26); }

std::string Substitute(std::string_view text, int shift) {
  std::string out(text);
  for (char& c : out) {
    if (c != ' ') c = Shift(c, shift);
  }
  return out;
}

std::string Atbash(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c != ' ') c = static_cast<char>('Z' - (c - 'A'));
  }
  return out;
}

std::string Letters(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

// Writes `letters` back into the non-space slots of `layout`.
std::string Refill(std::string_view layout, std::string_view letters) {
  std::string out(layout);
  std::size_t next = 0;
  for (char& c : out) {
    if (c != ' ') c = letters[next++];
  }
  return out;
}

// Position in the letter stream that lands at each output slot.
std::vector<std::size_t> ColumnarOrder(std::size_t n, std::size_t width) {
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t col = 0; col < width; ++col) {
    for (std::size_t i = col; i < n; i += width) order.push_back(i);
  }
  return order;
}

std::vector<std::size_t> RailOrder(std::size_t n, std::size_t rails) {
  std::vector<std::size_t> rail_of(n);
  std::size_t rail = 0;
  int step = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rail_of[i] = rail;
    if (rails > 1) {
      if (rail == 0) step = 1;
      if (rail == rails - 1) step = -1;
      rail = static_cast<std::size_t>(static_cast<int>(rail) + step);
    }
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t r = 0; r < rails; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rail_of[i] == r) order.push_back(i);
    }
  }
  return order;
}

std::string Permute(std::string_view text, const std::vector<std::size_t>& order) {
  const std::string letters = Letters(text);
  std::string moved(letters.size(), ' ');
  for (std::size_t slot = 0; slot < order.size(); ++slot) moved[slot] = letters[order[slot]];
  return Refill(text, moved);
}

std::string Unpermute(std::string_view text, const std::vector<std::size_t>& order) {
  const std::string letters = Letters(text);
  std::string restored(letters.size(), ' ');
  for (std::size_t slot = 0; slot < order.size(); ++slot) restored[order[slot]] = letters[slot];
  return Refill(text, restored);
}

// Token ciphers map each letter to one token and each space to an empty token,
// joined by single spaces: "HELP" -> "23 15 31 35", "A B" -> "11  12".
template <typename TokenFn>
std::string EncodeTokens(std::string_view text, TokenFn token_of) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0) out.push_back(' ');
    if (text[i] != ' ') out += token_of(text[i]);
  }
  return out;
}

template <typename LetterFn>
std::string DecodeTokens(std::string_view text, LetterFn letter_of) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(' ', start);
    const std::string_view token =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(token.empty() ? ' ' : letter_of(token));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string PolybiusToken(char c) {
  if (c == 'J') c = 'I';
  const std::size_t index = kPolybiusSquare.find(c);
  return {static_cast<char>('1' + index / 5), static_cast<char>('1' + index % 5)};
}

char PolybiusLetter(std::string_view token) {
  std::size_t digits = 0;
  for (char c : token) digits += (c >= '0' && c <= '9') ? 1 : 0;
  if (digits != token.size()) {
    throw Error(Errc::kInvalidCiphertext, "polybius token \"" + std::string(token) +
                                              "\" is not made of digits");
  }
  if (token.size() % 2 != 0) {
    throw Error(Errc::kInvalidCiphertext, "odd digit count in polybius token \"" +
                                              std::string(token) + "\"");
  }
  if (token.size() != 2 || token[0] < '1' || token[0] > '5' || token[1] < '1' || token[1] > '5') {
    throw Error(Errc::kInvalidCiphertext, "polybius token \"" + std::string(token) +
                                              "\" is not a row-column pair 11-55");
  }
  return kPolybiusSquare[(token[0] - '1') * 5 + (token[1] - '1')];
}

std::string PigpenToken(char c) {
  const int ordinal = c - 'A';
  return {'P', 'G', static_cast<char>('0' + ordinal / 10), static_cast<char>('0' + ordinal % 10)};
}

char PigpenLetter(std::string_view token) {
  if (token.size() == 4 && token.substr(0, 2) == "PG" && token[2] >= '0' && token[2] <= '9' &&
      token[3] >= '0' && token[3] <= '9') {
    const int ordinal = (token[2] - '0') * 10 + (token[3] - '0');
    if (ordinal < 26) return static_cast<char>('A' + ordinal);
  }
  throw Error(Errc::kInvalidCiphertext, "unknown pigpen glyph \"" + std::string(token) + "\"");
}

void CheckSubstitutionText(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && (c < 'A' || c > 'Z')) {
      throw Error(Errc::kInvalidCiphertext,
                  std::string("character '") + c + "' cannot appear in this ciphertext");
    }
  }
}

}  // namespace

void CheckSpec(const CipherSpec& spec) {
  auto range = [&](int lo, int hi, std::string_view what) {
    if (!spec.param || *spec.param < lo || *spec.param > hi) {
      throw Error(Errc::kInvalidCipherParams, std::string(ToString(spec.id)) + " needs a " +
                                                  std::string(what) + " in " +
                                                  std::to_string(lo) + "-" + std::to_string(hi));
    }
  };
  switch (spec.id) {
    case CipherId::kCaesar: range(1, 25, "shift"); break;
    case CipherId::kTransposition: range(2, 5, "width"); break;
    case CipherId::kZigzag: range(2, 4, "rail count"); break;
    case CipherId::kAtbash:
    case CipherId::kPolybius:
    case CipherId::kPigpen:
      if (spec.param) {
        throw Error(Errc::kInvalidCipherParams,
                    std::string(ToString(spec.id)) + " takes no parameter");
      }
      break;
  }
}

std::string Encode(const CipherSpec& spec, std::string_view plaintext) {
  CheckSpec(spec);
  CheckPlaintext(plaintext);
  switch (spec.id) {
    case CipherId::kCaesar: return Substitute(plaintext, *spec.param);
    case CipherId::kAtbash: return Atbash(plaintext);
    case CipherId::kTransposition: {
      const std::size_t n = Letters(plaintext).size();
      return Permute(plaintext, ColumnarOrder(n, static_cast<std::size_t>(*spec.param)));
    }
    case CipherId::kZigzag: {
      const std::size_t n = Letters(plaintext).size();
      return Permute(plaintext, RailOrder(n, static_cast<std::size_t>(*spec.param)));
    }
    case CipherId::kPolybius: return EncodeTokens(plaintext, PolybiusToken);
    case CipherId::kPigpen: return EncodeTokens(plaintext, PigpenToken);
  }
  return {};
}

std::string Decode(const CipherSpec& spec, std::string_view ciphertext) {
  CheckSpec(spec);
  if (ciphertext.empty()) throw Error(Errc::kInvalidCiphertext, "ciphertext is empty");
  switch (spec.id) {
    case CipherId::kCaesar:
      CheckSubstitutionText(ciphertext);
      return Substitute(ciphertext, -*spec.param);
    case CipherId::kAtbash:
      CheckSubstitutionText(ciphertext);
      return Atbash(ciphertext);
    case CipherId::kTransposition: {
      CheckSubstitutionText(ciphertext);
      const std::size_t n = Letters(ciphertext).size();
      return Unpermute(ciphertext, ColumnarOrder(n, static_cast<std::size_t>(*spec.param)));
    }
    case CipherId::kZigzag: {
      CheckSubstitutionText(ciphertext);
      const std::size_t n = Letters(ciphertext).size();
      return Unpermute(ciphertext, RailOrder(n, static_cast<std::size_t>(*spec.param)));
    }
    case CipherId::kPolybius: return DecodeTokens(ciphertext, PolybiusLetter);
    case CipherId::kPigpen: return DecodeTokens(ciphertext, PigpenLetter);
  }
  return {};
}

std::string_view ToString(CipherId id) {
  switch (id) {
    case CipherId::kPigpen: return "pigpen";
    case CipherId::kCaesar: return "caesar";
    case CipherId::kTransposition: return "transposition";
    case CipherId::kAtbash: return "atbash";
    case CipherId::kZigzag: return "zigzag";
    case CipherId::kPolybius: return "polybius";
  }
  return "?";
}

std::optional<CipherId> ParseCipherId(std::string_view text) {
  for (CipherId id : kAllCiphers) {
    if (ToString(id) == text) return id;
  }
  return std::nullopt;
}

}  // namespace arcade::keyhunter
