#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace arcade::keyhunter {

enum class CipherId { kPigpen, kCaesar, kTransposition, kAtbash, kZigzag, kPolybius };

inline constexpr std::array<CipherId, 6> kAllCiphers = {
    CipherId::kPigpen, CipherId::kCaesar, CipherId::kTransposition,
    CipherId::kAtbash, CipherId::kZigzag, CipherId::kPolybius};

// `param` is the caesar shift (1-25), transposition width (2-5) or zigzag
// rail count (2-4), and absent for the other ciphers.
struct CipherSpec {
  CipherId id = CipherId::kCaesar;
  std::optional<int> param;

  static CipherSpec Caesar(int shift) { return {CipherId::kCaesar, shift}; }
  static CipherSpec Transposition(int width) { return {CipherId::kTransposition, width}; }
  static CipherSpec Zigzag(int rails) { return {CipherId::kZigzag, rails}; }
  static CipherSpec Atbash() { return {CipherId::kAtbash, std::nullopt}; }
  static CipherSpec Polybius() { return {CipherId::kPolybius, std::nullopt}; }
  static CipherSpec Pigpen() { return {CipherId::kPigpen, std::nullopt}; }

  bool operator==(const CipherSpec&) const = default;
};

// Throws kInvalidCipherParams when params are missing, present for a
// parameterless cipher, or out of range.
void CheckSpec(const CipherSpec& spec);

// Plaintext alphabet is A-Z plus space; spaces survive every cipher in place.
// Polybius merges J into I, so J does not round-trip.
std::string Encode(const CipherSpec& spec, std::string_view plaintext);
std::string Decode(const CipherSpec& spec, std::string_view ciphertext);

std::string_view ToString(CipherId id);
std::optional<CipherId> ParseCipherId(std::string_view text);

}  // namespace arcade::keyhunter
