#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace arcade::platform {

inline constexpr std::size_t kMinPasswordLength = 8;
inline constexpr std::size_t kMaxPasswordLength = 128;

// Argon2id cost parameters. Interactive() is the production default; Minimal()
// exists so test suites hashing hundreds of passwords stay fast.
struct WorkFactor {
  unsigned long long ops_limit;
  std::size_t mem_limit;

  static WorkFactor Interactive();
  static WorkFactor Minimal();
};

// Salted one-way digest in the self-describing Argon2id string format. Throws
// kPasswordTooShort / kPasswordTooLong outside 8-128 bytes.
std::string HashPassword(std::string_view plaintext, const WorkFactor& work);
bool VerifyPassword(std::string_view plaintext, const std::string& digest);

// Hex string of `bytes` random bytes from the OS CSPRNG.
std::string RandomHex(std::size_t bytes);
std::uint64_t RandomU64();
// Fast keyed-free digest (BLAKE2b-256, hex) for high-entropy secrets such as
// bearer tokens and recovery codes, which need lookup by value.
std::string FastDigest(std::string_view secret);

}  // namespace arcade::platform
