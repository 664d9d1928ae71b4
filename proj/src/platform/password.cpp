#include "arcade/platform/password.hpp"

#include <sodium.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arcade/error.hpp"

namespace arcade::platform {
namespace {

void EnsureSodium() {
  static const int status = sodium_init();
  if (status < 0) throw Error(Errc::kStorage, "libsodium failed to initialise");
}

std::string ToHex(const unsigned char* data, std::size_t size) {
  std::string out(size * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), data, size);
  out.pop_back();
  return out;
}

}  // namespace

WorkFactor WorkFactor::Interactive() {
  return {crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE};
}

WorkFactor WorkFactor::Minimal() {
  return {crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN};
}

std::string HashPassword(std::string_view plaintext, const WorkFactor& work) {
  EnsureSodium();
  if (plaintext.size() < kMinPasswordLength) {
    throw Error(Errc::kPasswordTooShort, "passwords need at least 8 characters");
  }
  if (plaintext.size() > kMaxPasswordLength) {
    throw Error(Errc::kPasswordTooLong, "passwords are limited to 128 characters");
  }
  char digest[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str_alg(digest, plaintext.data(), plaintext.size(), work.ops_limit,
                            work.mem_limit, crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw Error(Errc::kStorage, "password hashing ran out of memory");
  }
  return digest;
}

bool VerifyPassword(std::string_view plaintext, const std::string& digest) {
  EnsureSodium();
  if (digest.empty() || plaintext.size() > kMaxPasswordLength) return false;
  return crypto_pwhash_str_verify(digest.c_str(), plaintext.data(), plaintext.size()) == 0;
}

std::string RandomHex(std::size_t bytes) {
  EnsureSodium();
  std::vector<unsigned char> buffer(bytes);
  randombytes_buf(buffer.data(), buffer.size());
  return ToHex(buffer.data(), buffer.size());
}

std::uint64_t RandomU64() {
  EnsureSodium();
  std::uint64_t value = 0;
  randombytes_buf(&value, sizeof(value));
  return value;
}

std::string FastDigest(std::string_view secret) {
  EnsureSodium();
  unsigned char out[crypto_generichash_BYTES];
  crypto_generichash(out, sizeof(out), reinterpret_cast<const unsigned char*>(secret.data()),
                     secret.size(), nullptr, 0);
  return ToHex(out, sizeof(out));
}

}  // namespace arcade::platform
