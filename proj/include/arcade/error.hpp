#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcade {

// Every failure surfaced by the engines and the service carries one of these
// codes. The kebab-case name is what goes over the wire.
enum class Errc {
  kMalformedSyntax,
  kUnknownField,
  kKindMismatch,
  kInvalidConfig,
  kInsufficientQuestions,
  kSessionFinished,
  kSessionNotFinished,
  kInvalidChoiceIndex,
  kInvalidAlphabet,
  kInvalidCiphertext,
  kInvalidCipherParams,
  kSessionOver,
  kOutOfGrid,
  kTextTooLong,
  kTimeWentBackwards,
  kInsufficientEmails,
  kSessionEnded,
  kSessionNotEnded,
  kOutOfRange,
  kDayInProgress,
  kDayNotStarted,
  kDayOver,
  kDayNotOver,
  kNoActiveAttack,
  kWrongAnswerCount,
  kInvalidTick,
  kInsufficientFunds,
  kMaxLevel,
  kUnknownServer,
  kPasswordTooShort,
  kPasswordTooLong,
  kWeakPassword,
  kUsernameTaken,
  kInvalidCredentials,
  kNoMatch,
  kCodeExpired,
  kCodeUsed,
  kUnauthenticated,
  kForbidden,
  kSessionAlreadyLive,
  kUnknownGame,
  kUnknownSession,
  kNotOwner,
  kSessionNotLive,
  kSessionNotTerminal,
  kUnknownAction,
  kBadRequest,
  kRateLimited,
  kStorage,
};

std::string_view ErrcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  explicit Error(Errc code) : Error(code, std::string(ErrcName(code))) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arcade
