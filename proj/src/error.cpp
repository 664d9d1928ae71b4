#include "arcade/error.hpp"

namespace arcade {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kMalformedSyntax: return "malformed-syntax";
    case Errc::kUnknownField: return "unknown-field";
    case Errc::kKindMismatch: return "kind-mismatch";
    case Errc::kInvalidConfig: return "invalid-config";
    case Errc::kInsufficientQuestions: return "insufficient-questions";
    case Errc::kSessionFinished: return "session-finished";
    case Errc::kSessionNotFinished: return "session-not-finished";
    case Errc::kInvalidChoiceIndex: return "invalid-choice-index";
    case Errc::kInvalidAlphabet: return "invalid-alphabet";
    case Errc::kInvalidCiphertext: return "invalid-ciphertext";
    case Errc::kInvalidCipherParams: return "invalid-cipher-params";
    case Errc::kSessionOver: return "session-over";
    case Errc::kOutOfGrid: return "out-of-grid";
    case Errc::kTextTooLong: return "text-too-long";
    case Errc::kTimeWentBackwards: return "time-went-backwards";
    case Errc::kInsufficientEmails: return "insufficient-emails";
    case Errc::kSessionEnded: return "session-ended";
    case Errc::kSessionNotEnded: return "session-not-ended";
    case Errc::kOutOfRange: return "out-of-range";
    case Errc::kDayInProgress: return "day-in-progress";
    case Errc::kDayNotStarted: return "day-not-started";
    case Errc::kDayOver: return "day-over";
    case Errc::kDayNotOver: return "day-not-over";
    case Errc::kNoActiveAttack: return "no-active-attack";
    case Errc::kWrongAnswerCount: return "wrong-answer-count";
    case Errc::kInvalidTick: return "invalid-tick";
    case Errc::kInsufficientFunds: return "insufficient-funds";
    case Errc::kMaxLevel: return "max-level";
    case Errc::kUnknownServer: return "unknown-server";
    case Errc::kPasswordTooShort: return "password-too-short";
    case Errc::kPasswordTooLong: return "password-too-long";
    case Errc::kWeakPassword: return "weak-password";
    case Errc::kUsernameTaken: return "username-taken";
    case Errc::kInvalidCredentials: return "invalid-credentials";
    case Errc::kNoMatch: return "no-match";
    case Errc::kCodeExpired: return "code-expired";
    case Errc::kCodeUsed: return "code-used";
    case Errc::kUnauthenticated: return "unauthenticated";
    case Errc::kForbidden: return "forbidden";
    case Errc::kSessionAlreadyLive: return "session-already-live";
    case Errc::kUnknownGame: return "unknown-game";
    case Errc::kUnknownSession: return "unknown-session";
    case Errc::kNotOwner: return "not-owner";
    case Errc::kSessionNotLive: return "session-not-live";
    case Errc::kSessionNotTerminal: return "session-not-terminal";
    case Errc::kUnknownAction: return "unknown-action";
    case Errc::kBadRequest: return "bad-request";
    case Errc::kRateLimited: return "rate-limited";
    case Errc::kStorage: return "storage";
  }
  return "unknown";
}

}  // namespace arcade
