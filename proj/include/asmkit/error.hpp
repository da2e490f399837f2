#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asmkit {

enum class Errc {
  ZeroOrder,
  NotSquare,
  BadEntryValue,
  AlternationViolated,
  InvariantViolated,
  ParityViolated,
  NoLift,
  IceRuleViolated,
  BoundaryViolated,
  OrderMismatch,
  NotDownwardClosed,
  FactorizationFailed,
  NonIntegerCoefficient,
  CrossingDetected,
  NonIntegerPrediction,
  CoalescenceTimeout,
  UnsupportedFormat,
  NotDivisible,
  AuditFailed,
  DecodeFailed,
  ParseError,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::ZeroOrder: return "ZeroOrder";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadEntryValue: return "BadEntryValue";
    case Errc::AlternationViolated: return "AlternationViolated";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::ParityViolated: return "ParityViolated";
    case Errc::NoLift: return "NoLift";
    case Errc::IceRuleViolated: return "IceRuleViolated";
    case Errc::BoundaryViolated: return "BoundaryViolated";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::FactorizationFailed: return "FactorizationFailed";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::CrossingDetected: return "CrossingDetected";
    case Errc::NonIntegerPrediction: return "NonIntegerPrediction";
    case Errc::CoalescenceTimeout: return "CoalescenceTimeout";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::AuditFailed: return "AuditFailed";
    case Errc::DecodeFailed: return "DecodeFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every validating constructor and fallible operation.
/// `row`/`col` are 1-based when present (the user-facing convention).
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::optional<int> row = std::nullopt,
        std::optional<int> col = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)),
        row_(row),
        col_(col) {}

  Errc code() const noexcept { return code_; }
  /// The message without the error-code prefix.
  std::string const& message() const noexcept { return message_; }
  std::optional<int> row() const noexcept { return row_; }
  std::optional<int> col() const noexcept { return col_; }

 private:
  Errc code_;
  std::string message_;
  std::optional<int> row_;
  std::optional<int> col_;
};

}  // namespace asmkit
