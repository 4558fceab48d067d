#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghcloud {

enum class ErrorKind {
  NotSquare,
  NegativeEntry,
  NonzeroDiagonal,
  Asymmetric,
  TriangleViolation,
  ZeroOffDiagonal,
  NotStrictlyIncreasing,
  NonPositiveLambda,
  EmptySet,
  SizeMismatch,
  NotBiTotal,
  TooLarge,
  WindowTooSmall,
  NotOddPrime,
  BadWindow,
  GapsNotGrowing,
  BadBase,
  ThreadExplosion,
  MixedSystems,
  BoundViolated,
  ParseError,
  BadArgument,
};

// How an error maps onto process exit codes / C API statuses.
enum class ErrorCategory { Usage, Limit, Domain };

constexpr std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::Asymmetric: return "Asymmetric";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotBiTotal: return "NotBiTotal";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::BadWindow: return "BadWindow";
    case ErrorKind::GapsNotGrowing: return "GapsNotGrowing";
    case ErrorKind::BadBase: return "BadBase";
    case ErrorKind::ThreadExplosion: return "ThreadExplosion";
    case ErrorKind::MixedSystems: return "MixedSystems";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

constexpr ErrorCategory error_category(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooLarge:
    case ErrorKind::ThreadExplosion:
      return ErrorCategory::Limit;
    default:
      return ErrorCategory::Domain;
  }
}

// Domain error with an optional witness (up to three indices, -1 = unused).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, int i = -1, int j = -1, int k = -1)
      : std::runtime_error(std::move(message)), kind_(kind), where_{i, j, k} {}

  ErrorKind kind() const { return kind_; }
  ErrorCategory category() const { return error_category(kind_); }
  const std::array<int, 3>& where() const { return where_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
  std::array<int, 3> where_;
};

}  // namespace ghcloud
