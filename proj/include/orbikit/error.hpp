#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbikit {

enum class ErrorKind {
  Parse,
  UnknownCatalogEntry,
  InvalidArgument,
  InvalidDiamond,
  InvalidComponent,
  InvalidPresentation,
  PseudoReflection,
  ScalarAction,
  GroupTooLarge,
  DimensionTooSmall,
  OutOfRange,
  NonGorensteinOrbifold,
  DimensionMismatch,
  ParityError,
  Inconsistent,
  UnsupportedRange,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidDiamond: return "InvalidDiamond";
    case ErrorKind::InvalidComponent: return "InvalidComponent";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::PseudoReflection: return "PseudoReflection";
    case ErrorKind::ScalarAction: return "ScalarAction";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonGorensteinOrbifold: return "NonGorensteinOrbifold";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::UnsupportedRange: return "UnsupportedRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace orbikit
