#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wudcr {

enum class ErrorKind {
  kParse,
  kNotATree,
  kNotACaterpillar,
  kTooSmall,
  kMissingNode,
  kTimeout,
  kRadiusTooSmall,
  kBadAnchor,
  kParamsInfeasible,
  kClauseTooWide,
  kTooManyVariables,
  kLayoutBug,
  kInvalidPlacement,
  kConstructionFailed,
  kTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kNotATree: return "NotATree";
    case ErrorKind::kNotACaterpillar: return "NotACaterpillar";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kMissingNode: return "MissingNode";
    case ErrorKind::kTimeout: return "Timeout";
    case ErrorKind::kRadiusTooSmall: return "RadiusTooSmall";
    case ErrorKind::kBadAnchor: return "BadAnchor";
    case ErrorKind::kParamsInfeasible: return "ParamsInfeasible";
    case ErrorKind::kClauseTooWide: return "ClauseTooWide";
    case ErrorKind::kTooManyVariables: return "TooManyVariables";
    case ErrorKind::kLayoutBug: return "LayoutBug";
    case ErrorKind::kInvalidPlacement: return "InvalidPlacement";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
    case ErrorKind::kTooLarge: return "TooLarge";
  }
  return "Error";
}

}  // namespace wudcr
