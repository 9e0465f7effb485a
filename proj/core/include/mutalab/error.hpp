#ifndef MUTALAB_ERROR_HPP
#define MUTALAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mutalab {

enum class ErrorCode {
  NotSkewSymmetrizable,
  VertexOutOfRange,
  InvalidPermutation,
  SizeMismatch,
  MutateAtFrozenVertex,
  EmptySubset,
  IntegerOverflow,
  InvalidLimits,
  ClassNotFinite,
  LetterOutOfRange,
  BudgetExceeded,
  UnknownName,
  BadParams,
  MalformedJson,
  FileNotFound,
};

// Stable kebab-case name, used in CLI diagnostics and tests.
constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSkewSymmetrizable: return "reject-not-skew-symmetrizable";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::InvalidPermutation: return "invalid-permutation";
    case ErrorCode::SizeMismatch: return "size-mismatch";
    case ErrorCode::MutateAtFrozenVertex: return "mutate-at-frozen-vertex";
    case ErrorCode::EmptySubset: return "empty-subset";
    case ErrorCode::IntegerOverflow: return "integer-overflow";
    case ErrorCode::InvalidLimits: return "invalid-limits";
    case ErrorCode::ClassNotFinite: return "class-not-finite";
    case ErrorCode::LetterOutOfRange: return "letter-out-of-range";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::BadParams: return "bad-params";
    case ErrorCode::MalformedJson: return "malformed-json";
    case ErrorCode::FileNotFound: return "file-not-found";
  }
  return "unknown-error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mutalab

#endif  // MUTALAB_ERROR_HPP
