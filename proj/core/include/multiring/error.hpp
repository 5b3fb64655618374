#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multiring {

enum class ErrorCode {
  kCapExceeded,
  kMalformedTable,
  kAxiomViolation,
  kForeignElement,
  kNoUnit,
  kRingInvalid,
  kMixedLawViolation,
  kEmptyFamily,
  kEmptyOps,
  kStepInvalid,
  kNotIdealSubspace,
  kMixedModeMismatch,
  kNoDecomposition,
  kSyntaxError,
  kDuplicateLabel,
  kUnknownKey,
  kTableShape,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the library. Derived types carry
// structured payloads (validation reports, witnesses, offending terms).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace multiring
