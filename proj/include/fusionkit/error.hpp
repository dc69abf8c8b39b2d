#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionkit {

enum class ErrorCode {
  invalid_datum,
  datum_mismatch,
  not_a_simple,
  unbounded_alphabet,
  presentation_not_recognized,
  inconsistent_dimension,
  invalid_definition,
  syntax_error,
  unknown_letter,
  beyond_bound,
  defect,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_datum: return "invalid-datum";
    case ErrorCode::datum_mismatch: return "datum-mismatch";
    case ErrorCode::not_a_simple: return "not-a-simple";
    case ErrorCode::unbounded_alphabet: return "unbounded-alphabet-without-bound";
    case ErrorCode::presentation_not_recognized: return "presentation-not-recognized";
    case ErrorCode::inconsistent_dimension: return "inconsistent-dimension";
    case ErrorCode::invalid_definition: return "invalid-definition";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::unknown_letter: return "unknown-letter";
    case ErrorCode::beyond_bound: return "beyond-bound";
    case ErrorCode::defect: return "defect";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fusionkit
