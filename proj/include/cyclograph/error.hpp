#ifndef CYCLOGRAPH_ERROR_HPP
#define CYCLOGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclograph {

enum class ErrorCode {
    InvalidArgument,
    DivisionByZero,
    NotCoprime,
    NotAPower,
    NotRational,
    NotInSubfield,
    InvalidGraph,
    UnknownVertex,
    NoCycle,
    ParseError,
    VanishingComponent,
    NonIntegerSolution,
    NonIntegerResult,
    NotPrime,
    SizeMismatch,
    ConditionViolated,
    NonInteger,
    GuardrailExceeded,
    VerificationFailed,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotAPower: return "NotAPower";
        case ErrorCode::NotRational: return "NotRational";
        case ErrorCode::NotInSubfield: return "NotInSubfield";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NoCycle: return "NoCycle";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VanishingComponent: return "VanishingComponent";
        case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::NonInteger: return "NonInteger";
        case ErrorCode::GuardrailExceeded: return "GuardrailExceeded";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace cyclograph

#endif  // CYCLOGRAPH_ERROR_HPP
