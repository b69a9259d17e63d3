#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace een {

enum class ErrorCode {
    InvalidArgument,
    Io,
    UnsupportedFormat,
    SampleRateTooLow,
    EmptyInput,
    AllSilent,
    EmptyGrid,
    EmptyWordMap,
    InsufficientData,
    NoQualifyingCombo,
    NotNormalized,
    DegenerateSample,
    TooFewPoints,
    EmptySet,
    UnsupportedCharacter,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; every failure in the library is one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace een
