#include "een/error.hpp"

namespace een {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::SampleRateTooLow: return "SampleRateTooLow";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::AllSilent: return "AllSilent";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::EmptyWordMap: return "EmptyWordMap";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::NoQualifyingCombo: return "NoQualifyingCombo";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::DegenerateSample: return "DegenerateSample";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::UnsupportedCharacter: return "UnsupportedCharacter";
    }
    return "Unknown";
}

}  // namespace een
