#include "neighborly/error.hpp"

namespace neighborly {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::InvalidFace: return "InvalidFace";
    case ErrorCode::DimensionRange: return "DimensionRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::VertexClash: return "VertexClash";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::InadmissibleHandle: return "InadmissibleHandle";
    case ErrorCode::Range: return "Range";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace neighborly
