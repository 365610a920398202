#include "shellpc/error.hpp"

namespace shellpc {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::LossOfPrecision: return "LossOfPrecision";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::Unconverged: return "Unconverged";
    case ErrorCode::SkippedRoot: return "SkippedRoot";
    case ErrorCode::NormalizationSingular: return "NormalizationSingular";
    case ErrorCode::Singularity: return "Singularity";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

} // namespace shellpc
