#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shellpc {

enum class ErrorCode {
    Domain,
    InvalidGeometry,
    LossOfPrecision,
    NoSignChange,
    Unconverged,
    SkippedRoot,
    NormalizationSingular,
    Singularity,
    TruncationInsufficient,
    NonConvergence,
    IllConditioned,
    InvariantViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` is the machine-readable part.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace shellpc
