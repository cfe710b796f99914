#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltacol {

enum class ErrorCode {
    EqualWords,
    LengthMismatch,
    BudgetExceeded,
    InvalidParams,
    NoRoom,
    InvalidAnchors,
    TooManyVertices,
    MissingLabels,
    UnsatisfiableConstraint,
    NotRegressive,
    NotAlmostRegressive,
    NotOddCycleFree,
    NotDeltaColouring,
    NotTriangleFree,
    NotFullCube,
    ColourOutOfRange,
    PreconditionFailed,
    PaletteMismatch,
    PaletteTooSmall,
    RangeOutOfPalette,
    FiberNotInjective,
    ViolationExists,
    MalformedInput,
    IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Base exception for every failure raised by the toolkit. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace deltacol
