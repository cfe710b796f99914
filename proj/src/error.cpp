#include "deltacol/error.hpp"

namespace deltacol {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EqualWords: return "EqualWords";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoRoom: return "NoRoom";
    case ErrorCode::InvalidAnchors: return "InvalidAnchors";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::UnsatisfiableConstraint: return "UnsatisfiableConstraint";
    case ErrorCode::NotRegressive: return "NotRegressive";
    case ErrorCode::NotAlmostRegressive: return "NotAlmostRegressive";
    case ErrorCode::NotOddCycleFree: return "NotOddCycleFree";
    case ErrorCode::NotDeltaColouring: return "NotDeltaColouring";
    case ErrorCode::NotTriangleFree: return "NotTriangleFree";
    case ErrorCode::NotFullCube: return "NotFullCube";
    case ErrorCode::ColourOutOfRange: return "ColourOutOfRange";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PaletteMismatch: return "PaletteMismatch";
    case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
    case ErrorCode::RangeOutOfPalette: return "RangeOutOfPalette";
    case ErrorCode::FiberNotInjective: return "FiberNotInjective";
    case ErrorCode::ViolationExists: return "ViolationExists";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace deltacol
