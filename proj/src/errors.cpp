#include "sylsum/errors.hpp"

namespace sylsum {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::ShiftOutOfRange: return "ShiftOutOfRange";
    case Errc::NotSquare: return "NotSquare";
    case Errc::MultiplePolyColumns: return "MultiplePolyColumns";
    case Errc::TooManyColumns: return "TooManyColumns";
    case Errc::NotSquareAfterRemoval: return "NotSquareAfterRemoval";
    case Errc::InconsistentRemovalCount: return "InconsistentRemovalCount";
    case Errc::EmptyPoints: return "EmptyPoints";
    case Errc::DegreeWindow: return "DegreeWindow";
    case Errc::MultiplicityNotOne: return "MultiplicityNotOne";
    case Errc::TooFewElements: return "TooFewElements";
    case Errc::CardinalityTooSmall: return "CardinalityTooSmall";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace sylsum
