#ifndef SYLSUM_ERRORS_HPP
#define SYLSUM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylsum {

enum class Errc {
  NotDivisible,
  DivisionByZeroPoly,
  IndexOutOfRange,
  InvalidPartition,
  ShiftOutOfRange,
  NotSquare,
  MultiplePolyColumns,
  TooManyColumns,
  NotSquareAfterRemoval,
  InconsistentRemovalCount,
  EmptyPoints,
  DegreeWindow,
  MultiplicityNotOne,
  TooFewElements,
  CardinalityTooSmall,
  ArityMismatch,
  UnknownSuite,
  ParseError,
  ValidationError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace sylsum

#endif
