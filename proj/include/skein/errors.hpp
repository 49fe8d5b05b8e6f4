#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

struct SkeinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAUnit : SkeinError {
  NotAUnit() : SkeinError("divisor is not a unit +-t^k") {}
};

struct NotInQ : SkeinError {
  explicit NotInQ(int e)
      : SkeinError("exponent " + std::to_string(e) + " is not divisible by 4") {}
};

struct DegreeTooHigh : SkeinError {
  explicit DegreeTooHigh(int d)
      : SkeinError("y-degree " + std::to_string(d) + " exceeds 6, no reduction rule") {}
};

struct InvalidKey : SkeinError {
  using SkeinError::SkeinError;
};

struct SeedsMissing : SkeinError {
  using SkeinError::SkeinError;
};

// Raised when an internal consistency condition fails. The CLI maps it to exit code 3.
struct InvariantViolation : SkeinError {
  using SkeinError::SkeinError;
};

struct NonUnitLeadingCoefficient : InvariantViolation {
  explicit NonUnitLeadingCoefficient(int k)
      : InvariantViolation("leading coefficient of the k=" + std::to_string(k) +
                           " reduction identity is not a unit") {}
};

struct ParseError : SkeinError {
  ParseError(std::size_t pos, std::vector<std::string> expected, const std::string& found)
      : SkeinError(format(pos, expected, found)), pos(pos), expected(std::move(expected)) {}

  std::size_t pos;
  std::vector<std::string> expected;

 private:
  static std::string format(std::size_t pos, const std::vector<std::string>& exp,
                            const std::string& found) {
    std::string s = "parse error at position " + std::to_string(pos) + ": found " + found +
                    ", expected one of {";
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (i) s += ", ";
      s += exp[i];
    }
    return s + "}";
  }
};

}  // namespace skein
