#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcf {

enum class Errc {
  InvalidPrime,
  ParseError,
  ZeroInput,
  ZeroPolynomial,
  EmptyInput,
  EmptyPeriod,
  NotInO,
  NotConvergent,
  PrecisionExhausted,
  RootInput,
  ZeroLeadingCoeff,
  PerfectSquare,
  NotSquareFree,
  NoNegativePell,
  NotDegenerate,
  DegenerateDenominator,
  InternalError,
};

std::string_view errcName(Errc code);

// All library failures are reported through this type; `code()` is stable
// and is what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pcf
