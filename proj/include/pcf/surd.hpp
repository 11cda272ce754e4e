#pragma once

#include <string>

#include "pcf/padic.hpp"
#include "pcf/rational.hpp"

namespace pcf {

// x + y*sqrt(radicand) in Q(sqrt(radicand)), radicand a non-square integer.
// When embedded in Q_p, sqrt(radicand) always denotes the canonical root
// returned by sqrtPadic.
struct QuadSurd {
  Rational x;
  Rational y;
  Integer radicand;

  QuadSurd conjugate() const { return {x, -y, radicand}; }
  Rational norm() const { return x * x - y * y * Rational(radicand); }

  friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
  // Throws Error(ZeroInput) when b is zero.
  friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b);
  friend bool operator==(const QuadSurd& a, const QuadSurd& b) = default;

  QuadSurd withRational(const Rational& r) const { return {r, 0, radicand}; }

  std::string str() const;
};

// Embeds s into Q_p with at least `precision` relative digits. Retries once
// at 4x working precision; throws Error(PrecisionExhausted) if the known
// digits still cancel, and Error(InternalError) when the radicand has no
// square root in Q_p.
PAdicApprox toPadic(const QuadSurd& s, const Prime& p, long precision);

}  // namespace pcf
