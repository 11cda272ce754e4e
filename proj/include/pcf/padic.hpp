#pragma once

#include <optional>
#include <string>

#include "pcf/rational.hpp"

namespace pcf {

// Truncated p-adic number p^valuation * unit, where the unit is known modulo
// p^precision (relative precision). The exact zero has infinite valuation.
//
// Arithmetic tracks the worst-case loss of known digits: a sum whose leading
// digits cancel reports fewer digits, and a sum that cancels completely
// throws Error(PrecisionExhausted).
class PAdicApprox {
 public:
  // Throws Error(InternalError) when `unit` is divisible by p or precision < 1.
  PAdicApprox(Prime p, long valuation, const Integer& unit, long precision);

  static PAdicApprox fromRational(const Rational& x, const Prime& p, long precision);
  static PAdicApprox zero(const Prime& p);

  const Prime& prime() const { return p_; }
  long valuation() const { return valuation_; }
  const Integer& unitDigits() const { return unit_; }
  long precision() const { return precision_; }
  bool isZero() const { return valuation_ == kInfiniteValuation; }
  // valuation + precision; kInfiniteValuation for the exact zero.
  long absolutePrecision() const;

  PAdicApprox truncated(long precision) const;

  PAdicApprox operator-() const;
  PAdicApprox inverse() const;
  friend PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b);
  friend PAdicApprox operator-(const PAdicApprox& a, const PAdicApprox& b) { return a + (-b); }
  friend PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b);
  friend PAdicApprox operator/(const PAdicApprox& a, const PAdicApprox& b) { return a * b.inverse(); }

  // Equal valuations and units agreeing modulo p^min(precisions).
  friend bool operator==(const PAdicApprox& a, const PAdicApprox& b);

  // True iff x has the same valuation and x's unit agrees with ours modulo
  // p^precision().
  bool matches(const Rational& x) const;

  std::string str() const;

 private:
  Prime p_;
  long valuation_;
  Integer unit_;
  long precision_;
};

// Square root of a unit modulo the odd prime p (Tonelli-Shanks), or nullopt
// for a non-residue.
std::optional<Integer> sqrtModPrime(const Integer& a, const Integer& p);

// Square root in Q_p to `precision` relative digits: root modulo p lifted by
// Newton refinement. Canonical choice: unit digit modulo p in [1, (p-1)/2].
// nullopt when v_p(x) is odd or the unit part is a non-residue.
// Throws Error(ZeroInput) for x = 0.
std::optional<PAdicApprox> sqrtPadic(const Rational& x, const Prime& p, long precision);

}  // namespace pcf
