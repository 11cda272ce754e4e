#pragma once

#include <array>
#include <optional>

#include "pcf/cf.hpp"
#include "pcf/convergence.hpp"

namespace pcf {

// A point [a, overline(a1, a2, a3)] of V(x^2 - (a^2 + 1))_{1,3} together
// with the criterion verdict.
struct Family13Report {
  PCF pcf;
  Rational a;
  Rational d;  // a^2 + 1
  ConvergenceReport criterion;
  std::optional<LimitResult> limit;
  bool limitVerified = false;
  // General family only: the necessary condition v_p(value) < 0 for
  // value = (2 a a1^2 + 4 a1 - 2 a) / (-a1^2 + 2 a a1 + 1).
  std::optional<Rational> conditionValue;
  std::optional<bool> conditionHolds;
};

// Residuals of the three (1,3) equations at (b1; a1, a2, a3); all zero iff
// the point lies on V(F)_{1,3}.
std::array<Rational, 3> equations13(const Rational& b1, const Rational& a1, const Rational& a2, const Rational& a3,
                                    const QuadPoly& F);
// Residual of the relation obtained by eliminating a2.
Rational elimination13(const Rational& b1, const Rational& a1, const Rational& a3, const QuadPoly& F);

// [a, overline(a1, 0, 2a - a1)]. Throws Error(NotInO).
Family13Report family13Zero(const Rational& a, const Rational& a1, const Prime& p, long precision = 8);

// [a, overline(a1, 2(a - a1)/(a1^2 - 2 a a1 - 1), a1)].
// Throws Error(DegenerateDenominator) and Error(NotInO).
Family13Report family13General(const Rational& a, const Rational& a1, const Prime& p, long precision = 8);

// a1 = 2 and a = (q + 3)/4 with q = p^k for p = 1 mod 4, q = p^(2k) for
// p = 3 mod 4. Convergence is reported, not assumed.
Family13Report family13Prime(const Prime& p, long k, long precision = 8);

}  // namespace pcf
