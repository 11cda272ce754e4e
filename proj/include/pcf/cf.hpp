#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

// Point [x : y] of P^1(Q); [1 : 0] is infinity.
struct ProjPoint {
  Rational x;
  Rational y;

  bool isInfinity() const { return y.isZero(); }
  // Equality up to a common nonzero scale.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x * b.y == a.y * b.x; }
  std::string str() const;
};

struct Mat2 {
  Rational e11, e12, e21, e22;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Rational det() const { return e11 * e22 - e12 * e21; }
  Rational trace() const { return e11 + e22; }
  Mat2 transpose() const { return {e11, e21, e12, e22}; }
  // Throws Error(ZeroInput) for a singular matrix.
  Mat2 inverse() const;
  // Moebius action on P^1.
  ProjPoint apply(const ProjPoint& z) const { return {e11 * z.x + e12 * z.y, e21 * z.x + e22 * z.y}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b) = default;
};

// D(c) = [[c, 1], [1, 0]].
inline Mat2 quotientMatrix(const Rational& c) { return {c, 1, 1, 0}; }

struct Continuants {
  std::vector<Rational> A;  // A_0 .. A_n
  std::vector<Rational> B;  // B_0 .. B_n
};

Continuants continuants(std::span<const Rational> c);

// M(c_1..c_n) = [[A_n, A_{n-1}], [B_n, B_{n-1}]]. Throws Error(EmptyInput).
Mat2 cfMatrix(std::span<const Rational> c);

// Periodic continued fraction [b_1..b_N, (a_1..a_k)] over Z[1/p].
class PCF {
 public:
  // Throws Error(EmptyPeriod) for an empty period and Error(NotInO) when an
  // entry has a denominator that is not a power of p.
  PCF(Prime p, std::vector<Rational> preperiod, std::vector<Rational> period);

  const Prime& prime() const { return p_; }
  const std::vector<Rational>& preperiod() const { return preperiod_; }
  const std::vector<Rational>& period() const { return period_; }

  // 1-based index into the unrolled sequence of partial quotients.
  const Rational& quotient(std::size_t n) const;

  // "[b1, b2, (a1, a2, a3)]" with the period in parentheses.
  std::string str() const;

 private:
  Prime p_;
  std::vector<Rational> preperiod_;
  std::vector<Rational> period_;
};

// n-th convergent [A_n : B_n] (n >= 1).
ProjPoint convergentAt(const PCF& pcf, std::size_t n);

// E = M(pre) M(period) M(pre)^{-1}; identity conjugation when pre is empty.
Mat2 eMatrix(std::span<const Rational> preperiod, std::span<const Rational> period);
Mat2 eMatrix(const PCF& pcf);

// F(x) = A x^2 + B x + C, with projective semantics.
struct QuadPoly {
  Rational A, B, C;

  bool isZero() const { return A.isZero() && B.isZero() && C.isZero(); }
  Rational discriminant() const { return B * B - Rational(4) * A * C; }
  Rational operator()(const Rational& x) const { return (A * x + B) * x + C; }
  Rational derivative(const Rational& x) const { return Rational(2) * A * x + B; }
  // Cross-multiplication test; false if either triple is zero.
  bool proportionalTo(const QuadPoly& o) const;

  friend bool operator==(const QuadPoly& a, const QuadPoly& b) = default;
  std::string str() const;
};

// (E21, E22 - E11, -E12), unreduced. May be the zero triple.
QuadPoly quadOf(std::span<const Rational> preperiod, std::span<const Rational> period);
QuadPoly quadOf(const PCF& pcf);

// Closed-form Quad for the shapes (N, k) in {(0,1), (1,1), (2,1), (0,2),
// (1,2), (0,3), (1,3)}; nullopt for any other shape.
std::optional<QuadPoly> tableQuad(std::span<const Rational> preperiod, std::span<const Rational> period);

struct Membership {
  bool member = false;
  // Quad(P) is the zero triple: the defining equations hold trivially but
  // the point is not counted as a member of any V(F) with F != 0.
  bool zeroQuad = false;
};

// Checks the three defining equations of V(F)_{N,k} exactly.
// Throws Error(ZeroPolynomial) for F = 0.
Membership inVariety(std::span<const Rational> preperiod, std::span<const Rational> period,
                     const QuadPoly& F);
Membership inVariety(const PCF& pcf, const QuadPoly& F);

// (a_1..a_k), F  ->  (a_k..a_1), G = C x^2 - B x + A.
std::pair<std::vector<Rational>, QuadPoly> sigmaReverse(std::span<const Rational> period,
                                                        const QuadPoly& F);

// Applies [.., c, 0, c', ..] -> [.., c + c', ..] to a finite list. Never
// called implicitly.
std::vector<Rational> collapseZeros(std::span<const Rational> c);

}  // namespace pcf
