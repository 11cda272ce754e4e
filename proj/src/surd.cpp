#include "pcf/surd.hpp"

#include <cstdlib>

#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

namespace {

void requireSameField(const QuadSurd& a, const QuadSurd& b) {
  if (a.radicand != b.radicand) throw Error(Errc::InternalError, "surds from different fields");
}

}  // namespace

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
  requireSameField(a, b);
  return {a.x + b.x, a.y + b.y, a.radicand};
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) {
  requireSameField(a, b);
  return {a.x - b.x, a.y - b.y, a.radicand};
}

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
  requireSameField(a, b);
  const Rational d(a.radicand);
  return {a.x * b.x + a.y * b.y * d, a.x * b.y + a.y * b.x, a.radicand};
}

QuadSurd operator/(const QuadSurd& a, const QuadSurd& b) {
  requireSameField(a, b);
  const Rational n = b.norm();
  if (n.isZero()) throw Error(Errc::ZeroInput, "division by zero surd");
  QuadSurd t = a * b.conjugate();
  return {t.x / n, t.y / n, a.radicand};
}

std::string QuadSurd::str() const {
  if (y.isZero()) return x.str();
  // Square factors of the radicand move into the coefficient for display.
  Integer square = 1, core = radicand < 0 ? Integer(-1) : Integer(1);
  for (const auto& [q, e] : factorize(radicand)) {
    square *= ipow(q, static_cast<unsigned long>(e / 2));
    if (e % 2 != 0) core *= q;
  }
  const Rational coeff = y.abs() * Rational(square);
  std::string s;
  if (!x.isZero()) s = x.str() + (y.sign() > 0 ? " + " : " - ");
  else if (y.sign() < 0) s = "-";
  if (coeff != 1) s += coeff.str() + "*";
  return s + "sqrt(" + core.get_str() + ")";
}

PAdicApprox toPadic(const QuadSurd& s, const Prime& p, long precision) {
  if (s.y.isZero()) return PAdicApprox::fromRational(s.x, p, precision);
  const long slack = 4 + std::labs(vp(s.x, p) == kInfiniteValuation ? 0 : vp(s.x, p)) +
                     std::labs(vp(s.y, p));
  for (long working : {precision + slack, 4 * precision + slack}) {
    auto root = sqrtPadic(Rational(s.radicand), p, working);
    if (!root) throw Error(Errc::InternalError, "radicand is not a square in Q_p");
    try {
      PAdicApprox v = PAdicApprox::fromRational(s.x, p, working) +
                      PAdicApprox::fromRational(s.y, p, working) * *root;
      if (v.precision() >= precision) return v.truncated(precision);
    } catch (const Error& e) {
      if (e.code() != Errc::PrecisionExhausted) throw;
    }
  }
  throw Error(Errc::PrecisionExhausted, "could not resolve " + s.str() + " to the requested precision");
}

}  // namespace pcf
