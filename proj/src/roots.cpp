#include "pcf/roots.hpp"

#include "pcf/detail/overloaded.hpp"
#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

using detail::Overloaded;

std::string str(const P1Value& v) {
  return std::visit(Overloaded{[](const Rational& r) { return r.str(); },
                               [](const Infinity&) { return std::string("inf"); },
                               [](const PAdicApprox& a) { return a.str(); }},
                    v);
}

std::string str(const AlgebraicPoint& v) {
  return std::visit(Overloaded{[](const Rational& r) { return r.str(); },
                               [](const Infinity&) { return std::string("inf"); },
                               [](const QuadSurd& s) { return s.str(); }},
                    v);
}

std::vector<AlgebraicPoint> quadRootsAlgebraic(const QuadPoly& F) {
  if (F.isZero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial has no root set");
  if (F.A.isZero()) {
    if (F.B.isZero()) return {Infinity{}, Infinity{}};
    return {-F.C / F.B, Infinity{}};
  }
  const Rational delta = F.discriminant();
  const Rational twoA = Rational(2) * F.A;
  if (auto s = rationalSqrt(delta)) return {(-F.B + *s) / twoA, (-F.B - *s) / twoA};
  // sqrt(num/den) = sqrt(num*den)/den
  const Integer radicand = delta.num() * delta.den();
  const Rational scale = Rational(1) / (twoA * Rational(delta.den()));
  QuadSurd plus{-F.B / twoA, scale, radicand};
  return {plus, plus.conjugate()};
}

P1Value toP1(const AlgebraicPoint& v, const Prime& p, long precision) {
  return std::visit(Overloaded{[](const Rational& r) -> P1Value { return r; },
                               [](const Infinity&) -> P1Value { return Infinity{}; },
                               [&](const QuadSurd& s) -> P1Value { return toPadic(s, p, precision); }},
                    v);
}

bool isSquareInQp(const Rational& x, const Prime& p) {
  if (x.isZero()) return false;
  return sqrtPadic(x, p, 1).has_value();
}

std::optional<std::vector<P1Value>> quadRootsPadic(const QuadPoly& F, const Prime& p, long precision) {
  std::vector<AlgebraicPoint> roots = quadRootsAlgebraic(F);
  if (const auto* s = std::get_if<QuadSurd>(&roots.front()))
    if (!isSquareInQp(Rational(s->radicand), p)) return std::nullopt;
  std::vector<P1Value> out;
  for (const auto& r : roots) out.push_back(toP1(r, p, precision));
  return out;
}

}  // namespace pcf
