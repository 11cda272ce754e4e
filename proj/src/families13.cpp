#include "pcf/families13.hpp"

#include <algorithm>
#include <cstdlib>

#include "pcf/error.hpp"

namespace pcf {

std::array<Rational, 3> equations13(const Rational& b1, const Rational& a1, const Rational& a2, const Rational& a3,
                                    const QuadPoly& F) {
  const Rational &A = F.A, &B = F.B, &C = F.C;
  const Rational a12 = a1 * a2, a123 = a12 * a3, two(2);
  return {
      A * a123 - two * A * a12 * b1 - B * a12 + A * a1 - A * a2 + A * a3 - two * A * b1 - B,
      -A * a123 * b1 + A * a12 * b1 * b1 - A * a1 * b1 - A * a2 * a3 + A * a2 * b1 - A * a3 * b1 + A * b1 * b1 -
          C * a12 - A - C,
      -B * a123 * b1 + B * a12 * b1 * b1 - C * a123 + two * C * a12 * b1 - B * a1 * b1 - B * a2 * a3 +
          B * a2 * b1 - B * a3 * b1 + B * b1 * b1 - C * a1 + C * a2 - C * a3 + two * C * b1 - B,
  };
}

Rational elimination13(const Rational& b1, const Rational& a1, const Rational& a3, const QuadPoly& F) {
  const Rational &A = F.A, &B = F.B, &C = F.C;
  const Rational a11 = a1 * a1, two(2);
  return A * a11 * b1 * b1 + B * a11 * b1 + two * A * a1 * b1 + A * a3 * a3 - two * A * a3 * b1 + A * b1 * b1 +
         C * a11 + B * a1 - B * a3 + B * b1 + A + C;
}

namespace {

Family13Report build(const Rational& a, std::vector<Rational> period, const Prime& p, long precision) {
  Family13Report r{PCF(p, {a}, period), a, a * a + 1, {}, std::nullopt, false, std::nullopt, std::nullopt};
  const QuadPoly F{1, 0, -r.d};
  const auto eq = equations13(a, period[0], period[1], period[2], F);
  const bool onVariety = std::all_of(eq.begin(), eq.end(), [](const Rational& x) { return x.isZero(); });
  if (!onVariety || !inVariety(r.pcf, F).member || !elimination13(a, period[0], period[2], F).isZero())
    throw Error(Errc::InternalError, r.pcf.str() + " is not on V(" + F.str() + ")_{1,3}");
  r.criterion = isConvergent(r.pcf);
  if (r.criterion.convergent) {
    r.limit = limit(r.pcf, precision);
    long slack = 0;
    if (const auto* x = std::get_if<PAdicApprox>(&r.limit->value)) slack = 2 * std::labs(x->valuation());
    r.limitVerified = approxRootOf(r.limit->value, F, std::max(1L, precision - slack));
  }
  return r;
}

}  // namespace

Family13Report family13Zero(const Rational& a, const Rational& a1, const Prime& p, long precision) {
  return build(a, {a1, 0, Rational(2) * a - a1}, p, precision);
}

Family13Report family13General(const Rational& a, const Rational& a1, const Prime& p, long precision) {
  const Rational den = a1 * a1 - Rational(2) * a * a1 - 1;
  if (den.isZero()) throw Error(Errc::DegenerateDenominator, "a1^2 - 2 a a1 - 1 = 0");
  const Rational a2 = Rational(2) * (a - a1) / den;
  if (!inO(a, p) || !inO(a1, p) || !inO(a2, p))
    throw Error(Errc::NotInO, "a2 = " + a2.str() + " is not in Z[1/" + p.str() + "]");
  Family13Report r = build(a, {a1, a2, a1}, p, precision);
  const Rational value = (Rational(2) * a * a1 * a1 + Rational(4) * a1 - Rational(2) * a) / -den;
  r.conditionValue = value;
  r.conditionHolds = vp(value, p) < 0;
  return r;
}

Family13Report family13Prime(const Prime& p, long k, long precision) {
  if (k < 1) throw Error(Errc::ZeroInput, "k must be at least 1");
  const bool oneMod4 = mpz_fdiv_ui(p.value().get_mpz_t(), 4) == 1;
  const Integer q = ipow(p.value(), static_cast<unsigned long>(oneMod4 ? k : 2 * k));
  const Rational a = Rational(Integer(q + 3), Integer(4));
  Family13Report r = family13General(a, 2, p, precision);
  if (r.d != Rational(Integer(q * q + 6 * q + 25), Integer(16)) ||
      r.pcf.period()[1] != -Rational(Integer(q - 5), Integer(2 * q)))
    throw Error(Errc::InternalError, "family13Prime construction mismatch");
  return r;
}

}  // namespace pcf
