#include "pcf/cf.hpp"

#include "pcf/error.hpp"

namespace pcf {

std::string ProjPoint::str() const {
  if (isInfinity()) return "inf";
  return (x / y).str();
}

Mat2 Mat2::inverse() const {
  const Rational d = det();
  if (d.isZero()) throw Error(Errc::ZeroInput, "singular matrix");
  return {e22 / d, -e12 / d, -e21 / d, e11 / d};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Continuants continuants(std::span<const Rational> c) {
  Continuants out;
  out.A.reserve(c.size() + 1);
  out.B.reserve(c.size() + 1);
  out.A.push_back(1);
  out.B.push_back(0);
  Rational a2 = 0, b2 = 1;  // A_{-1}, B_{-1}
  for (const Rational& q : c) {
    Rational a = out.A.back() * q + a2;
    Rational b = out.B.back() * q + b2;
    a2 = out.A.back();
    b2 = out.B.back();
    out.A.push_back(std::move(a));
    out.B.push_back(std::move(b));
  }
  return out;
}

Mat2 cfMatrix(std::span<const Rational> c) {
  if (c.empty()) throw Error(Errc::EmptyInput, "cfMatrix of an empty list");
  Continuants k = continuants(c);
  const std::size_t n = c.size();
  return {k.A[n], k.A[n - 1], k.B[n], k.B[n - 1]};
}

PCF::PCF(Prime p, std::vector<Rational> preperiod, std::vector<Rational> period)
    : p_(std::move(p)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw Error(Errc::EmptyPeriod, "a PCF needs a nonempty period");
  for (const auto* list : {&preperiod_, &period_})
    for (const Rational& c : *list)
      if (!inO(c, p_)) throw Error(Errc::NotInO, c.str() + " is not in Z[1/" + p_.str() + "]");
}

const Rational& PCF::quotient(std::size_t n) const {
  if (n == 0) throw Error(Errc::EmptyInput, "partial quotients are 1-based");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[(n - 1 - preperiod_.size()) % period_.size()];
}

std::string PCF::str() const {
  std::string s = "[";
  for (const auto& b : preperiod_) s += b.str() + ", ";
  s += "(";
  for (std::size_t i = 0; i < period_.size(); ++i) s += (i ? ", " : "") + period_[i].str();
  return s + ")]";
}

ProjPoint convergentAt(const PCF& pcf, std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyInput, "convergents are indexed from 1");
  Rational a1 = 1, a2 = 0, b1 = 0, b2 = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational& c = pcf.quotient(i);
    Rational a = a1 * c + a2, b = b1 * c + b2;
    a2 = std::move(a1);
    b2 = std::move(b1);
    a1 = std::move(a);
    b1 = std::move(b);
  }
  return {a1, b1};
}

Mat2 eMatrix(std::span<const Rational> preperiod, std::span<const Rational> period) {
  Mat2 per = cfMatrix(period);
  if (preperiod.empty()) return per;
  Mat2 pre = cfMatrix(preperiod);
  return pre * per * pre.inverse();
}

Mat2 eMatrix(const PCF& pcf) { return eMatrix(pcf.preperiod(), pcf.period()); }

bool QuadPoly::proportionalTo(const QuadPoly& o) const {
  if (isZero() || o.isZero()) return false;
  return A * o.B == B * o.A && A * o.C == C * o.A && B * o.C == C * o.B;
}

std::string QuadPoly::str() const {
  return "(" + A.str() + ")x^2 + (" + B.str() + ")x + (" + C.str() + ")";
}

QuadPoly quadOf(std::span<const Rational> preperiod, std::span<const Rational> period) {
  Mat2 e = eMatrix(preperiod, period);
  return {e.e21, e.e22 - e.e11, -e.e12};
}

QuadPoly quadOf(const PCF& pcf) { return quadOf(pcf.preperiod(), pcf.period()); }

Membership inVariety(std::span<const Rational> preperiod, std::span<const Rational> period,
                     const QuadPoly& F) {
  if (F.isZero()) throw Error(Errc::ZeroPolynomial, "V(0) is the zero variety");
  const Mat2 e = eMatrix(preperiod, period);
  const Rational diag = e.e22 - e.e11;
  const bool equations = F.A * diag == F.B * e.e21 && -F.A * e.e12 == F.C * e.e21 &&
                         -F.B * e.e12 == F.C * diag;
  Membership m;
  m.zeroQuad = e.e21.isZero() && diag.isZero() && e.e12.isZero();
  m.member = equations && !m.zeroQuad;
  return m;
}

Membership inVariety(const PCF& pcf, const QuadPoly& F) {
  return inVariety(pcf.preperiod(), pcf.period(), F);
}

std::pair<std::vector<Rational>, QuadPoly> sigmaReverse(std::span<const Rational> period,
                                                        const QuadPoly& F) {
  return {std::vector<Rational>(period.rbegin(), period.rend()), QuadPoly{F.C, -F.B, F.A}};
}

std::vector<Rational> collapseZeros(std::span<const Rational> c) {
  std::vector<Rational> out(c.begin(), c.end());
  for (std::size_t i = 1; i + 1 < out.size();) {
    if (out[i].isZero()) {
      out[i - 1] += out[i + 1];
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(i + 2));
      if (i > 1) --i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace pcf

namespace pcf {

std::optional<QuadPoly> tableQuad(std::span<const Rational> pre, std::span<const Rational> per) {
  const Rational one(1), two(2);
  switch (pre.size() * 10 + per.size()) {
    case 1: {
      const Rational& a1 = per[0];
      return QuadPoly{one, -a1, -one};
    }
    case 11: {
      const Rational &b1 = pre[0], &a1 = per[0];
      return QuadPoly{one, a1 - two * b1, b1 * b1 - a1 * b1 - one};
    }
    case 21: {
      const Rational &b1 = pre[0], &b2 = pre[1], &a1 = per[0];
      return QuadPoly{b2 * a1 - b2 * b2 + one,
                      -two * a1 * b1 * b2 + two * b1 * b2 * b2 - a1 - two * b1 + two * b2,
                      a1 * b1 * b1 * b2 - b1 * b1 * b2 * b2 + a1 * b1 + b1 * b1 - two * b2 * b1 - one};
    }
    case 2: {
      const Rational &a1 = per[0], &a2 = per[1];
      return QuadPoly{a2, -a1 * a2, -a1};
    }
    case 12: {
      const Rational &b1 = pre[0], &a1 = per[0], &a2 = per[1];
      return QuadPoly{a1, a2 * a1 - two * b1 * a1, -a1 * a2 * b1 + a1 * b1 * b1 - a2};
    }
    case 3: {
      const Rational &a1 = per[0], &a2 = per[1], &a3 = per[2];
      return QuadPoly{a2 * a3 + one, -a1 * a2 * a3 - a1 + a2 - a3, -a2 * a1 - one};
    }
    case 13: {
      const Rational &b1 = pre[0], &a1 = per[0], &a2 = per[1], &a3 = per[2];
      return QuadPoly{a1 * a2 + one, a1 * a2 * a3 - two * a1 * a2 * b1 + a1 - a2 + a3 - two * b1,
                      -a1 * a2 * a3 * b1 + a1 * a2 * b1 * b1 - a1 * b1 - a2 * a3 + a2 * b1 - a3 * b1 + b1 * b1 - one};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace pcf
