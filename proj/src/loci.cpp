#include "pcf/loci.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <tuple>

#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

std::vector<Rational> LocusPoint::coords() const {
  std::vector<Rational> out = preperiod;
  out.insert(out.end(), period.begin(), period.end());
  return out;
}

LocusPoint evaluatePoint(const Prime& p, std::vector<Rational> preperiod, std::vector<Rational> period,
                         const QuadPoly& F, long precision) {
  LocusPoint pt{std::move(preperiod), std::move(period), false, false, std::nullopt};
  const PCF pcf = pt.pcf(p);
  const Membership m = inVariety(pcf, F);
  if (!m.member && !m.zeroQuad) throw Error(Errc::InternalError, pcf.str() + " is not on V(" + F.str() + ")");
  pt.zeroQuad = m.zeroQuad;
  pt.convergent = isConvergent(pcf).convergent;
  if (pt.convergent) pt.limit = limit(pcf, precision);
  return pt;
}

void sortPoints(std::vector<LocusPoint>& points) {
  std::sort(points.begin(), points.end(),
            [](const LocusPoint& a, const LocusPoint& b) { return a.coords() < b.coords(); });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const LocusPoint& a, const LocusPoint& b) { return a.coords() == b.coords(); }),
               points.end());
}

std::vector<Rational> scanCandidates(const Prime& p, long height, long jMin, long jMax) {
  std::vector<Rational> out;
  for (long j = jMin; j <= jMax; ++j) {
    const Integer scale = ipow(p.value(), static_cast<unsigned long>(j < 0 ? -j : j));
    for (long m = -height; m <= height; ++m)
      out.push_back(j >= 0 ? Rational(Integer(m), scale) : Rational(Integer(Integer(m) * scale)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void requireNonzero(const QuadPoly& F) {
  if (F.isZero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial has an empty convergent locus");
}

// v_p with the convention that 0 has valuation +infinity, widened so sums
// of two valuations cannot overflow.
long long vpWide(const Rational& x, const Prime& p) {
  const long v = vp(x, p);
  return v == kInfiniteValuation ? static_cast<long long>(kInfiniteValuation) : v;
}

std::string powerText(const Prime& p, long e) {
  return e == 0 ? "1" : p.str() + "^" + std::to_string(e);
}

}  // namespace

LocusResult locus01(const QuadPoly& F, const Prime& p, long precision) {
  requireNonzero(F);
  LocusResult out;
  out.complete = true;
  if (F.A.isZero() || F.A != -F.C) return out;
  const Rational a1 = -F.B / F.A;
  if (!inO(a1, p)) return out;
  LocusPoint pt = evaluatePoint(p, {}, {a1}, F, precision);
  if (pt.convergent != (vpWide(F.B, p) < vpWide(F.A, p)))
    throw Error(Errc::InternalError, "type (0,1) convergence disagrees with |B|_p > |A|_p");
  if (rationalSqrt(F.discriminant())) {
    // Reducible: the roots are units of Z[1/p] with product -1.
    const long alpha = std::labs(vp(std::get<Rational>(quadRootsAlgebraic(F).front()), p));
    out.notes.push_back("reducible: roots {+-1/" + powerText(p, alpha) + ", -+" + powerText(p, alpha) +
                        "}, alpha = " + std::to_string(alpha));
  }
  out.points.push_back(std::move(pt));
  return out;
}

LocusResult locus11(const QuadPoly& F, const Prime& p, long precision) {
  requireNonzero(F);
  LocusResult out;
  out.complete = true;
  if (F.A.isZero()) return out;
  const Rational bA = F.B / F.A, cA = F.C / F.A;
  if (!inO(bA, p) || !inO(cA, p)) return out;
  const Rational disc = F.B * F.B - Rational(4) * F.A * (F.A + F.C);
  const auto root = rationalSqrt(disc);
  if (!root) return out;
  const Rational b1 = (-F.B + *root) / (Rational(2) * F.A);
  const Rational b1Star = -bA - b1;
  if (!inO(b1, p)) throw Error(Errc::InternalError, "root of F + A outside Z[1/p]");
  const bool expected = vpWide(disc, p) < 2 * vpWide(F.A, p);
  for (const Rational& b : {b1, b1Star}) {
    LocusPoint pt = evaluatePoint(p, {b}, {Rational(2) * b + bA}, F, precision);
    if (pt.convergent != expected)
      throw Error(Errc::InternalError, "type (1,1) convergence disagrees with the discriminant test");
    out.points.push_back(std::move(pt));
  }
  sortPoints(out.points);
  return out;
}

namespace {

// A = 0: B, C scaled to coprime integers with B > 0.
LocusResult locus21Linear(const QuadPoly& F, const Prime& p, long precision) {
  LocusResult out;
  out.complete = true;
  Integer lcm = 1;
  mpz_lcm(lcm.get_mpz_t(), F.B.den().get_mpz_t(), F.C.den().get_mpz_t());
  Integer b = (F.B * Rational(lcm)).num(), c = (F.C * Rational(lcm)).num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  b /= g, c /= g;
  if (b < 0) b = -b, c = -c;
  const QuadPoly G{0, Rational(b), Rational(c)};

  Integer rest = b;
  const long beta = removeFactor(rest, p.value());
  const Integer pBeta = ipow(p.value(), static_cast<unsigned long>(beta));
  std::vector<long> alphas;
  for (long alpha = 0;; ++alpha) {
    const Integer q = ipow(p.value(), static_cast<unsigned long>(2 * alpha)) + 1;
    if (q > rest) break;
    if (q == rest) alphas.push_back(alpha);
  }
  if (alphas.size() > 1) out.notes.push_back("diagnostic: B admits several decompositions p^beta (p^(2 alpha) + 1)");
  for (long alpha : alphas) {
    const Integer pAlpha = ipow(p.value(), static_cast<unsigned long>(alpha));
    const Integer q = pAlpha * pAlpha + 1;
    if (alpha == 0) {
      const Rational den(Integer(2 * pBeta));
      out.points.push_back(evaluatePoint(p, {-(Rational(c) + Rational(pBeta)) / den, 1}, {0}, G, precision));
      out.points.push_back(evaluatePoint(p, {-(Rational(c) - Rational(pBeta)) / den, -1}, {0}, G, precision));
      continue;
    }
    for (int eps : {1, -1}) {
      const Integer shifted = c + eps * pAlpha * pBeta;
      if (mpz_divisible_p(shifted.get_mpz_t(), q.get_mpz_t()) == 0) continue;
      const Integer k = shifted / q;
      const Rational b1 = -Rational(k, pBeta);
      const Rational pa(pAlpha), gap = pa - pa.inverse();
      out.points.push_back(evaluatePoint(p, {b1, Rational(eps) * pa}, {Rational(eps) * gap}, G, precision));
      out.points.push_back(evaluatePoint(p, {b1, Rational(eps) * pa.inverse()}, {Rational(-eps) * gap}, G, precision));
      out.notes.push_back("alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta) +
                          ", k = " + k.get_str() + ", eps1 = " + std::to_string(eps));
    }
  }
  sortPoints(out.points);
  return out;
}

}  // namespace

LocusResult locus21(const QuadPoly& F, const Prime& p, ScanBounds bounds, long precision, Exec exec) {
  requireNonzero(F);
  if (F.A.isZero() && F.B.isZero()) {
    LocusResult out;
    out.complete = true;
    out.notes.push_back("A = B = 0 forces b2^2 + 1 = 0");
    return out;
  }
  if (F.A.isZero()) return locus21Linear(F, p, precision);

  LocusResult out;
  const Rational delta = F.discriminant();
  if (delta.sign() <= 0 || delta == Rational(4) * F.A * F.A) {
    out.complete = true;
    return out;
  }
  const std::vector<Rational> b2s = scanCandidates(p, bounds.height, -bounds.valuationDepth, bounds.valuationDepth);
  auto rows = mapIndexed<std::vector<LocusPoint>>(exec, b2s.size(), [&](std::size_t i) {
    const Rational& b2 = b2s[i];
    const Rational s = b2 * b2 + 1;
    const Rational qa = F.A * s;
    const Rational qb = Rational(2) * F.A * b2 + F.B * s;
    const Rational qc = F.A + F.B * b2 + F.C * s;
    std::vector<LocusPoint> row;
    const auto root = rationalSqrt(qb * qb - Rational(4) * qa * qc);
    if (!root) return row;
    for (const Rational& b1 : {(-qb + *root) / (Rational(2) * qa), (-qb - *root) / (Rational(2) * qa)}) {
      if (!inO(b1, p)) continue;
      const Rational den = Rational(2) * F.A * b1 * b2 + F.B * b2 + F.A;
      if (den.isZero()) continue;
      const Rational num = Rational(2) * F.A * b1 * b2 * b2 + F.B * b2 * b2 - Rational(2) * F.A * b1 +
                           Rational(2) * F.A * b2 - F.B;
      const Rational a1 = num / den;
      if (!inO(a1, p)) continue;
      LocusPoint pt = evaluatePoint(p, {b1, b2}, {a1}, F, precision);
      if (pt.convergent != (vpWide(num, p) < vpWide(den, p)))
        throw Error(Errc::InternalError, "type (2,1) convergence disagrees with the a1 valuation test");
      row.push_back(std::move(pt));
    }
    return row;
  });
  for (auto& row : rows)
    for (auto& pt : row) out.points.push_back(std::move(pt));
  sortPoints(out.points);
  out.notes.push_back("bounded scan: b2 = m/p^j, |m| <= " + std::to_string(bounds.height) +
                      ", |j| <= " + std::to_string(bounds.valuationDepth));
  return out;
}

namespace {

// a1*a2 = -(p^k + 1)^2 / (4^eps p^k), k > 0.
std::optional<std::pair<long, int>> negatedPlusForm(const Rational& x, const Prime& p) {
  if (x.sign() >= 0) return std::nullopt;
  const long k = -vp(x, p);
  if (k <= 0) return std::nullopt;
  const Integer pk = ipow(p.value(), static_cast<unsigned long>(k));
  const Rational target(Integer((pk + 1) * (pk + 1)));
  for (int eps : {0, 1})
    if (-x * Rational(eps == 0 ? 1 : 4) * Rational(pk) == target) return std::make_pair(k, eps);
  return std::nullopt;
}

}  // namespace

LocusResult locus02(const QuadPoly& F, const Prime& p, long precision) {
  requireNonzero(F);
  LocusResult out;
  out.complete = true;
  if (F.A.isZero() && F.B.isZero()) {
    out.families.push_back({"a2=0", "(a1, 0) for a1 in O", false});
    return out;
  }
  if (!F.A.isZero() && F.B.isZero() && F.C.isZero()) {
    out.families.push_back({"a1=0", "(0, a2) for a2 in O", false});
    return out;
  }
  out.points.push_back(evaluatePoint(p, {}, {0, 0}, F, precision));
  if (!F.A.isZero() && !F.B.isZero() && !F.C.isZero()) {
    const Rational a1 = -F.B / F.A, a2 = F.B / F.C;
    if (inO(a1, p) && inO(a2, p)) {
      LocusPoint pt = evaluatePoint(p, {}, {a1, a2}, F, precision);
      const bool expected = 2 * vpWide(F.B, p) < vpWide(F.A, p) + vpWide(F.C, p);
      if (pt.convergent != expected)
        throw Error(Errc::InternalError, "type (0,2) convergence disagrees with |B|^2 > |AC|");
      if (F.A == -F.C) out.notes.push_back("A = -C: the point has equal entries and is of type (0,1)");
      if (pt.convergent && rationalSqrt(F.discriminant())) {
        if (auto kp = reducible02Params(a1, a2, p))
          out.notes.push_back("reducible: a1*a2 = +-(p^k - 1)^2 / (4^eps p^k) with k = " +
                              std::to_string(kp->first) + ", eps = " + std::to_string(kp->second));
        else if (auto kq = negatedPlusForm(a1 * a2, p))
          out.notes.push_back("reducible: a1*a2 = -(p^k + 1)^2 / (4^eps p^k) with k = " +
                              std::to_string(kq->first) + ", eps = " + std::to_string(kq->second));
        else
          throw Error(Errc::InternalError, "reducible convergent (0,2) point outside the expected form");
      }
      out.points.push_back(std::move(pt));
    }
  }
  sortPoints(out.points);
  return out;
}

std::optional<std::pair<long, int>> reducible02Params(const Rational& a1, const Rational& a2, const Prime& p) {
  const Rational x = a1 * a2;
  if (x.isZero()) return std::nullopt;
  const long k = -vp(x, p);
  if (k <= 0) return std::nullopt;
  const Integer pk = ipow(p.value(), static_cast<unsigned long>(k));
  const Rational target(Integer((pk - 1) * (pk - 1)));
  for (int eps : {0, 1})
    if (x.abs() * Rational(eps == 0 ? 1 : 4) * Rational(pk) == target) return std::make_pair(k, eps);
  return std::nullopt;
}

bool reducible02Form(const Rational& a1, const Rational& a2, const Prime& p) {
  return reducible02Params(a1, a2, p).has_value();
}

LocusResult locus12At(const QuadPoly& F, const Prime& p, const Rational& b1, long precision) {
  requireNonzero(F);
  if (F.A.isZero()) throw Error(Errc::ZeroLeadingCoeff, "A = 0 gives an empty convergent (1,2) locus");
  if (!inO(b1, p)) throw Error(Errc::NotInO, b1.str() + " is not in Z[1/" + p.str() + "]");
  const Rational fb = F(b1);
  if (fb.isZero()) throw Error(Errc::RootInput, b1.str() + " is a root of " + F.str());
  LocusResult out;
  out.complete = true;
  const Rational d = F.derivative(b1);
  const Rational bA = F.B / F.A;
  if (d.isZero() || !inO(d / fb, p) || !inO(bA, p)) return out;
  if (!(2 * vpWide(d, p) < vpWide(F.A, p) + vpWide(fb, p))) return out;
  for (auto [b, a1, a2] : {std::tuple{b1, -d / fb, d / F.A}, std::tuple{-b1 - bA, d / fb, -d / F.A}}) {
    LocusPoint pt = evaluatePoint(p, {b}, {a1, a2}, F, precision);
    if (!pt.convergent) throw Error(Errc::InternalError, "type (1,2) point fails the criterion");
    out.points.push_back(std::move(pt));
  }
  sortPoints(out.points);
  return out;
}

LocusResult locus12Scan(const QuadPoly& F, const Prime& p, ScanBounds bounds, long precision, Exec exec) {
  requireNonzero(F);
  LocusResult out;
  out.families.push_back({"R1", "(b1, 0, 0) for b1 in O", false});
  if (F.A.isZero()) {
    out.complete = true;
    if (F.B.isZero()) out.families.push_back({"A=B=0", "(b1, 0, a2) for b1, a2 in O", false});
    return out;
  }
  const Rational bA = F.B / F.A;
  if (F.discriminant().isZero()) {
    out.complete = true;
    const Rational half = bA / Rational(2);
    if (!inO(bA, p)) return out;
    if (!inO(half, p)) {
      out.families.push_back({"C1", "((+-p^u - B/A)/2, -+4 p^-u, +-p^u) for u in Z, with B/A = " + bA.str(), false});
      return out;
    }
    out.families.push_back({"R2", "(" + (-half).str() + ", a1, 0) for a1 in O", false});
    out.families.push_back(
        {"C2", "((+-x p^u - B/A)/2, -+4 p^-u / x, +-x p^u) for x in {2, 4}, u in Z, with B/A = " + bA.str(), false});
    return out;
  }
  if (!inO(bA, p)) {
    out.complete = true;
    return out;
  }

  // |b1|_p <= max(|B/A|_p, |C/A|_p^(1/2)), i.e. 2 v(b1) >= min(2 v(B/A), v(C/A)).
  const long long bound = std::min(bA.isZero() ? LLONG_MAX : 2 * vpWide(bA, p),
                                   F.C.isZero() ? LLONG_MAX : vpWide(F.C / F.A, p));
  std::vector<Rational> b1s;
  for (const Rational& b : scanCandidates(p, bounds.height, 0, bounds.valuationDepth))
    if (b.isZero() || bound == LLONG_MAX || 2 * vpWide(b, p) >= bound) b1s.push_back(b);

  auto rows = mapIndexed<std::vector<LocusPoint>>(exec, b1s.size(), [&](std::size_t i) {
    if (F(b1s[i]).isZero()) return std::vector<LocusPoint>{};
    return locus12At(F, p, b1s[i], precision).points;
  });
  for (auto& row : rows)
    for (auto& pt : row) out.points.push_back(std::move(pt));
  sortPoints(out.points);
  out.notes.push_back("bounded scan: b1 = m/p^j, |m| <= " + std::to_string(bounds.height) +
                      ", 0 <= j <= " + std::to_string(bounds.valuationDepth));
  return out;
}

}  // namespace pcf
