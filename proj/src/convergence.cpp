#include "pcf/convergence.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "pcf/detail/overloaded.hpp"
#include "pcf/error.hpp"

namespace pcf {

using detail::Overloaded;

ConvergenceReport isConvergent(std::span<const Rational> period, const Prime& p) {
  if (period.empty()) throw Error(Errc::EmptyPeriod, "period must be nonempty");
  ConvergenceReport r;
  r.trace = cfMatrix(period).trace();
  r.traceValuation = vp(r.trace, p);
  if (r.traceValuation >= 0) {
    r.failed = FailedCondition::TraceTooSmall;
    return r;
  }
  const std::size_t k = period.size();
  std::vector<Rational> shifted(period.begin(), period.end());
  for (std::size_t j = 1; j <= k; ++j) {
    const Mat2 m = cfMatrix(shifted);
    if (m.e21.isZero() && vp(m.e22, p) <= 0) {
      r.failed = FailedCondition::ShiftCondition;
      r.shift = j;
      return r;
    }
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
  }
  r.convergent = true;
  return r;
}

ConvergenceReport isConvergent(const PCF& pcf) { return isConvergent(pcf.period(), pcf.prime()); }

namespace {

// The eigenvalue attached to a root beta is E21*beta + E22.
bool dominant(const AlgebraicPoint& root, const Mat2& e, const Prime& p) {
  return std::visit(
      Overloaded{
          [&](const Rational& b) { return vp(e.e21 * b + e.e22, p) < 0; },
          [&](const Infinity&) { return e.e21.isZero() && vp(e.e11, p) < 0; },
          [&](const QuadSurd& b) {
            const QuadSurd mu = b * b.withRational(e.e21) + b.withRational(e.e22);
            return toPadic(mu, p, 2).valuation() < 0;
          }},
      root);
}

AlgebraicPoint moebius(const Mat2& m, const AlgebraicPoint& z) {
  auto fromProj = [](const ProjPoint& q) -> AlgebraicPoint {
    if (q.isInfinity()) return Infinity{};
    return q.x / q.y;
  };
  return std::visit(Overloaded{[&](const Rational& b) { return fromProj(m.apply({b, 1})); },
                               [&](const Infinity&) { return fromProj(m.apply({1, 0})); },
                               [&](const QuadSurd& b) -> AlgebraicPoint {
                                 return (b * b.withRational(m.e11) + b.withRational(m.e12)) /
                                        (b * b.withRational(m.e21) + b.withRational(m.e22));
                               }},
                    z);
}

}  // namespace

LimitResult limit(const PCF& pcf, long precision) {
  const ConvergenceReport report = isConvergent(pcf);
  if (!report.convergent) throw Error(Errc::NotConvergent, pcf.str() + " does not converge");
  const Mat2 e = cfMatrix(pcf.period());
  const QuadPoly quad{e.e21, e.e22 - e.e11, -e.e12};
  if (quad.isZero()) throw Error(Errc::InternalError, "convergent PCF with zero Quad");

  const std::vector<AlgebraicPoint> roots = quadRootsAlgebraic(quad);
  const auto it = std::find_if(roots.begin(), roots.end(),
                               [&](const AlgebraicPoint& r) { return dominant(r, e, pcf.prime()); });
  if (it == roots.end()) throw Error(Errc::InternalError, "no dominant root for " + pcf.str());

  AlgebraicPoint exact = *it;
  if (!pcf.preperiod().empty()) exact = moebius(cfMatrix(pcf.preperiod()), exact);

  LimitResult out{LimitKind::ExactRational, Rational(0), exact};
  std::visit(Overloaded{[&](const Rational& r) { out.value = r; },
                        [&](const Infinity&) {
                          out.kind = LimitKind::Infinity;
                          out.value = Infinity{};
                        },
                        [&](const QuadSurd& s) {
                          out.kind = LimitKind::PAdic;
                          out.value = toPadic(s, pcf.prime(), precision);
                        }},
             exact);
  return out;
}

bool approxRootOf(const P1Value& value, const QuadPoly& F, long digits) {
  return std::visit(
      Overloaded{[&](const Rational& r) { return F(r).isZero(); },
                 [&](const Infinity&) { return F.A.isZero(); },
                 [&](const PAdicApprox& r) {
                   if (r.isZero()) return F.C.isZero();
                   const Prime& p = r.prime();
                   const Integer pv = ipow(p.value(), static_cast<unsigned long>(std::labs(r.valuation())));
                   const Rational R = r.valuation() >= 0 ? Rational(Integer(r.unitDigits() * pv))
                                                         : Rational(r.unitDigits(), pv);
                   const Rational v = F(R);
                   if (v.isZero()) return true;
                   long scale = kInfiniteValuation;
                   for (const Rational& t : {F.A * R * R, F.B * R, F.C})
                     if (!t.isZero()) scale = std::min(scale, vp(t, p));
                   return vp(v, p) - scale >= digits;
                 }},
      value);
}

long projectiveDistance(const ProjPoint& a, const ProjPoint& b, const Prime& p) {
  const Rational cross = a.x * b.y - b.x * a.y;
  if (cross.isZero()) return kInfiniteValuation;
  return vp(cross, p) - std::min(vp(a.x, p), vp(a.y, p)) - std::min(vp(b.x, p), vp(b.y, p));
}

OracleResult oracleConverges(const PCF& pcf, long precision, std::size_t n0, std::size_t n1) {
  OracleResult out;
  if (n0 < 1 || n1 <= n0) return out;
  // The preperiod acts by a fixed Moebius map, which shrinks chordal distances
  // by a constant factor, so only the periodic tail is measured.
  const PCF tail(pcf.prime(), {}, pcf.period());
  const std::size_t first = (n0 + n1) / 2;
  Rational a0 = 1, a1 = tail.quotient(1), b0 = 0, b1 = 1;
  for (std::size_t n = 2; n <= first; ++n) {
    const Rational& c = tail.quotient(n);
    a0 = std::exchange(a1, a1 * c + a0);
    b0 = std::exchange(b1, b1 * c + b0);
  }
  ProjPoint prev{a1, b1};
  out.consistent = true;
  out.minDistance = kInfiniteValuation;
  for (std::size_t n = first + 1; n <= n1; ++n) {
    const Rational& c = tail.quotient(n);
    a0 = std::exchange(a1, a1 * c + a0);
    b0 = std::exchange(b1, b1 * c + b0);
    ProjPoint cur{a1, b1};
    const long d = projectiveDistance(prev, cur, pcf.prime());
    if (d < out.minDistance) {
      out.minDistance = d;
      out.worstIndex = n;
    }
    if (d < precision) out.consistent = false;
    prev = std::move(cur);
  }
  out.witness = convergentAt(pcf, n1);
  return out;
}

std::vector<ConvergenceReport> classifyBatch(std::span<const PCF> batch, Exec exec) {
  return mapIndexed<ConvergenceReport>(exec, batch.size(), [&](std::size_t i) { return isConvergent(batch[i]); });
}

}  // namespace pcf
