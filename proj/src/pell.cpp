#include "pcf/pell.hpp"

#include <algorithm>

#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

std::string PellPair::str() const { return "(" + u.get_str() + ", " + v.get_str() + ")"; }

namespace {

void requireNonSquare(const Integer& d) {
  if (d < 2) throw Error(Errc::InternalError, "d must be at least 2, got " + d.get_str());
  if (isPerfectSquare(d)) throw Error(Errc::PerfectSquare, d.get_str() + " is a perfect square");
}

// Numerator and denominator of the convergent after `count` quotients of
// a0, period, period, ...
PellPair convergent(const SqrtCf& cf, std::size_t count) {
  Integer p0 = 1, p1 = cf.a0, q0 = 0, q1 = 1;
  for (std::size_t i = 1; i < count; ++i) {
    const Integer& a = cf.period[(i - 1) % cf.period.size()];
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = std::move(p1), p1 = std::move(p2);
    q0 = std::move(q1), q1 = std::move(q2);
  }
  return {p1, q1};
}

}  // namespace

SqrtCf sqrtCf(const Integer& d) {
  requireNonSquare(d);
  SqrtCf out{isqrt(d), {}};
  Integer m = 0, q = 1, a = out.a0;
  do {
    m = a * q - m;
    q = (d - m * m) / q;
    a = (out.a0 + m) / q;
    out.period.push_back(a);
  } while (a != 2 * out.a0);
  return out;
}

PellFundamental fundamentalUnit(const Integer& d) {
  const SqrtCf cf = sqrtCf(d);
  const std::size_t r = cf.period.size();
  const PellPair s = convergent(cf, r % 2 == 0 ? r : 2 * r);
  return {d, s.u, s.v};
}

std::optional<PellPair> negPell(const Integer& d) {
  const SqrtCf cf = sqrtCf(d);
  if (cf.period.size() % 2 == 0) return std::nullopt;
  return convergent(cf, cf.period.size());
}

Integer pellNorm(const PellPair& s, const Integer& d) { return s.u * s.u - d * s.v * s.v; }

PellPair brahmagupta(const PellPair& a, const PellPair& b, const Integer& d) {
  return {a.u * b.u + d * a.v * b.v, a.u * b.v + b.u * a.v};
}

bool sameClass(const PellPair& a, const PellPair& b, const Integer& d, const Integer& n) {
  const Integer x = a.u * b.u - d * a.v * b.v;
  const Integer y = a.u * b.v - b.u * a.v;
  return mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(y.get_mpz_t(), n.get_mpz_t()) != 0;
}

PellClassSet pellClasses(const Integer& d, const Integer& n, Exec exec, const std::optional<Integer>& vCap) {
  requireNonSquare(d);
  if (n == 0) throw Error(Errc::ZeroInput, "n must be nonzero");
  PellClassSet out{d, n, fundamentalUnit(d), {}};
  const Integer& uStar = out.unit.uStar;
  const Integer& vStar = out.unit.vStar;
  const Integer absN = abs(n);
  Integer vMax = isqrt(vStar * vStar * absN / (2 * (n > 0 ? Integer(uStar + 1) : Integer(uStar - 1))));
  if (vCap && *vCap < vMax) vMax = *vCap;

  const unsigned long count = vMax.get_ui() + 1;
  auto rows = mapIndexed<std::vector<PellPair>>(exec, count, [&](std::size_t i) {
    const Integer v(static_cast<unsigned long>(i));
    const Integer u2 = n + d * v * v;
    std::vector<PellPair> row;
    if (!isPerfectSquare(u2)) return row;
    const Integer u = isqrt(u2);
    row.push_back({u, v});
    if (u != 0) row.push_back({-u, v});
    return row;
  });

  // Rows arrive ordered by v with u descending, so the first candidate of
  // each class is its fundamental solution.
  for (const auto& row : rows)
    for (const auto& s : row)
      if (std::none_of(out.fundamentals.begin(), out.fundamentals.end(),
                       [&](const PellPair& f) { return sameClass(f, s, d, n); }))
        out.fundamentals.push_back(s);
  return out;
}

PellPair iterateClass(const PellPair& fund, const PellFundamental& unit, long i) {
  const PellPair step = i >= 0 ? unit.unit() : PellPair{unit.uStar, -unit.vStar};
  PellPair s = fund;
  for (long j = 0; j < (i >= 0 ? i : -i); ++j) s = brahmagupta(s, step, unit.d);
  return s;
}

PellPair iterateClass(const PellPair& fund, const Integer& d, long i) {
  return iterateClass(fund, fundamentalUnit(d), i);
}

std::vector<PellPair> classOrbit(const PellPair& fund, const PellFundamental& unit, long maxIndex) {
  std::vector<PellPair> out(static_cast<std::size_t>(2 * maxIndex + 1));
  const auto mid = static_cast<std::size_t>(maxIndex);
  out[mid] = fund;
  const PellPair inv{unit.uStar, -unit.vStar};
  for (std::size_t j = 1; j <= mid; ++j) {
    out[mid + j] = brahmagupta(out[mid + j - 1], unit.unit(), unit.d);
    out[mid - j] = brahmagupta(out[mid - j + 1], inv, unit.d);
  }
  return out;
}

}  // namespace pcf
