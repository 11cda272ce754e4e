#include "pcf/radical03.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

bool dFilter(const Integer& d) {
  if (d <= 0) return false;
  if (mpz_divisible_ui_p(d.get_mpz_t(), 4) != 0) return false;
  for (const auto& [q, e] : factorize(d))
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) return false;
  return true;
}

std::optional<Radical03Solution> radical03Candidate(const Integer& d, const Integer& a1, const Integer& a3,
                                                    const std::optional<Integer>& p, long precision) {
  if (a1 * a1 - d * a3 * a3 != d - 1) return std::nullopt;
  const Integer t = a1 - d * a3;
  if (t == 0) return std::nullopt;
  const Rational a2(d - 1, t);
  if (a2.isInteger()) return std::nullopt;

  Integer prime;
  long s = 0;
  if (p) {
    Integer rest = a2.den();
    s = removeFactor(rest, *p);
    if (rest != 1) return std::nullopt;
    prime = *p;
  } else {
    const auto pp = primePowerDecomposition(a2.den());
    if (!pp || pp->first == 2) return std::nullopt;
    std::tie(prime, s) = *pp;
  }
  const Integer v = a2.num();
  const Integer prod = a1 * a3 * v;
  if (mpz_divisible_p(prod.get_mpz_t(), prime.get_mpz_t()) != 0) return std::nullopt;

  Radical03Solution sol;
  sol.d = d;
  sol.p = prime;
  sol.s = s;
  sol.a1 = a1;
  sol.a2 = a2;
  sol.a3 = a3;
  sol.v = v;
  sol.classGcd = (1 - a1 * a3) / ipow(prime, static_cast<unsigned long>(s));

  const PCF pcf = sol.pcf();
  const QuadPoly F{1, 0, -Rational(d)};
  if (!inVariety(pcf, F).member || !isConvergent(pcf).convergent)
    throw Error(Errc::InternalError, pcf.str() + " fails verification as an expansion of sqrt(" + d.get_str() + ")");
  const LimitResult lim = limit(pcf, precision);
  const long slack = lim.kind == LimitKind::PAdic ? 2 * std::labs(std::get<PAdicApprox>(lim.value).valuation()) : 0;
  sol.limitVerified = approxRootOf(lim.value, F, std::max(1L, precision - slack));
  return sol;
}

namespace {

void sortSolutions(std::vector<Radical03Solution>& sols) {
  auto key = [](const Radical03Solution& s) {
    return std::make_tuple(s.p, Integer(abs(s.a1)), s.a1, s.a3);
  };
  std::sort(sols.begin(), sols.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

}  // namespace

std::vector<Radical03Solution> search03(const Integer& d, const Search03Options& options, Exec exec) {
  if (d < 2) return {};
  if (!isSquareFree(d)) throw Error(Errc::NotSquareFree, d.get_str() + " is not square-free");
  if (options.p) Prime check(*options.p);
  if (!dFilter(d)) return {};

  const PellClassSet classes = pellClasses(d, d - 1, exec, options.maxClassScan);
  std::vector<std::pair<Integer, Integer>> pairs;
  for (const PellPair& f : classes.fundamentals)
    for (const PellPair& s : classOrbit(f, classes.unit, options.maxIndex)) {
      pairs.emplace_back(s.u, s.v);
      pairs.emplace_back(-s.u, -s.v);
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  auto found = mapIndexed<std::optional<Radical03Solution>>(exec, pairs.size(), [&](std::size_t i) {
    return radical03Candidate(d, pairs[i].first, pairs[i].second, options.p, options.precision);
  });
  std::vector<Radical03Solution> out;
  for (auto& s : found)
    if (s && (!options.primeBound || s->p <= *options.primeBound)) out.push_back(std::move(*s));
  sortSolutions(out);
  return out;
}

Integer boundPs(const Integer& d, const Integer& classGcd, const Prime& p) {
  const Integer n = d + 1;
  const Integer cube = n * n * n;
  const Integer root = isqrt(cube);
  const Integer ceilRoot = root * root == cube ? root : Integer(root + 1);
  const long v = n == 0 ? 0 : valuation(n, p.value());
  return abs(classGcd) * ipow(p.value(), static_cast<unsigned long>(2 * v)) * (ceilRoot + 2 * d);
}

Integer fPoly(long n, const Integer& a) {
  Integer f0 = 1;
  if (n == 0) return f0;
  Integer f1 = -2 * a * a * a + 2 * a * a - 2 * a + 1;
  const Integer c = 2 * (2 * a * a + 1);
  for (long i = 1; i < n; ++i) {
    Integer f2 = c * f1 - f0;
    f0 = std::move(f1);
    f1 = std::move(f2);
  }
  return f1;
}

std::vector<Radical03Solution> familyA2plus1(const Integer& a, long maxN, long precision, Exec exec) {
  if (a < 1 || maxN < 1) return {};
  const Integer d = a * a + 1;
  const Integer u1 = 2 * a * a + 1, v1 = 2 * a;
  std::vector<PellPair> units{{u1, v1}};
  for (long n = 2; n <= maxN; ++n) {
    const PellPair& w = units.back();
    units.push_back({u1 * w.u + d * v1 * w.v, v1 * w.u + u1 * w.v});
  }
  auto found = mapIndexed<std::optional<Radical03Solution>>(exec, units.size(), [&](std::size_t i) {
    const long n = static_cast<long>(i) + 1;
    const Integer f = fPoly(n, a);
    if (f != units[i].u - d * units[i].v)
      throw Error(Errc::InternalError, "f_n(a) differs from u*_n - d v*_n at n = " + std::to_string(n));
    const auto pp = primePowerDecomposition(f);
    if (!pp || pp->first == 2) return std::optional<Radical03Solution>{};
    auto sol = radical03Candidate(d, a * units[i].u, a * units[i].v, pp->first, precision);
    if (!sol) throw Error(Errc::InternalError, "family point rejected at n = " + std::to_string(n));
    return sol;
  });
  std::vector<Radical03Solution> out;
  for (auto& s : found)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::vector<Radical03Solution> familyNegPell(const Integer& d, long maxN, long precision, Exec exec) {
  const auto neg = negPell(d);
  if (!neg) throw Error(Errc::NoNegativePell, "x^2 - " + d.get_str() + " y^2 = -1 has no solution");
  const Integer u1 = neg->u * neg->u + d * neg->v * neg->v, v1 = 2 * neg->u * neg->v;
  std::vector<PellPair> st{*neg};
  for (long n = 2; n <= maxN; ++n) {
    const PellPair& w = st.back();
    st.push_back({u1 * w.u + d * v1 * w.v, v1 * w.u + u1 * w.v});
  }
  auto found = mapIndexed<std::vector<Radical03Solution>>(exec, st.size(), [&](std::size_t i) {
    std::vector<Radical03Solution> row;
    const Integer& s = st[i].u;
    const Integer& t = st[i].v;
    const Integer p = abs(s);
    if (p == 2 || !isProbablePrime(p)) return row;
    for (int sign : {1, -1}) {
      auto sol = radical03Candidate(d, sign * s + d * t, sign * s + t, p, precision);
      if (!sol) throw Error(Errc::InternalError, "negative Pell point rejected for p = " + p.get_str());
      row.push_back(std::move(*sol));
    }
    return row;
  });
  std::vector<Radical03Solution> out;
  for (auto& row : found)
    for (auto& s : row) out.push_back(std::move(s));
  return out;
}

namespace {

// Coprime integers (b, c) proportional to (B, C).
std::pair<Integer, Integer> coprimePair(const Rational& B, const Rational& C) {
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), B.den().get_mpz_t(), C.den().get_mpz_t());
  Integer b = (B * Rational(lcm)).num(), c = (C * Rational(lcm)).num(), g;
  mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  return {b / g, c / g};
}

// Exponents l with B1 | p^(2|l|) + 1, B1 the prime-to-p part of b.
struct ExponentPlan {
  std::vector<long> exponents;
  std::string note;
};

ExponentPlan admissibleExponents(const Integer& b, const Prime& p, long indexBound) {
  ExponentPlan plan;
  Integer b1 = abs(b);
  removeFactor(b1, p.value());
  if (b1 <= 2) {
    for (long l = -indexBound; l <= indexBound; ++l) plan.exponents.push_back(l);
    plan.note = "B1 = " + b1.get_str() + ": every exponent l is admissible";
    return plan;
  }
  const Integer ord = multiplicativeOrder(p.value(), b1);
  Integer half;
  if (mpz_divisible_ui_p(ord.get_mpz_t(), 4) != 0) {
    const Integer e = ord / 2;
    mpz_powm(half.get_mpz_t(), p.value().get_mpz_t(), e.get_mpz_t(), b1.get_mpz_t());
  }
  if (half != b1 - 1) {
    plan.note = "order of p modulo B1 = " + b1.get_str() + " is " + ord.get_str() +
                (mpz_divisible_ui_p(ord.get_mpz_t(), 4) != 0 ? ", but p^(ord/2) != -1" : ", not a multiple of 4");
    return plan;
  }
  const long s = Integer(ord / 4).get_si();
  for (long t = -indexBound; t <= indexBound; ++t) plan.exponents.push_back(s * (1 + 2 * t));
  plan.note = "order of p modulo B1 = " + b1.get_str() + " is 4s with s = " + std::to_string(s) +
              "; admissible exponents l = s(1 + 2t)";
  return plan;
}

Rational signedPower(const Prime& p, long l, int sign) {
  const Rational q(ipow(p.value(), static_cast<unsigned long>(std::labs(l))));
  return Rational(sign) * (l >= 0 ? q : q.inverse());
}

}  // namespace

LocusResult degenerate03(const QuadPoly& F, const Prime& p, long indexBound, long precision) {
  if (F.isZero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial has an empty convergent locus");
  LocusResult out;
  const bool a0 = F.A.isZero(), b0 = F.B.isZero(), c0 = F.C.isZero();
  if ((a0 && b0) || (b0 && c0)) {
    out.complete = true;
    out.notes.push_back(a0 ? "A = B = 0 forces a2^2 = -1" : "B = C = 0 forces a2^2 = -1");
    return out;
  }
  if (a0 && c0) {
    out.complete = true;
    out.families.push_back({"A=C=0", "(a, -1/a, a) for a a unit of Z[1/p]", false});
    return out;
  }
  if (!a0 && !c0) throw Error(Errc::NotDegenerate, F.str() + " has A C != 0");

  // C = 0 reduces to A = 0 through the reversal (a1, a2, a3) -> (a3, a2, a1)
  // with G = -B x + A.
  const bool mirrored = c0;
  const auto [b, c] = mirrored ? coprimePair(-F.B, F.A) : coprimePair(F.B, F.C);
  const ExponentPlan plan = admissibleExponents(b, p, indexBound);
  out.notes.push_back(plan.note);
  const Rational cb = Rational(c) / Rational(b);
  for (long l : plan.exponents)
    for (int sign : {1, -1}) {
      const Rational a3 = signedPower(p, l, sign);
      const Rational a2 = -a3.inverse();
      const Rational a1 = -cb * (a3 * a3 + 1) + a3;
      if (!inO(a1, p)) throw Error(Errc::InternalError, "degenerate (0,3) point outside Z[1/p]");
      std::vector<Rational> period{a1, a2, a3};
      if (mirrored) std::reverse(period.begin(), period.end());
      LocusPoint pt = evaluatePoint(p, {}, std::move(period), F, precision);
      const bool expected = mirrored ? (vp(pt.period[0], p) > 0 && pt.period[0] != -F.B / F.A)
                                     : (vp(a3, p) < 0 && a3 != F.B / F.C);
      if (pt.convergent != expected)
        out.notes.push_back("diagnostic: criterion and closed-form convergence test disagree at " +
                            pt.pcf(p).str());
      out.points.push_back(std::move(pt));
    }
  if (!plan.exponents.empty())
    out.families.push_back(
        {mirrored ? "C=0" : "A=0",
         mirrored ? "(+-p^l, -+p^-l, A/B (p^(2l) + 1) +- p^l) for admissible l"
                  : "(-C/B (p^(2l) + 1) +- p^l, -+p^-l, +-p^l) for admissible l",
         std::any_of(out.points.begin(), out.points.end(), [](const LocusPoint& q) { return q.convergent; })});
  sortPoints(out.points);
  return out;
}

}  // namespace pcf
