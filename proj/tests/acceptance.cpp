#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "pcf/cf.hpp"
#include "pcf/convergence.hpp"
#include "pcf/families13.hpp"
#include "pcf/loci.hpp"
#include "pcf/ntheory.hpp"
#include "pcf/radical03.hpp"

using namespace pcf;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

Rational R(const std::string& s) { return Rational::parse(s); }

Rational randomO(std::mt19937_64& rng, long p, long height, long depth) {
  std::uniform_int_distribution<long> m(-height, height), j(0, depth);
  return Rational(Integer(m(rng)), ipow(Integer(p), static_cast<unsigned long>(j(rng))));
}

Rational randomQ(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> n(-height, height), d(1, height);
  return Rational(Integer(n(rng)), Integer(d(rng)));
}

std::vector<Rational> randomList(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(randomQ(rng, 40));
  return out;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// x = p^v u: clears denominators in F(p^v u) = a u^2 + b u + c, removes the
// content and checks the value mod p^digits.
bool rootModulo(const PAdicApprox& x, const QuadPoly& F, long digits) {
  const Integer& p = x.prime().value();
  const Rational pv = x.valuation() >= 0 ? Rational(ipow(p, static_cast<unsigned long>(x.valuation())))
                                         : Rational(ipow(p, static_cast<unsigned long>(-x.valuation()))).inverse();
  const Rational A = F.A * pv * pv, B = F.B * pv, C = F.C;
  const Integer den = lcm(lcm(A.den(), B.den()), C.den());
  Integer a = (A * Rational(den)).num(), b = (B * Rational(den)).num(), c = (C * Rational(den)).num();
  const Integer g = gcd(gcd(a, b), c);
  a /= g, b /= g, c /= g;
  const Integer& u = x.unitDigits();
  return mod(a * u * u + b * u + c, ipow(p, static_cast<unsigned long>(digits))) == 0;
}

bool limitSquaresTo(const PCF& pcf, const Integer& d, long digits) {
  const LimitResult lim = limit(pcf, digits);
  const auto* x = std::get_if<PAdicApprox>(&lim.value);
  return x && x->valuation() == 0 && rootModulo(*x, QuadPoly{1, 0, Rational(Integer(-d))}, digits);
}

// Valuation of the chordal distance, independent of the library's version.
long chordal(const ProjPoint& a, const ProjPoint& b, const Prime& p) {
  const Rational cross = a.x * b.y - a.y * b.x;
  if (cross.isZero()) return kInfiniteValuation;
  return vp(cross, p) - std::min(vp(a.x, p), vp(a.y, p)) - std::min(vp(b.x, p), vp(b.y, p));
}

Verdict tableRows() {
  Verdict v;
  std::mt19937_64 rng(1001);
  const Rational one(1), two(2);
  using Row = std::function<QuadPoly(const std::vector<Rational>&, const std::vector<Rational>&)>;
  const std::vector<std::tuple<std::size_t, std::size_t, Row>> rows = {
      {0, 1, [&](auto&, auto& a) { return QuadPoly{one, -a[0], -one}; }},
      {1, 1, [&](auto& b, auto& a) { return QuadPoly{one, a[0] - two * b[0], b[0] * b[0] - a[0] * b[0] - one}; }},
      {2, 1,
       [&](auto& b, auto& a) {
         const Rational &b1 = b[0], &b2 = b[1], &a1 = a[0];
         return QuadPoly{b2 * a1 - b2 * b2 + one, -two * a1 * b1 * b2 + two * b1 * b2 * b2 - a1 - two * b1 + two * b2,
                         a1 * b1 * b1 * b2 - b1 * b1 * b2 * b2 + a1 * b1 + b1 * b1 - two * b2 * b1 - one};
       }},
      {0, 2, [&](auto&, auto& a) { return QuadPoly{a[1], -a[0] * a[1], -a[0]}; }},
      {1, 2,
       [&](auto& b, auto& a) {
         const Rational &b1 = b[0], &a1 = a[0], &a2 = a[1];
         return QuadPoly{a1, a2 * a1 - two * b1 * a1, -a1 * a2 * b1 + a1 * b1 * b1 - a2};
       }},
      {0, 3,
       [&](auto&, auto& a) {
         const Rational &a1 = a[0], &a2 = a[1], &a3 = a[2];
         return QuadPoly{a2 * a3 + one, -a1 * a2 * a3 - a1 + a2 - a3, -a2 * a1 - one};
       }},
      {1, 3,
       [&](auto& b, auto& a) {
         const Rational &b1 = b[0], &a1 = a[0], &a2 = a[1], &a3 = a[2];
         return QuadPoly{a1 * a2 + one, a1 * a2 * a3 - two * a1 * a2 * b1 + a1 - a2 + a3 - two * b1,
                         -a1 * a2 * a3 * b1 + a1 * a2 * b1 * b1 - a1 * b1 - a2 * a3 + a2 * b1 - a3 * b1 + b1 * b1 - one};
       }},
  };
  for (const auto& [N, k, row] : rows)
    for (int i = 0; i < 1000; ++i) {
      const auto pre = randomList(rng, N), per = randomList(rng, k);
      const QuadPoly expected = row(pre, per);
      v.require(quadOf(pre, per) == expected, "quadOf row (" + std::to_string(N) + "," + std::to_string(k) + ")");
      const auto t = tableQuad(pre, per);
      v.require(t && *t == expected, "tableQuad row (" + std::to_string(N) + "," + std::to_string(k) + ")");
    }
  v.detail << "7 rows x 1000 random rational instantiations";
  return v;
}

Verdict shiftCounterexample() {
  Verdict v;
  for (long p : {3L, 5L, 7L}) {
    const Prime P(p);
    const Rational q(p);
    const PCF pcf(P, {}, {1, -q.inverse(), q});
    const auto r = isConvergent(pcf);
    v.require(!r.convergent && r.failed == FailedCondition::ShiftCondition, "p=" + std::to_string(p) + " verdict");
    const ProjPoint finite{(1 - q) / (q * q + 1), 1}, inf{1, 0};
    for (std::size_t n = 30; n <= 60; ++n) {
      const ProjPoint c = convergentAt(pcf, n);
      const long dist = chordal(c, n % 3 == 0 ? inf : finite, P);
      v.require(dist >= 6, "p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  }
  v.detail << "ShiftCondition for p = 3, 5, 7; n = 30..60 within p^-6 of infinity (n = 0 mod 3) or (1-p)/(p^2+1)";
  return v;
}

Verdict limitZero() {
  Verdict v;
  for (long p : {3L, 5L, 7L}) {
    const Rational q(p);
    const PCF pcf(Prime(p), {}, {q, -q.inverse(), 1});
    v.require(isConvergent(pcf).convergent, "p=" + std::to_string(p) + " convergent");
    const LimitResult lim = limit(pcf);
    v.require(lim.kind == LimitKind::ExactRational && std::get<Rational>(lim.value).isZero(),
              "p=" + std::to_string(p) + " limit 0");
  }
  v.detail << "[overline(p, -1/p, 1)] -> 0 exactly for p = 3, 5, 7";
  return v;
}

struct Golden {
  long d;
  long p;
  long a1;
  const char* a2;
  long a3;
};

const std::vector<Golden> kGolden = {
    {10, 53, 13, "9/53", -4},     {10, 53, -13, "-9/53", 4},     {10, 13, 7, "-9/13", 2},
    {5, 11, 7, "2/11", -3},       {2, 41, 17, "1/41", -12},      {10, 41, -57, "3/41", -18},
    {10, 547, 253, "-9/547", 80}, {10, 2027, 487, "9/2027", -154}, {10, 1559, 2163, "-3/1559", 684},
};

Verdict goldenSet() {
  Verdict v;
  for (const auto& g : kGolden) {
    const PCF pcf(Prime(g.p), {}, {g.a1, R(g.a2), g.a3});
    const std::string tag = pcf.str() + "_" + std::to_string(g.p);
    v.require(isConvergent(pcf).convergent, tag + " convergent");
    v.require(limitSquaresTo(pcf, g.d, 4), tag + " limit^2 = " + std::to_string(g.d));
  }
  v.detail << kGolden.size() << " expansions, limit^2 = d mod p^4";
  return v;
}

using Triple = std::tuple<Integer, Rational, Integer>;

std::set<Triple> triples(const std::vector<Radical03Solution>& sols) {
  std::set<Triple> out;
  for (const auto& s : sols) out.emplace(s.a1, s.a2, s.a3);
  return out;
}

Verdict searchRediscovery() {
  Verdict v;
  const auto fixed = search03(10, {.p = Integer(53), .maxIndex = 5});
  v.require(triples(fixed) == std::set<Triple>{{13, R("9/53"), -4}, {-13, R("-9/53"), 4}}, "p = 53 set");
  const auto all = triples(search03(10, {.maxIndex = 5}));
  std::size_t found = 0;
  for (const auto& g : kGolden) {
    if (g.d != 10) continue;
    const bool hit = all.count({Integer(g.a1), R(g.a2), Integer(g.a3)}) == 1;
    v.require(hit, "missing p=" + std::to_string(g.p));
    found += hit;
  }
  v.detail << "p = 53 gives exactly the two expansions; all-prime mode finds " << found
           << " of the listed d = 10 expansions among " << all.size();
  return v;
}

Verdict boundAndSweep() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& s : search03(10, {.maxIndex = 25})) {
    if (abs(s.classGcd) != 1) continue;
    ++checked;
    v.require(ipow(s.p, static_cast<unsigned long>(s.s)) <= boundPs(10, 1, Prime(s.p)),
              "p^s above bound for p=" + s.p.get_str());
  }
  const auto sweep = search03(5, {.maxIndex = 50, .primeBound = Integer(10000)});
  for (const auto& s : sweep) v.require(s.s == 1, "d=5 s=" + std::to_string(s.s) + " at p=" + s.p.get_str());
  v.require(!sweep.empty(), "d=5 sweep empty");
  v.detail << checked << " d = 10 solutions with classGcd 1 within the bound; d = 5 sweep: " << sweep.size()
           << " solutions, all s = 1";
  return v;
}

Verdict a2plus1Family() {
  Verdict v;
  const std::set<Integer> expected{Integer(11), Integer(199), Integer(3571), Integer("370248451"),
                                   Integer("6643838879"), Integer("119218851371")};
  std::set<Integer> primes;
  std::set<long> indices;
  for (long n = 1; n <= 9; ++n) {
    const Integer f = abs(fPoly(n, 2));
    if (expected.count(f)) indices.insert(n);
  }
  const auto sols = familyA2plus1(2, 9);
  for (const auto& s : sols) {
    primes.insert(s.p);
    v.require(limitSquaresTo(s.pcf(), 5, 4), "limit^2 = 5 at p=" + s.p.get_str());
  }
  v.require(primes == expected, "prime set");
  v.require(sols.size() == expected.size(), "one expansion per index");
  v.require(indices == std::set<long>{1, 2, 3, 7, 8, 9}, "indices");
  v.detail << sols.size() << " expansions at n = 1, 2, 3, 7, 8, 9; limit^2 = 5 mod p^4";
  return v;
}

Verdict negPellFamily() {
  Verdict v;
  const std::vector<Integer> wanted{7, 41, 239, Integer(9369319)};
  std::set<Integer> primes;
  for (const auto& s : familyNegPell(2, 6)) {
    primes.insert(s.p);
    v.require(isConvergent(s.pcf()).convergent && limitSquaresTo(s.pcf(), 2, 4), "p=" + s.p.get_str());
  }
  std::string missing;
  for (const auto& w : wanted)
    if (!primes.count(w)) missing += " " + w.get_str();
  v.require(missing.empty(), "maxN = 6 does not reach" + missing);
  std::string got;
  for (const auto& p : primes) got += " " + p.get_str();
  v.detail << "maxN = 6 primes:" << got << ". ";
  for (long n = 7; n <= 12; ++n) {
    bool hit = false;
    for (const auto& s : familyNegPell(2, n))
      if (s.p == 9369319) hit = isConvergent(s.pcf()).convergent && limitSquaresTo(s.pcf(), 2, 4);
    if (hit) {
      v.detail << "9369319 first appears at maxN = " << n << " (convergent, limit^2 = 2 mod p^4)";
      break;
    }
  }
  return v;
}

Verdict lociClosedForms() {
  Verdict v;
  const Prime p(3);
  const QuadPoly F{1, -12, 8};
  const auto at = locus12At(F, p, 7);
  std::set<std::vector<Rational>> coords;
  for (const auto& pt : at.points) {
    coords.insert(pt.coords());
    const auto* x = pt.limit ? std::get_if<PAdicApprox>(&pt.limit->value) : nullptr;
    v.require(pt.convergent && x && rootModulo(*x, F, 6), "limit of " + pt.pcf(p).str());
    const auto* s = pt.limit ? std::get_if<QuadSurd>(&pt.limit->exact) : nullptr;
    v.require(s && s->x == 6 && s->y * s->y * Rational(s->radicand) == 28, "exact limit 6 +- 2 sqrt 7");
  }
  v.require(coords == std::set<std::vector<Rational>>{{7, R("2/27"), 2}, {5, R("-2/27"), -2}}, "b1 = 7 points");

  const auto scan = locus12Scan(F, p, {20, 0});
  std::set<std::vector<Rational>> scanned;
  for (const auto& pt : scan.points)
    if (pt.convergent) scanned.insert(pt.coords());
  for (const auto& c : std::vector<std::vector<Rational>>{
           {7, R("2/27"), 2}, {5, R("-2/27"), -2}, {11, R("10/3"), 10}, {1, R("-10/3"), -10}})
    v.require(scanned.count(c) == 1, "scan point " + c[0].str());

  const auto none = locus12Scan({1, 0, 5}, Prime(71), {1000, 6});
  std::size_t conv = 0;
  for (const auto& pt : none.points) conv += pt.convergent;
  v.require(conv == 0, "x^2 + 5 at p = 71");
  v.detail << "b1 = 7 pair with limits 6 +- 2 sqrt 7 mod 3^6; scan H = 20 finds the 4 points; x^2 + 5 at 71 (H = 1000, "
              "J = 6): "
           << conv << " convergent";
  return v;
}

Verdict criterionOracle() {
  Verdict v;
  std::mt19937_64 rng(1010);
  std::size_t disagreements = 0, convergent = 0;
  for (int i = 0; i < 1000; ++i) {
    const long p = std::array<long, 3>{3, 5, 7}[i % 3];
    const auto total = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto k = std::uniform_int_distribution<int>(1, total)(rng);
    std::vector<Rational> pre, per;
    for (int j = 0; j < total - k; ++j) pre.push_back(randomO(rng, p, 20, 2));
    for (int j = 0; j < k; ++j) per.push_back(randomO(rng, p, 20, 2));
    const PCF pcf(Prime(p), pre, per);
    const bool c = isConvergent(pcf).convergent;
    convergent += c;
    if (c != oracleConverges(pcf, 8, 10, 60).consistent) {
      ++disagreements;
      v.require(false, pcf.str() + "_" + std::to_string(p));
    }
  }
  v.detail << "1000 random PCFs (" << convergent << " convergent), " << disagreements << " disagreements";
  return v;
}

Verdict identitySuite() {
  Verdict v;
  std::mt19937_64 rng(1011);
  const Mat2 J{0, 1, 1, 0};
  std::size_t forwardInverseFailures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto c = randomList(rng, n);
    const Mat2 M = cfMatrix(c);
    Mat2 D = Mat2::identity();
    for (const auto& x : c) D = D * Mat2{x, 1, 1, 0};
    v.require(M == D, "(a)");
    const auto j = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    if (j < n)
      v.require(M == cfMatrix(std::vector<Rational>(c.begin(), c.begin() + static_cast<long>(j))) *
                         cfMatrix(std::vector<Rational>(c.begin() + static_cast<long>(j), c.end())),
                "(b)");
    std::vector<Rational> neg;
    for (const auto& x : c) neg.push_back(-x);
    if (!(M.inverse() == J * cfMatrix(neg) * J)) ++forwardInverseFailures;
    v.require(M.transpose() == cfMatrix(std::vector<Rational>(c.rbegin(), c.rend())), "(d)");
    v.require(M.det() == Rational(n % 2 == 0 ? 1 : -1), "(e)");
  }
  v.require(forwardInverseFailures == 0, "(c) in forward order, M^-1 = J M(-c_1..-c_n) J");

  std::size_t reversedFailures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = randomList(rng, std::uniform_int_distribution<std::size_t>(1, 7)(rng));
    std::vector<Rational> negRev;
    for (auto it = c.rbegin(); it != c.rend(); ++it) negRev.push_back(-*it);
    reversedFailures += !(cfMatrix(c).inverse() == J * cfMatrix(negRev) * J);
  }

  for (int i = 0; i < 1000; ++i) {
    const auto per = randomList(rng, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    const QuadPoly own = quadOf(std::vector<Rational>{}, per);
    const QuadPoly other{randomQ(rng, 9), randomQ(rng, 9), randomQ(rng, 9)};
    for (const QuadPoly& F : {own, other}) {
      if (F.isZero()) continue;
      const auto [rev, G] = sigmaReverse(per, F);
      v.require(G == QuadPoly{F.C, -F.B, F.A}, "sigma polynomial");
      v.require(inVariety(std::vector<Rational>{}, per, F).member == inVariety(std::vector<Rational>{}, rev, G).member,
                "sigma membership");
    }
  }

  std::size_t rel12 = 0, rel13 = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational b1 = randomQ(rng, 30), a1 = randomQ(rng, 30), a2 = randomQ(rng, 30), a3 = randomQ(rng, 30);
    const QuadPoly F = quadOf(std::vector<Rational>{b1}, std::vector<Rational>{a1, a2});
    if (!F.isZero()) {
      ++rel12;
      v.require(F.A * F.A * a2 * (a1 * a2 + 4) - F.discriminant() * a1 == 0, "(1,2) relation");
    }
    const QuadPoly G = quadOf(std::vector<Rational>{b1}, std::vector<Rational>{a1, a2, a3});
    if (!G.isZero()) {
      ++rel13;
      const Rational &A = G.A, &B = G.B, &C = G.C;
      const Rational e = A * a1 * a1 * b1 * b1 + B * a1 * a1 * b1 + 2 * A * a1 * b1 + A * a3 * a3 - 2 * A * a3 * b1 +
                         A * b1 * b1 + C * a1 * a1 + B * a1 - B * a3 + B * b1 + A + C;
      v.require(e.isZero(), "(1,3) elimination relation");
    }
  }
  v.detail << "(a), (b), (d), (e), sigma and the (1,2)/(1,3) relations (" << rel12 << ", " << rel13
           << " points): 0 failures; (c) in forward order fails " << forwardInverseFailures
           << "/1000, with reversed order M(-c_n..-c_1) it fails " << reversedFailures << "/1000";
  return v;
}

Verdict chebyshevIdentity() {
  Verdict v;
  for (long a = 1; a <= 10; ++a) {
    const Integer A = a, x = 2 * A * A + 1;
    Integer t0 = 1, t1 = x, u0 = 0, u1 = 1;  // T_0, T_1, U_{-1}, U_0
    for (long n = 1; n <= 50; ++n) {
      v.require(fPoly(n, A) == t1 - 2 * A * (A * A + 1) * u1, "n=" + std::to_string(n) + " a=" + std::to_string(a));
      Integer t2 = 2 * x * t1 - t0, u2 = 2 * x * u1 - u0;
      t0 = t1, t1 = t2, u0 = u1, u1 = u2;
    }
  }
  v.detail << "f_n(a) = T_n(2a^2+1) - 2a(a^2+1) U_{n-1}(2a^2+1) for n <= 50, a <= 10";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"closed-form Quad table", tableRows},
      {"shift-condition counterexample", shiftCounterexample},
      {"limit zero", limitZero},
      {"sqrt golden set", goldenSet},
      {"search03 rediscovery", searchRediscovery},
      {"p^s bound and d = 5 sweep", boundAndSweep},
      {"a^2 + 1 family", a2plus1Family},
      {"negative Pell family", negPellFamily},
      {"type (1,2) closed forms", lociClosedForms},
      {"criterion vs oracle", criterionOracle},
      {"identity suite", identitySuite},
      {"Chebyshev identity", chebyshevIdentity},
  };
  int failures = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << v.detail.str() << " [" << ms
              << " ms]\n";
  }
  return failures == 0 ? 0 : 1;
}
