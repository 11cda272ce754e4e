#include <doctest.h>

#include "pcf/convergence.hpp"
#include "pcf/error.hpp"
#include "support.hpp"

using namespace pcf;
using pcf::test::R;
using pcf::test::Rs;

namespace {

long minVal(const Rational& a, const Rational& b, const Prime& p) { return std::min(vp(a, p), vp(b, p)); }

// Chordal distance valuation, written out independently of the library.
long chordal(const ProjPoint& a, const ProjPoint& b, const Prime& p) {
  const Rational cross = a.x * b.y - a.y * b.x;
  if (cross.isZero()) return kInfiniteValuation;
  return vp(cross, p) - minVal(a.x, a.y, p) - minVal(b.x, b.y, p);
}

// Checks r^2 = x to `digits` relative digits for a p-adic r of even
// valuation, using only integer arithmetic.
bool squaresTo(const PAdicApprox& r, const Rational& x, long digits) {
  const Integer& p = r.prime().value();
  if (2 * r.valuation() != vp(x, r.prime())) return false;
  Integer num = x.num(), den = x.den();
  removeFactor(num, p);
  removeFactor(den, p);
  return test::mod(r.unitDigits() * r.unitDigits() * den - num, ipow(p, static_cast<unsigned long>(digits))) == 0;
}

}  // namespace

TEST_CASE("criterion examples") {
  const auto rem = isConvergent(PCF(Prime(3), {}, Rs({"1", "-1/3", "3"})));
  CHECK_FALSE(rem.convergent);
  CHECK(rem.failed == FailedCondition::ShiftCondition);
  CHECK(rem.shift == 1);
  CHECK(rem.trace == R("8/3"));
  CHECK(rem.traceValuation == -1);

  CHECK(isConvergent(PCF(Prime(3), {}, Rs({"3", "-1/3", "1"}))).convergent);
  CHECK(isConvergent(PCF(Prime(3), {}, Rs({"1/3"}))).convergent);

  const auto three = isConvergent(PCF(Prime(3), {}, Rs({"3"})));
  CHECK_FALSE(three.convergent);
  CHECK(three.failed == FailedCondition::TraceTooSmall);
  CHECK(three.traceValuation == 1);

  const auto zeros = isConvergent(PCF(Prime(3), {}, Rs({"0", "0"})));
  CHECK_FALSE(zeros.convergent);
  CHECK(zeros.trace == 2);
}

TEST_CASE("report invariants") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto k = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Rational> per;
    for (int j = 0; j < k; ++j) per.push_back(test::randomO(rng, 5, 10, 2));
    const auto r = isConvergent(PCF(Prime(5), {}, per));
    CHECK(r.convergent == (r.failed == FailedCondition::None));
    CHECK(r.traceValuation == vp(r.trace, Prime(5)));
    CHECK((r.failed == FailedCondition::TraceTooSmall) == (r.traceValuation >= 0));
    // Trace invariance under cyclic shifts.
    std::vector<Rational> shifted(per.begin() + 1, per.end());
    shifted.push_back(per.front());
    CHECK(isConvergent(PCF(Prime(5), {}, shifted)).trace == r.trace);
    CHECK(cfMatrix(per).trace() == r.trace);
  }
}

TEST_CASE("non-convergent example has two subsequence limits") {
  for (long p : {3L, 5L, 7L}) {
    const Prime P(p);
    const Rational q(p);
    const PCF pcf(P, {}, {1, -q.inverse(), q});
    const Rational target = (1 - q) / (q * q + 1);
    for (std::size_t n = 40; n <= 60; ++n) {
      const ProjPoint c = convergentAt(pcf, n);
      if (n % 3 == 0) CHECK(chordal(c, {1, 0}, P) >= 6);
      else CHECK(chordal(c, {target, 1}, P) >= 6);
    }
  }
}

TEST_CASE("limits") {
  for (long p : {3L, 5L, 7L}) {
    const Rational q(p);
    const auto lim = limit(PCF(Prime(p), {}, {q, -q.inverse(), 1}));
    CHECK(lim.kind == LimitKind::ExactRational);
    CHECK(std::get<Rational>(lim.value) == 0);
  }

  const auto sqrt10 = limit(PCF(Prime(3), {3}, Rs({"1", "-2/3", "1"})), 6);
  REQUIRE(sqrt10.kind == LimitKind::PAdic);
  CHECK(squaresTo(std::get<PAdicApprox>(sqrt10.value), 10, 6));

  const auto p53 = limit(PCF(Prime(53), {}, Rs({"13", "9/53", "-4"})), 4);
  REQUIRE(p53.kind == LimitKind::PAdic);
  CHECK(squaresTo(std::get<PAdicApprox>(p53.value), 10, 4));

  const auto inf = limit(PCF(Prime(3), {}, Rs({"1/3"})));
  CHECK(inf.kind == LimitKind::PAdic);
  CHECK(std::get<PAdicApprox>(inf.value).valuation() == -1);

  CHECK_THROWS_AS(limit(PCF(Prime(3), {}, Rs({"3"}))), Error);
}

TEST_CASE("limits are fixed points of E and roots of Quad") {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int i = 0; checked < 300 && i < 20000; ++i) {
    const long p = std::array<long, 3>{3, 5, 7}[i % 3];
    const Prime P(p);
    std::vector<Rational> pre, per;
    const auto N = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < N; ++j) pre.push_back(test::randomO(rng, p, 20, 2));
    for (int j = 0; j < k; ++j) per.push_back(test::randomO(rng, p, 20, 2));
    const PCF pcf(P, pre, per);
    if (!isConvergent(pcf).convergent) continue;
    ++checked;
    const long N8 = 8;
    const LimitResult lim = limit(pcf, N8);
    const Mat2 E = eMatrix(pcf);
    const QuadPoly F = quadOf(pcf);
    if (const auto* x = std::get_if<Rational>(&lim.value)) {
      CHECK(F(*x).isZero());
      CHECK(E.apply({*x, 1}) == ProjPoint{*x, 1});
    } else if (std::holds_alternative<Infinity>(lim.value)) {
      CHECK(F.A.isZero());
      CHECK(E.e21.isZero());
    } else {
      const auto& r = std::get<PAdicApprox>(lim.value);
      CHECK(approxRootOf(lim.value, F, N8 - 2 * std::labs(r.valuation())));
      // Compare with the tail of the convergents.
      const ProjPoint c = convergentAt(pcf, 200);
      const long slack = 2 * std::labs(r.valuation());
      const auto cx = PAdicApprox::fromRational(c.x / c.y, P, N8);
      if (cx.valuation() == r.valuation()) {
        const Integer pk = ipow(Integer(p), static_cast<unsigned long>(std::max(1L, N8 - slack)));
        CHECK(test::mod(cx.unitDigits() - r.unitDigits(), pk) == 0);
      } else {
        CHECK(false);
      }
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("projectiveDistance") {
  const Prime p(3);
  CHECK(projectiveDistance({1, 0}, {1, 0}, p) == kInfiniteValuation);
  CHECK(projectiveDistance({1, 1}, {10, 1}, p) == 2);
  CHECK(projectiveDistance({1, 1}, {1, 0}, p) == 0);
  CHECK(projectiveDistance({R("1/3"), 1}, {1, 0}, p) == 1);
}

TEST_CASE("oracle examples") {
  CHECK(oracleConverges(PCF(Prime(3), {}, Rs({"1/3"})), 5, 5, 20).consistent);
  CHECK_FALSE(oracleConverges(PCF(Prime(3), {}, Rs({"1", "-1/3", "3"})), 3, 3, 30).consistent);
  CHECK_FALSE(oracleConverges(PCF(Prime(3), {}, Rs({"3"})), 8, 10, 60).consistent);
  const PCF pcf(Prime(3), {2}, Rs({"1/3"}));
  CHECK(oracleConverges(pcf, 8, 10, 60).witness == convergentAt(pcf, 60));
}

TEST_CASE("criterion and oracle agree on random inputs") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const long p = std::array<long, 3>{3, 5, 7}[i % 3];
    const auto total = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto k = std::uniform_int_distribution<int>(1, total)(rng);
    std::vector<Rational> pre, per;
    for (int j = 0; j < total - k; ++j) pre.push_back(test::randomO(rng, p, 20, 2));
    for (int j = 0; j < k; ++j) per.push_back(test::randomO(rng, p, 20, 2));
    const PCF pcf(Prime(p), pre, per);
    CHECK_MESSAGE(isConvergent(pcf).convergent == oracleConverges(pcf, 8, 10, 60).consistent, pcf.str());
  }
}

TEST_CASE("classifyBatch matches the serial path") {
  std::mt19937_64 rng(34);
  std::vector<PCF> batch;
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> per;
    for (int j = 0; j < 3; ++j) per.push_back(test::randomO(rng, 3, 20, 2));
    batch.emplace_back(Prime(3), std::vector<Rational>{}, per);
  }
  const auto serial = classifyBatch(batch, Exec::Serial);
  const auto parallel = classifyBatch(batch, Exec::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].convergent == parallel[i].convergent);
    CHECK(serial[i].trace == parallel[i].trace);
    CHECK(serial[i].shift == parallel[i].shift);
    CHECK(serial[i].convergent == isConvergent(batch[i]).convergent);
  }
}
