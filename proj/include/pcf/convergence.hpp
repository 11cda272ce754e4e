#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/parallel.hpp"
#include "pcf/roots.hpp"

namespace pcf {

enum class FailedCondition { None, TraceTooSmall, ShiftCondition };

struct ConvergenceReport {
  bool convergent = false;
  Rational trace;  // A_k + B_{k-1} of the period
  long traceValuation = kInfiniteValuation;
  FailedCondition failed = FailedCondition::None;
  std::size_t shift = 0;  // 1-based index j of the failing cyclic shift
};

// p-adic convergence criterion; depends on the period only.
ConvergenceReport isConvergent(std::span<const Rational> period, const Prime& p);
ConvergenceReport isConvergent(const PCF& pcf);

enum class LimitKind { ExactRational, Infinity, PAdic };

struct LimitResult {
  LimitKind kind;
  P1Value value;
  AlgebraicPoint exact;  // the same limit as an element of P^1(Q(sqrt D))
};

// Limit of a convergent PCF: the root of Quad(period) fixed by the dominant
// eigenvalue, moved through the Moebius map of the preperiod. Irrational
// limits are embedded to `precision` digits.
// Throws Error(NotConvergent) and, if the embedding fails after one retry,
// Error(PrecisionExhausted).
LimitResult limit(const PCF& pcf, long precision = 8);

// Valuation of the chordal distance between two points of P^1(Q_p):
// v_p(x y' - x' y) - min(v_p x, v_p y) - min(v_p x', v_p y').
// kInfiniteValuation when the points coincide.
// Checks that a limit is a root of F. Exact for rational values and
// infinity; for a truncated p-adic r the representative R = p^v * unit must
// give v_p(F(R)) - min(v_p(A R^2), v_p(B R), v_p(C)) >= digits.
bool approxRootOf(const P1Value& value, const QuadPoly& F, long digits);

long projectiveDistance(const ProjPoint& a, const ProjPoint& b, const Prime& p);

struct OracleResult {
  bool consistent = false;
  ProjPoint witness;         // convergent n1 of the full PCF
  long minDistance = 0;      // smallest distance over the checked pairs
  std::size_t worstIndex = 0;
};

// Independent numeric cross-check of the criterion. Computes exact
// convergents of the purely periodic tail and requires every consecutive
// pair in the second half of the window [n0, n1] to be closer than
// p^-precision. A heuristic, not a decision procedure.
OracleResult oracleConverges(const PCF& pcf, long precision, std::size_t n0, std::size_t n1);

// isConvergent over a batch; the parallel path is checked against Serial.
std::vector<ConvergenceReport> classifyBatch(std::span<const PCF> batch, Exec exec = Exec::Parallel);

}  // namespace pcf
