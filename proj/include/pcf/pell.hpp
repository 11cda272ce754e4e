#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pcf/parallel.hpp"
#include "pcf/rational.hpp"

namespace pcf {

// Solution (u, v) of u^2 - d v^2 = n.
struct PellPair {
  Integer u;
  Integer v;

  friend bool operator==(const PellPair& a, const PellPair& b) = default;
  std::string str() const;
};

// Integer continued fraction of sqrt(d): a0 and one full period.
struct SqrtCf {
  Integer a0;
  std::vector<Integer> period;
};

struct PellFundamental {
  Integer d;
  Integer uStar;
  Integer vStar;

  PellPair unit() const { return {uStar, vStar}; }
};

struct PellClassSet {
  Integer d;
  Integer n;
  PellFundamental unit;
  // One fundamental solution per class, sorted by (v, -u).
  std::vector<PellPair> fundamentals;
};

// Throws Error(PerfectSquare) for perfect squares and Error(InternalError)
// for d < 2.
SqrtCf sqrtCf(const Integer& d);
PellFundamental fundamentalUnit(const Integer& d);
// Fundamental solution of x^2 - d y^2 = -1, if any.
std::optional<PellPair> negPell(const Integer& d);

Integer pellNorm(const PellPair& s, const Integer& d);
PellPair brahmagupta(const PellPair& a, const PellPair& b, const Integer& d);

// True iff a and b (both of norm n != 0) lie in the same unit orbit.
bool sameClass(const PellPair& a, const PellPair& b, const Integer& d, const Integer& n);

// Fundamental solutions of x^2 - d y^2 = n from the Nagell rectangle
// (u* - 1 replaces u* + 1 when n < 0), optionally capped at v <= vCap.
// Throws Error(PerfectSquare) and Error(ZeroInput) for n = 0.
PellClassSet pellClasses(const Integer& d, const Integer& n, Exec exec = Exec::Parallel,
                         const std::optional<Integer>& vCap = std::nullopt);

// (u_i, v_i) = (u*, v*)^i * fund under the Brahmagupta product; negative i
// uses the inverse unit (u*, -v*).
PellPair iterateClass(const PellPair& fund, const PellFundamental& unit, long i);
PellPair iterateClass(const PellPair& fund, const Integer& d, long i);

// (u_i, v_i) for i = -maxIndex..maxIndex, in index order.
std::vector<PellPair> classOrbit(const PellPair& fund, const PellFundamental& unit, long maxIndex);

}  // namespace pcf
