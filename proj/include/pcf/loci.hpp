#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/convergence.hpp"
#include "pcf/parallel.hpp"

namespace pcf {

struct LocusPoint {
  std::vector<Rational> preperiod;
  std::vector<Rational> period;
  bool convergent = false;
  // Quad of the point is the zero triple (it satisfies the equations of
  // every V(F) trivially).
  bool zeroQuad = false;
  std::optional<LimitResult> limit;

  // b_1..b_N followed by a_1..a_k.
  std::vector<Rational> coords() const;
  PCF pcf(const Prime& p) const { return PCF(p, preperiod, period); }
};

// A one-parameter set of points kept symbolically.
struct FamilyDescriptor {
  std::string name;
  std::string description;
  bool convergent = false;  // true iff some member converges
};

struct LocusResult {
  std::vector<LocusPoint> points;  // canonical order: lexicographic on coords
  std::vector<FamilyDescriptor> families;
  bool complete = false;  // the listing is provably exhaustive
  std::vector<std::string> notes;
};

struct ScanBounds {
  long height = 1000;     // |m| <= height
  long valuationDepth = 12;  // exponent bound on p in the denominator
};

// Builds the point, checks it against F exactly (throws InternalError on
// failure) and decides convergence, attaching the limit when it converges.
LocusPoint evaluatePoint(const Prime& p, std::vector<Rational> preperiod, std::vector<Rational> period,
                         const QuadPoly& F, long precision = 8);

void sortPoints(std::vector<LocusPoint>& points);

// Type (0,1). Throws Error(ZeroPolynomial).
LocusResult locus01(const QuadPoly& F, const Prime& p, long precision = 8);
// Type (1,1). Throws Error(ZeroPolynomial).
LocusResult locus11(const QuadPoly& F, const Prime& p, long precision = 8);
// Type (2,1): closed form when A = 0, bounded scan over b2 otherwise.
// Throws Error(ZeroPolynomial).
LocusResult locus21(const QuadPoly& F, const Prime& p, ScanBounds bounds = {}, long precision = 8,
                    Exec exec = Exec::Parallel);
// Type (0,2). Throws Error(ZeroPolynomial).
LocusResult locus02(const QuadPoly& F, const Prime& p, long precision = 8);

// (k, eps) with a1*a2 = +-(p^k - 1)^2 / (4^eps p^k), k > 0, if any.
std::optional<std::pair<long, int>> reducible02Params(const Rational& a1, const Rational& a2, const Prime& p);
bool reducible02Form(const Rational& a1, const Rational& a2, const Prime& p);

// Type (1,2) at a fixed b1. Throws Error(ZeroPolynomial),
// Error(ZeroLeadingCoeff) when A = 0, Error(RootInput) when F(b1) = 0 and
// Error(NotInO) when b1 is not in Z[1/p].
LocusResult locus12At(const QuadPoly& F, const Prime& p, const Rational& b1, long precision = 8);
// Type (1,2): component classification plus a bounded b1 scan.
// Throws Error(ZeroPolynomial).
LocusResult locus12Scan(const QuadPoly& F, const Prime& p, ScanBounds bounds = {}, long precision = 8,
                        Exec exec = Exec::Parallel);

// m / p^j in lowest terms for |m| <= height and j in [jMin, jMax], sorted,
// without duplicates.
std::vector<Rational> scanCandidates(const Prime& p, long height, long jMin, long jMax);

}  // namespace pcf
