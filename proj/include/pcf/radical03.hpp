#pragma once

#include <optional>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/loci.hpp"
#include "pcf/parallel.hpp"
#include "pcf/pell.hpp"

namespace pcf {

// [overline(a1, v/p^s, a3)] converging p-adically to sqrt(d).
struct Radical03Solution {
  Integer d;
  Integer p;
  long s = 0;
  Integer a1;
  Rational a2;
  Integer a3;
  Integer v;         // a2 = v / p^s, v | d - 1
  Integer classGcd;  // (1 - a1 a3) / p^s, i.e. +-gcd(a1 + a3, 1 - a1 a3)
  bool limitVerified = false;

  PCF pcf() const { return PCF(Prime(p), {}, {Rational(a1), a2, Rational(a3)}); }
};

// Necessary condition for any type (0,3) expansion of sqrt(d): false iff
// d <= 0, 4 | d, or a prime q = 3 mod 4 divides d.
bool dFilter(const Integer& d);

struct Search03Options {
  std::optional<Integer> p;             // fixed prime; every prime when unset
  long maxIndex = 25;                   // orbit indices -maxIndex..maxIndex
  std::optional<Integer> maxClassScan;  // cap on v in the class rectangle
  std::optional<Integer> primeBound;    // all-prime mode: only p <= bound
  long precision = 8;                   // digits for the limit check
};

// Type (0,3) expansions of sqrt(d) found in the Pell orbits of
// x^2 - d y^2 = d - 1, sorted by (p, |a1|, a1, a3). Complete only within
// the index bound. Throws Error(NotSquareFree), Error(InvalidPrime).
std::vector<Radical03Solution> search03(const Integer& d, const Search03Options& options = {},
                                        Exec exec = Exec::Parallel);

// Builds and verifies the solution for (a1, a3) at d, or nullopt when the
// pair does not give an expansion (for the prime p, or any prime if unset).
std::optional<Radical03Solution> radical03Candidate(const Integer& d, const Integer& a1, const Integer& a3,
                                                    const std::optional<Integer>& p, long precision = 8);

// Upper bound classGcd * ((d+1)^(3/2) + 2d) / |d+1|_p^2, rounded up exactly.
Integer boundPs(const Integer& d, const Integer& classGcd, const Prime& p);

// f_0 = 1, f_1 = -2a^3 + 2a^2 - 2a + 1, f_{n+2} = 2(2a^2 + 1) f_{n+1} - f_n.
Integer fPoly(long n, const Integer& a);

// Points (a u*_n, a / f_n(a), a v*_n) for d = a^2 + 1 and n = 1..maxN with
// |f_n(a)| an odd prime power.
std::vector<Radical03Solution> familyA2plus1(const Integer& a, long maxN, long precision = 8,
                                             Exec exec = Exec::Parallel);

// Points (+-s_n + d t_n, -+1/s_n, +-s_n + t_n) for n = 1..maxN with |s_n| an
// odd prime. Throws Error(NoNegativePell).
std::vector<Radical03Solution> familyNegPell(const Integer& d, long maxN, long precision = 8,
                                             Exec exec = Exec::Parallel);

// Degenerate type (0,3) configurations (A = B = 0, B = C = 0, A = C = 0,
// A = 0 with BC != 0, C = 0 with AB != 0); the infinite families are
// sampled for |t| <= indexBound. Throws Error(NotDegenerate),
// Error(ZeroPolynomial).
LocusResult degenerate03(const QuadPoly& F, const Prime& p, long indexBound, long precision = 8);

}  // namespace pcf
