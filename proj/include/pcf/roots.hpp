#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/padic.hpp"
#include "pcf/surd.hpp"

namespace pcf {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

// A point of P^1(Q_p): exact rational, infinity, or a truncated p-adic.
using P1Value = std::variant<Rational, Infinity, PAdicApprox>;

// A root of a rational quadratic, kept exactly.
using AlgebraicPoint = std::variant<Rational, Infinity, QuadSurd>;

std::string str(const P1Value& v);
std::string str(const AlgebraicPoint& v);

// Both roots of F in P^1, with multiplicity; irrational roots are returned
// as conjugate surds (+ root first). Throws Error(ZeroPolynomial).
std::vector<AlgebraicPoint> quadRootsAlgebraic(const QuadPoly& F);

// Embeds an exact root into P^1(Q_p).
P1Value toP1(const AlgebraicPoint& v, const Prime& p, long precision);

// Roots of F in P^1(Q_p): rational roots exactly, irrational ones to
// `precision` digits. nullopt when the discriminant is not a square in Q_p.
// Throws Error(ZeroPolynomial).
std::optional<std::vector<P1Value>> quadRootsPadic(const QuadPoly& F, const Prime& p, long precision);

// True iff x is a nonzero square in Q_p.
bool isSquareInQp(const Rational& x, const Prime& p);

}  // namespace pcf
