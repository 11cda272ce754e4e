#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

// floor(sqrt(n)) for n >= 0, exact.
Integer isqrt(const Integer& n);
bool isPerfectSquare(const Integer& n);
// Exact square root of a rational when it is a perfect square in Q.
std::optional<Rational> rationalSqrt(const Rational& x);

bool isProbablePrime(const Integer& n);

// If |n| = q^e for a prime q and e >= 1, returns (q, e).
std::optional<std::pair<Integer, long>> primePowerDecomposition(const Integer& n);

// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
// Trial division followed by Pollard-Brent rho on the cofactor.
std::vector<std::pair<Integer, long>> factorize(const Integer& n);

bool isSquareFree(const Integer& n);

// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
Integer multiplicativeOrder(const Integer& a, const Integer& m);

Integer modInverse(const Integer& a, const Integer& m);

}  // namespace pcf
