#pragma once

#include <random>
#include <string>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf::test {

inline Rational R(const std::string& text) { return Rational::parse(text); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(R(t));
  return out;
}

// m / p^j with |m| <= height and 0 <= j <= depth.
inline Rational randomO(std::mt19937_64& rng, long p, long height, long depth) {
  std::uniform_int_distribution<long> m(-height, height), j(0, depth);
  return Rational(Integer(m(rng)), ipow(Integer(p), static_cast<unsigned long>(j(rng))));
}

inline Rational randomNonzeroO(std::mt19937_64& rng, long p, long height, long depth) {
  Rational x;
  do x = randomO(rng, p, height, depth);
  while (x.isZero());
  return x;
}

// Any rational with small numerator and denominator.
inline Rational randomQ(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> n(-height, height), d(1, height);
  return Rational(Integer(n(rng)), Integer(d(rng)));
}

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace pcf::test
