#include "pcf/ntheory.hpp"

#include <algorithm>
#include <map>

#include "pcf/error.hpp"

namespace pcf {

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::InternalError, "isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool isPerfectSquare(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rationalSqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  Integer n = x.num(), d = x.den();
  if (!isPerfectSquare(n) || !isPerfectSquare(d)) return std::nullopt;
  return Rational(isqrt(n), isqrt(d));
}

bool isProbablePrime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<std::pair<Integer, long>> primePowerDecomposition(const Integer& n) {
  Integer m = abs(n);
  if (m < 2) return std::nullopt;
  if (isProbablePrime(m)) return std::make_pair(m, 1L);
  if (mpz_perfect_power_p(m.get_mpz_t()) == 0) return std::nullopt;
  const long maxExp = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (long e = maxExp; e >= 2; --e) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(e)) != 0 &&
        isProbablePrime(root))
      return std::make_pair(root, e);
  }
  return std::nullopt;
}

namespace {

Integer pollardBrent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void splitInto(const Integer& n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (isProbablePrime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollardBrent(n);
  splitInto(d, out);
  splitInto(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, long>> factorize(const Integer& n) {
  if (n == 0) throw Error(Errc::ZeroInput, "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, long> found;
  for (unsigned long q = 2; q < 10000 && m > 1; q += (q == 2 ? 1 : 2)) {
    if (Integer(q) * q > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      m /= q;
      ++found[Integer(q)];
    }
  }
  splitInto(m, found);
  return {found.begin(), found.end()};
}

bool isSquareFree(const Integer& n) {
  for (const auto& [q, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

Integer modInverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(Errc::InternalError, "no modular inverse");
  return r;
}

Integer multiplicativeOrder(const Integer& a, const Integer& m) {
  if (m == 1) return 1;
  // phi(m), then strip prime factors while a^(order/q) == 1.
  Integer phi = 1;
  for (const auto& [q, e] : factorize(m)) phi *= ipow(q, static_cast<unsigned long>(e - 1)) * (q - 1);
  Integer order = phi;
  for (const auto& [q, e] : factorize(phi)) {
    for (long i = 0; i < e; ++i) {
      Integer candidate = order / q, r;
      mpz_powm(r.get_mpz_t(), a.get_mpz_t(), candidate.get_mpz_t(), m.get_mpz_t());
      if (r != 1) break;
      order = candidate;
    }
  }
  return order;
}

}  // namespace pcf
