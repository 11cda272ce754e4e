#pragma once

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pcf {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                       // NOLINT: implicit by design of literals
  Rational(const Integer& v) : q_(v) {}             // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "num" or "num/den" with an optional sign; surrounding
  // whitespace is ignored. Throws Error(ParseError).
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool isZero() const { return sgn(q_) == 0; }
  bool isInteger() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;
  Rational pow(unsigned long e) const;

  // "num" when integral, else "num/den".
  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Odd prime, validated at construction.
class Prime {
 public:
  // Throws Error(InvalidPrime) unless `value` is an odd prime.
  explicit Prime(const Integer& value);
  explicit Prime(long value) : Prime(Integer(value)) {}

  const Integer& value() const { return p_; }
  std::string str() const { return p_.get_str(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  Integer p_;
};

// Marker for v_p(0).
inline constexpr long kInfiniteValuation = LONG_MAX;

// Exponent of p in a nonzero integer; kInfiniteValuation for zero.
long valuation(const Integer& n, const Integer& p);
// v_p(x) = v_p(num) - v_p(den); kInfiniteValuation for x = 0.
long vp(const Rational& x, const Prime& p);
// True iff the denominator of x is a power of p (x lies in Z[1/p]).
bool inO(const Rational& x, const Prime& p);

Integer ipow(const Integer& base, unsigned long e);
// Strips every factor p from n (n != 0); returns the removed exponent.
long removeFactor(Integer& n, const Integer& p);

}  // namespace pcf
