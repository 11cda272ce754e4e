#include "pcf/padic.hpp"

#include <algorithm>

#include "pcf/error.hpp"
#include "pcf/ntheory.hpp"

namespace pcf {

namespace {

Integer powP(const Prime& p, long e) { return ipow(p.value(), static_cast<unsigned long>(e)); }

Integer modPos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

PAdicApprox::PAdicApprox(Prime p, long valuation, const Integer& unit, long precision)
    : p_(std::move(p)), valuation_(valuation), precision_(precision) {
  if (precision_ < 1) throw Error(Errc::InternalError, "p-adic precision must be positive");
  unit_ = modPos(unit, powP(p_, precision_));
  if (mpz_divisible_p(unit_.get_mpz_t(), p_.value().get_mpz_t()))
    throw Error(Errc::InternalError, "p-adic unit part divisible by p");
}

PAdicApprox PAdicApprox::zero(const Prime& p) {
  PAdicApprox z(p, 0, 1, 1);
  z.valuation_ = kInfiniteValuation;
  z.unit_ = 0;
  return z;
}

PAdicApprox PAdicApprox::fromRational(const Rational& x, const Prime& p, long precision) {
  if (x.isZero()) return zero(p);
  Integer num = x.num(), den = x.den();
  long v = removeFactor(num, p.value());
  v -= removeFactor(den, p.value());
  Integer mod = powP(p, precision);
  return PAdicApprox(p, v, num * modInverse(den, mod), precision);
}

long PAdicApprox::absolutePrecision() const {
  return isZero() ? kInfiniteValuation : valuation_ + precision_;
}

PAdicApprox PAdicApprox::truncated(long precision) const {
  if (isZero() || precision >= precision_) return *this;
  return PAdicApprox(p_, valuation_, unit_, precision);
}

PAdicApprox PAdicApprox::operator-() const {
  if (isZero()) return *this;
  return PAdicApprox(p_, valuation_, -unit_, precision_);
}

PAdicApprox PAdicApprox::inverse() const {
  if (isZero()) throw Error(Errc::ZeroInput, "inverse of p-adic zero");
  return PAdicApprox(p_, -valuation_, modInverse(unit_, powP(p_, precision_)), precision_);
}

PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b) {
  if (a.isZero()) return a;
  if (b.isZero()) return b;
  long prec = std::min(a.precision_, b.precision_);
  return PAdicApprox(a.p_, a.valuation_ + b.valuation_, a.unit_ * b.unit_, prec);
}

PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  const long absPrec = std::min(a.absolutePrecision(), b.absolutePrecision());
  const long base = std::min(a.valuation_, b.valuation_);
  const Integer mod = powP(a.p_, absPrec - base);
  Integer sum = a.unit_ * powP(a.p_, a.valuation_ - base) + b.unit_ * powP(b.p_, b.valuation_ - base);
  sum = modPos(sum, mod);
  if (sum == 0) throw Error(Errc::PrecisionExhausted, "p-adic sum cancelled all known digits");
  long shift = removeFactor(sum, a.p_.value());
  return PAdicApprox(a.p_, base + shift, sum, absPrec - base - shift);
}

bool operator==(const PAdicApprox& a, const PAdicApprox& b) {
  if (!(a.p_ == b.p_)) return false;
  if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
  if (a.valuation_ != b.valuation_) return false;
  const Integer mod = powP(a.p_, std::min(a.precision_, b.precision_));
  return modPos(a.unit_ - b.unit_, mod) == 0;
}

bool PAdicApprox::matches(const Rational& x) const {
  return *this == fromRational(x, p_, precision_);
}

std::string PAdicApprox::str() const {
  if (isZero()) return "0";
  return p_.str() + "^" + std::to_string(valuation_) + " * " + unit_.get_str() + " (mod " +
         p_.str() + "^" + std::to_string(precision_) + ")";
}

std::optional<Integer> sqrtModPrime(const Integer& a, const Integer& p) {
  Integer n = modPos(a, p);
  if (n == 0) return Integer(0);
  if (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // p - 1 = q * 2^s with q odd.
  Integer q = p - 1;
  long s = removeFactor(q, Integer(2));
  Integer r;
  if (s == 1) {
    Integer e = (p + 1) / 4;
    mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c, t, e = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  long m = s;
  while (t != 1) {
    long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = modPos(t2 * t2, p);
      ++i;
    }
    Integer b = c;
    for (long j = 0; j < m - i - 1; ++j) b = modPos(b * b, p);
    r = modPos(r * b, p);
    c = modPos(b * b, p);
    t = modPos(t * c, p);
    m = i;
  }
  return r;
}

std::optional<PAdicApprox> sqrtPadic(const Rational& x, const Prime& p, long precision) {
  if (x.isZero()) throw Error(Errc::ZeroInput, "square root of zero");
  if (precision < 1) throw Error(Errc::InternalError, "precision must be positive");
  const PAdicApprox xp = PAdicApprox::fromRational(x, p, precision);
  if (xp.valuation() % 2 != 0) return std::nullopt;
  const Integer& unit = xp.unitDigits();
  auto root = sqrtModPrime(unit, p.value());
  if (!root) return std::nullopt;

  // Newton: r <- r - (r^2 - u) / (2r), doubling the known digits each step.
  Integer r = *root;
  long known = 1;
  while (known < precision) {
    known = std::min(2 * known, precision);
    const Integer mod = powP(p, known);
    Integer f = modPos(r * r - unit, mod);
    r = modPos(r - f * modInverse(modPos(2 * r, mod), mod), mod);
  }
  const Integer mod = powP(p, precision);
  Integer digit = modPos(r, p.value());
  if (digit > (p.value() - 1) / 2) r = modPos(-r, mod);
  return PAdicApprox(p, xp.valuation() / 2, r, precision);
}

}  // namespace pcf
