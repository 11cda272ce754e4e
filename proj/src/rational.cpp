#include "pcf/rational.hpp"

#include <cctype>
#include <ostream>

#include "pcf/error.hpp"

namespace pcf {

std::string_view errcName(Errc code) {
  switch (code) {
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyPeriod: return "EmptyPeriod";
    case Errc::NotInO: return "NotInO";
    case Errc::NotConvergent: return "NotConvergent";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::RootInput: return "RootInput";
    case Errc::ZeroLeadingCoeff: return "ZeroLeadingCoeff";
    case Errc::PerfectSquare: return "PerfectSquare";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::NoNegativePell: return "NoNegativePell";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw Error(Errc::ZeroInput, "zero denominator");
  q_.canonicalize();
}

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view numText = s.substr(0, slash);
  std::string_view denText = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!isDigits(numText) || !isDigits(denText))
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer num(std::string(numText), 10);
  Integer den(std::string(denText), 10);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(Errc::ZeroInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned long e) const {
  return Rational(ipow(num(), e), ipow(den(), e));
}

std::string Rational::str() const {
  if (isInteger()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Prime::Prime(const Integer& value) : p_(value) {
  if (p_ < 3 || mpz_even_p(p_.get_mpz_t()) || mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0)
    throw Error(Errc::InvalidPrime, p_.get_str() + " is not an odd prime");
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  Integer m = n;
  return removeFactor(m, p);
}

long removeFactor(Integer& n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long vp(const Rational& x, const Prime& p) {
  if (x.isZero()) return kInfiniteValuation;
  return valuation(x.num(), p.value()) - valuation(x.den(), p.value());
}

bool inO(const Rational& x, const Prime& p) {
  Integer d = x.den();
  removeFactor(d, p.value());
  return d == 1;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace pcf
