#include "u2mp/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace u2mp {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_mpz(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

BigInt::BigInt(std::int64_t v) {
  // mpz_class has no portable int64 constructor.
  value_ = mpz_class(std::to_string(v), 10);
}

BigInt BigInt::parse(std::string_view text) { return BigInt(parse_mpz(text)); }

bool BigInt::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  return value_ >= lo && value_ <= hi;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer exceeds 64 bits: " + to_string());
  if (value_.fits_slong_p() && sizeof(long) == sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(value_.get_si());
  }
  return std::stoll(value_.get_str());
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(l));
}

Rational::Rational(std::int64_t v) : Rational(BigInt(v)) {}

Rational::Rational(const BigInt& v) : value_(v.raw()) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.sign() == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num.raw(), den.raw());
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(parse_mpz(text)));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  BigInt num(parse_mpz(text.substr(0, slash)));
  BigInt den(parse_mpz(den_text));
  if (den.sign() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace u2mp
