#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace u2mp {

/// Arbitrary-precision integer.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : value_(std::move(v)) {}

  static BigInt parse(std::string_view text);

  [[nodiscard]] const mpz_class& raw() const { return value_; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool fits_int64() const;
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ + b.value_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ - b.value_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ * b.value_)); }
  BigInt operator-() const { return BigInt(mpz_class(-value_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// gcd(0, n) = |n|; the result is never negative.
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "n", "-n", "p/q"; rejects zero denominators and trailing junk.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return BigInt(mpz_class(value_.get_num())); }
  [[nodiscard]] BigInt denominator() const { return BigInt(mpz_class(value_.get_den())); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;
  /// Display only. Never feeds a decision.
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const BigInt& v);
std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace u2mp
