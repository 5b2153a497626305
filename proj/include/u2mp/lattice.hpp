#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "u2mp/rational.hpp"

// Weight lattice of U(2) in the basis (e1, e2); the simple root is
// alpha = e1 - e2 and the dominant chamber is {x >= y}.

namespace u2mp {

/// Integral vector a*e1 + b*e2.
struct Weight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  friend Weight operator+(Weight u, Weight v) { return {u.a + v.a, u.b + v.b}; }
  friend Weight operator-(Weight u, Weight v) { return {u.a - v.a, u.b - v.b}; }
  friend Weight operator*(std::int64_t k, Weight v) { return {k * v.a, k * v.b}; }
  Weight operator-() const { return {-a, -b}; }
};

/// Exact point x*e1 + y*e2 of t*.
struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RationalPoint(const Weight& w) : x(w.a), y(w.b) {}

  [[nodiscard]] bool is_zero() const { return x.is_zero() && y.is_zero(); }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  /// Lexicographic on (x, y).
  friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;

  friend RationalPoint operator+(const RationalPoint& p, const RationalPoint& q) { return {p.x + q.x, p.y + q.y}; }
  friend RationalPoint operator-(const RationalPoint& p, const RationalPoint& q) { return {p.x - q.x, p.y - q.y}; }
  friend RationalPoint operator*(const Rational& s, const RationalPoint& p) { return {s * p.x, s * p.y}; }
  RationalPoint operator-() const { return {-x, -y}; }
};

namespace weights {
inline constexpr Weight kEps1{1, 0};
inline constexpr Weight kEps2{0, 1};
inline constexpr Weight kAlpha{1, -1};
/// e1 + e2, the direction of the wall.
inline constexpr Weight kDiagonal{1, 1};
}  // namespace weights

/// <alpha^vee, v> = x - y.
Rational coroot_pairing(const RationalPoint& v);
std::int64_t coroot_pairing(const Weight& w);

/// s_alpha(v) = v - <alpha^vee, v> alpha, i.e. (x, y) -> (y, x).
RationalPoint weyl_reflect(const RationalPoint& v);
Weight weyl_reflect(const Weight& w);

/// Primitive lattice vector on the ray R>=0 * v. Throws std::invalid_argument
/// for v = 0 and std::overflow_error if the result leaves 64-bit range.
Weight primitive_ray(const RationalPoint& v);
Weight primitive_ray(const Weight& w);

[[nodiscard]] bool is_primitive(const Weight& w);

/// u.a*v.b - u.b*v.a.
std::int64_t determinant(const Weight& u, const Weight& v);

/// |det(u, v)| = 1.
[[nodiscard]] bool is_lattice_basis(const Weight& u, const Weight& v);

/// Exact 2x2 cross product of rational vectors.
Rational cross(const RationalPoint& u, const RationalPoint& v);
Rational dot(const RationalPoint& u, const RationalPoint& v);

std::string to_string(const Weight& w);
std::string to_string(const RationalPoint& p);
std::ostream& operator<<(std::ostream& os, const Weight& w);
std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

}  // namespace u2mp
