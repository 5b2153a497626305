#include "u2mp/lattice.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace u2mp {

Rational coroot_pairing(const RationalPoint& v) { return v.x - v.y; }

std::int64_t coroot_pairing(const Weight& w) { return w.a - w.b; }

RationalPoint weyl_reflect(const RationalPoint& v) { return {v.y, v.x}; }

Weight weyl_reflect(const Weight& w) { return {w.b, w.a}; }

Weight primitive_ray(const RationalPoint& v) {
  if (v.is_zero()) throw std::invalid_argument("primitive_ray: zero vector has no ray");
  const BigInt scale = lcm(v.x.denominator(), v.y.denominator());
  const Rational sx = v.x * Rational(scale);
  const Rational sy = v.y * Rational(scale);
  const BigInt ix = sx.numerator();
  const BigInt iy = sy.numerator();
  const BigInt g = gcd(ix, iy);
  const Rational px = Rational(ix, g);
  const Rational py = Rational(iy, g);
  return {px.numerator().to_int64(), py.numerator().to_int64()};
}

Weight primitive_ray(const Weight& w) {
  if (w.a == 0 && w.b == 0) throw std::invalid_argument("primitive_ray: zero vector has no ray");
  const std::int64_t g = std::gcd(w.a, w.b);
  return {w.a / g, w.b / g};
}

bool is_primitive(const Weight& w) { return std::gcd(w.a, w.b) == 1; }

std::int64_t determinant(const Weight& u, const Weight& v) {
  const __int128 d = static_cast<__int128>(u.a) * v.b - static_cast<__int128>(u.b) * v.a;
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant exceeds 64 bits");
  return static_cast<std::int64_t>(d);
}

bool is_lattice_basis(const Weight& u, const Weight& v) {
  const __int128 d = static_cast<__int128>(u.a) * v.b - static_cast<__int128>(u.b) * v.a;
  return d == 1 || d == -1;
}

Rational cross(const RationalPoint& u, const RationalPoint& v) { return u.x * v.y - u.y * v.x; }

Rational dot(const RationalPoint& u, const RationalPoint& v) { return u.x * v.x + u.y * v.y; }

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

std::string to_string(const RationalPoint& p) {
  return "(" + p.x.to_string() + "," + p.y.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const RationalPoint& p) { return os << to_string(p); }

}  // namespace u2mp
