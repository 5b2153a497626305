#pragma once

// Fixed-seed generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "u2mp/polygon.hpp"

namespace testgen {

inline constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr std::size_t kSamples = 10000;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  u2mp::Rational rational(std::int64_t num = 40, std::int64_t den = 10) {
    return {integer(-num, num), integer(1, den)};
  }
  u2mp::Rational positive(std::int64_t num = 30, std::int64_t den = 8) { return {integer(1, num), integer(1, den)}; }
  u2mp::RationalPoint point() { return {rational(), rational()}; }
  u2mp::RationalPoint chamber_point() {
    auto p = point();
    if (p.x < p.y) std::swap(p.x, p.y);
    return p;
  }
  u2mp::Weight weight(std::int64_t r = 25) { return {integer(-r, r), integer(-r, r)}; }

  std::vector<u2mp::RationalPoint> points(std::size_t lo, std::size_t hi, bool chamber = false) {
    std::vector<u2mp::RationalPoint> v(static_cast<std::size_t>(integer(lo, hi)));
    for (auto& p : v) p = chamber ? chamber_point() : point();
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline u2mp::RationalPoint pt(std::int64_t x, std::int64_t y) { return {u2mp::Rational(x), u2mp::Rational(y)}; }

inline u2mp::Polygon hull(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pts) {
  std::vector<u2mp::RationalPoint> v;
  for (const auto& [x, y] : pts) v.push_back(pt(x, y));
  return u2mp::convex_hull(v);
}

}  // namespace testgen
