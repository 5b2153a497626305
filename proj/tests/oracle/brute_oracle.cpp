#include "brute_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::int64_t cross(P o, P a, P b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

std::int64_t dist2(P a, P b) {
  const std::int64_t dx = a.first - b.first, dy = a.second - b.second;
  return dx * dx + dy * dy;
}

P prim(P v) {
  const std::int64_t g = std::gcd(std::llabs(v.first), std::llabs(v.second));
  return {v.first / g, v.second / g};
}

using Pair = std::set<P>;

// Every admissible unordered ray pair at a wall vertex, written out.
std::set<Pair> admissible_wall_pairs(std::int64_t bound) {
  std::set<Pair> out;
  for (std::int64_t k = -bound; k <= bound; ++k) {
    out.insert(Pair{P{1, 1}, P{k + 1, k}});
    out.insert(Pair{P{-1, -1}, P{k + 1, k}});
  }
  for (std::int64_t j = 0; j <= bound; ++j) {
    out.insert(Pair{P{1, -1}, P{j + 1, -j}});
    out.insert(Pair{P{1, -1}, P{j, -j - 1}});
    out.insert(Pair{P{j + 1, -j}, P{j, -j - 1}});
  }
  return out;
}

}  // namespace

std::vector<P> hull(std::vector<P> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P> h;
  P cur = pts.front();
  do {
    h.push_back(cur);
    P next = pts[0] == cur ? pts[1] : pts[0];
    for (const P& q : pts) {
      if (q == cur) continue;
      const std::int64_t c = cross(cur, next, q);
      // Keep the most clockwise candidate; on ties the farthest one.
      if (c < 0 || (c == 0 && dist2(cur, q) > dist2(cur, next))) next = q;
    }
    cur = next;
  } while (cur != h.front() && h.size() <= pts.size());
  if (h.size() < 3) return {h.front(), h.back()};
  return h;
}

Verdict check(const std::vector<P>& pts, std::int64_t bound) {
  Verdict v;
  const auto h = hull(pts);
  if (h.size() < 3) {
    v.dim2 = false;
    v.wall_vertices = static_cast<int>(std::count_if(h.begin(), h.end(), [](P p) { return p.first == p.second; }));
    return v;
  }
  v.dim2 = true;
  static thread_local std::int64_t cached_bound = -1;
  static thread_local std::set<Pair> walls;
  if (cached_bound != 4 * bound + 4) {
    cached_bound = 4 * bound + 4;
    walls = admissible_wall_pairs(cached_bound);
  }
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P a = h[i], nx = h[(i + 1) % n], pv = h[(i + n - 1) % n];
    const P r1 = prim({nx.first - a.first, nx.second - a.second});
    const P r2 = prim({pv.first - a.first, pv.second - a.second});
    if (a.first > a.second) {
      const std::int64_t d = r1.first * r2.second - r1.second * r2.first;
      if (d != 1 && d != -1) v.interior_ok = false;
    } else {
      ++v.wall_vertices;
      if (!walls.count(Pair{r1, r2})) v.wall_ok = false;
    }
  }
  return v;
}

bool kaehler(const std::vector<P>& pts) {
  const auto h = hull(pts);
  std::vector<P> wall;
  for (P p : h) {
    if (p.first == p.second) wall.push_back(p);
  }
  if (wall.size() != 1) return true;
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P a = h[i], b = h[(i + 1) % n];
    // Interior lies to the left of a counterclockwise edge.
    const P normal{-(b.second - a.second), b.first - a.first};
    if (normal.first - normal.second > 0 && a != wall[0] && b != wall[0]) return false;
  }
  return true;
}

}  // namespace oracle
