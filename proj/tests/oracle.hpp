#pragma once

// Slow, obviously-correct reference computations used by the tests.
// Nothing here calls into the library except for plain data types.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polytile/geometry.hpp"
#include "polytile/wang.hpp"

namespace oracle {

struct Run {
  char dir;
  long len;
};

inline std::vector<Run> runs(const std::string& word) {
  std::vector<Run> out;
  std::istringstream is(word);
  std::string tok;
  while (is >> tok) out.push_back({tok[0], std::stol(tok.substr(1))});
  return out;
}

inline std::pair<long, long> delta(char d) {
  switch (d) {
    case 'u': return {0, 1};
    case 'd': return {0, -1};
    case 'l': return {-1, 0};
    default: return {1, 0};
  }
}

inline std::pair<long, long> closure(const std::string& word) {
  long x = 0, y = 0;
  for (auto r : runs(word)) {
    auto [dx, dy] = delta(r.dir);
    x += dx * r.len;
    y += dy * r.len;
  }
  return {x, y};
}

// Unit-step vertex walk, start included, end included.
inline std::vector<std::pair<long, long>> walk(const std::string& word, long x0 = 0, long y0 = 0) {
  std::vector<std::pair<long, long>> pts{{x0, y0}};
  for (auto r : runs(word)) {
    auto [dx, dy] = delta(r.dir);
    for (long i = 0; i < r.len; ++i) {
      x0 += dx;
      y0 += dy;
      pts.push_back({x0, y0});
    }
  }
  return pts;
}

inline long long shoelace(const std::string& word) {
  auto p = walk(word);
  long long a2 = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) a2 += p[i].first * p[i + 1].second - p[i + 1].first * p[i].second;
  return a2 / 2;
}

// Each lattice vertex at most once (besides the closing return to start).
inline bool simple(const std::string& word) {
  auto p = walk(word);
  std::set<std::pair<long, long>> seen(p.begin(), p.end() - 1);
  return seen.size() == p.size() - 1 && p.front() == p.back();
}

inline std::pair<long, long> bbox(const std::string& word) {
  auto p = walk(word);
  long minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (auto [x, y] : p) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  return {maxx - minx, maxy - miny};
}

// Flood fill from outside with the path's unit edges as walls; what the
// flood cannot reach is the interior.
inline std::vector<polytile::Cell> flood_cells(const std::string& word, long x0 = 0, long y0 = 0) {
  auto p = walk(word, x0, y0);
  long minx = p[0].first, maxx = minx, miny = p[0].second, maxy = miny;
  for (auto [x, y] : p) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  // cells from minx-1 .. maxx, miny-1 .. maxy
  const long W = maxx - minx + 2, H = maxy - miny + 2;
  auto id = [&](long cx, long cy) { return (cy - (miny - 1)) * W + (cx - (minx - 1)); };
  std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> walls;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto a = p[i], b = p[i + 1];
    if (b < a) std::swap(a, b);
    walls.insert({a, b});
  }
  auto blocked = [&](long cx, long cy, long nx, long ny) {
    // shared edge between cell (cx,cy) and neighbor (nx,ny)
    std::pair<long, long> a, b;
    if (nx != cx) {
      long ex = std::max(cx, nx);
      a = {ex, cy};
      b = {ex, cy + 1};
    } else {
      long ey = std::max(cy, ny);
      a = {cx, ey};
      b = {cx + 1, ey};
    }
    return walls.count({a, b}) > 0;
  };
  std::vector<char> out(static_cast<std::size_t>(W * H), 0);
  std::deque<std::pair<long, long>> q{{minx - 1, miny - 1}};
  out[static_cast<std::size_t>(id(minx - 1, miny - 1))] = 1;
  const long dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!q.empty()) {
    auto [cx, cy] = q.front();
    q.pop_front();
    for (auto& d : dirs) {
      long nx = cx + d[0], ny = cy + d[1];
      if (nx < minx - 1 || ny < miny - 1 || nx > maxx || ny > maxy) continue;
      auto k = static_cast<std::size_t>(id(nx, ny));
      if (out[k] || blocked(cx, cy, nx, ny)) continue;
      out[k] = 1;
      q.push_back({nx, ny});
    }
  }
  std::vector<polytile::Cell> cells;
  for (long y = miny; y < maxy; ++y) {
    for (long x = minx; x < maxx; ++x) {
      if (!out[static_cast<std::size_t>(id(x, y))]) cells.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// Polygon given by corner vertices: expand to a run word and flood it.
inline std::string corners_to_word(const std::vector<std::pair<long, long>>& v) {
  std::string w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto a = v[i], b = v[(i + 1) % v.size()];
    long dx = b.first - a.first, dy = b.second - a.second;
    char d = dx > 0 ? 'r' : dx < 0 ? 'l' : dy > 0 ? 'u' : 'd';
    if (!w.empty()) w += ' ';
    w += d + std::to_string(std::labs(dx + dy));
  }
  return w;
}

inline std::vector<polytile::Cell> shift_to_origin(std::vector<polytile::Cell> c) {
  int mx = c[0].x, my = c[0].y;
  for (auto& e : c) {
    mx = std::min(mx, e.x);
    my = std::min(my, e.y);
  }
  for (auto& e : c) {
    e.x -= mx;
    e.y -= my;
  }
  std::sort(c.begin(), c.end());
  return c;
}

// Corner vertices of a walk (collinear points dropped), rotated so the
// lexicographically smallest comes first, and in counterclockwise order.
inline std::vector<std::pair<long, long>> corner_cycle(std::vector<std::pair<long, long>> pts, bool ccw) {
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  std::vector<std::pair<long, long>> c;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto a = pts[(i + n - 1) % n], b = pts[i], d = pts[(i + 1) % n];
    long cross = (b.first - a.first) * (d.second - b.second) - (b.second - a.second) * (d.first - b.first);
    if (cross != 0) c.push_back(b);
  }
  if (!ccw) std::reverse(c.begin(), c.end());
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

// Does this grid satisfy every wraparound adjacency?
inline bool torus_ok(const polytile::WangTileSet& s, const std::vector<int>& g, int p, int q) {
  for (int y = 0; y < q; ++y) {
    for (int x = 0; x < p; ++x) {
      const auto& a = s.tiles[static_cast<std::size_t>(g[static_cast<std::size_t>(y * p + x)])];
      const auto& e = s.tiles[static_cast<std::size_t>(g[static_cast<std::size_t>(y * p + (x + 1) % p)])];
      const auto& nn = s.tiles[static_cast<std::size_t>(g[static_cast<std::size_t>(((y + 1) % q) * p + x)])];
      if (a.east != e.west || a.north != nn.south) return false;
    }
  }
  return true;
}

// Every grid of every period in solver order; returns the first valid
// one as (p, q, row-major indices) or p = 0.
struct Found {
  int p = 0, q = 0;
  std::vector<int> grid;
};

inline Found brute_torus(const polytile::WangTileSet& s, int max_period) {
  const int n = s.n();
  for (int sum = 2; sum <= 2 * max_period; ++sum) {
    for (int p = 1; p <= max_period; ++p) {
      int q = sum - p;
      if (q < 1 || q > max_period) continue;
      const int cells = p * q;
      std::vector<int> g(static_cast<std::size_t>(cells), 0);
      // odometer, first cell most significant: lexicographic in row-major order
      while (true) {
        if (torus_ok(s, g, p, q)) return {p, q, g};
        int i = cells - 1;
        while (i >= 0 && g[static_cast<std::size_t>(i)] == n - 1) g[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++g[static_cast<std::size_t>(i)];
      }
    }
  }
  return {};
}

}  // namespace oracle
