#include "polytile/engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "polytile/error.hpp"

namespace polytile {

namespace {

int wrap(long v, int m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

const Polyomino& lookup(const TileMap& tiles, Role r) {
  auto it = tiles.find(r);
  if (it == tiles.end()) throw Error(Errc::UnknownRole, std::string(role_name(r)));
  return it->second;
}

long long row_major_key(Cell c) {
  return (static_cast<long long>(c.y) << 32) + (static_cast<long long>(c.x) + (1LL << 31));
}

Cell from_key(long long k) {
  long long y = k >> 32;
  long long x = (k - (y << 32)) - (1LL << 31);
  return {static_cast<int>(x), static_cast<int>(y)};
}

// Maps a placed cell to its region index, or -1 if it falls outside a rectangle.
long long cell_index(const Region& r, long x, long y) {
  if (r.kind == RegionKind::Torus) {
    return static_cast<long long>(wrap(y, r.height)) * r.width + wrap(x, r.width);
  }
  if (x < 0 || y < 0 || x >= r.width || y >= r.height) return -1;
  return static_cast<long long>(y) * r.width + x;
}

std::optional<Violation> scan(const Region& region, const std::vector<int>& count, long long outside) {
  if (outside != std::numeric_limits<long long>::max()) return Violation{from_key(outside), -1};
  for (long long i = 0; i < region.area(); ++i) {
    if (count[static_cast<std::size_t>(i)] != 1) {
      return Violation{{static_cast<int>(i % region.width), static_cast<int>(i / region.width)},
                       count[static_cast<std::size_t>(i)]};
    }
  }
  return std::nullopt;
}

void check_region(const Region& r) {
  if (r.width < 1 || r.height < 1) throw Error(Errc::InvalidParameter, "region must be at least 1x1");
}

struct Shape {
  Role role;
  std::vector<Cell> rel;  // relative to the row-major first cell
};

std::vector<Shape> anchored_shapes(const TileMap& tiles) {
  std::vector<Shape> out;
  for (const auto& [role, poly] : tiles) {
    if (poly.cells.empty()) continue;
    Shape s{role, {}};
    Cell f = poly.cells.front();
    for (const auto& c : poly.cells) s.rel.push_back({c.x - f.x, c.y - f.y});
    out.push_back(std::move(s));
  }
  return out;
}

struct RegionSearch {
  Region region;
  const TileMap& tiles;
  std::vector<char> used;
  std::vector<Placement> placed;
  std::optional<Cell> anchor;

  bool fits(const Polyomino& p, int dx, int dy) const {
    for (const auto& c : p.cells) {
      long long i = cell_index(region, static_cast<long>(c.x) + dx, static_cast<long>(c.y) + dy);
      if (i < 0 || used[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  void mark(const Polyomino& p, int dx, int dy, char v) {
    for (const auto& c : p.cells) {
      used[static_cast<std::size_t>(cell_index(region, static_cast<long>(c.x) + dx, static_cast<long>(c.y) + dy))] = v;
    }
  }

  bool run(long long from) {
    long long target = -1;
    if (anchor) {
      target = cell_index(region, anchor->x, anchor->y);
      anchor.reset();
      if (target < 0) return false;
    } else {
      while (from < region.area() && used[static_cast<std::size_t>(from)]) ++from;
      if (from == region.area()) return true;
      target = from;
    }
    int tx = static_cast<int>(target % region.width), ty = static_cast<int>(target / region.width);
    for (const auto& [role, poly] : tiles) {
      std::set<std::pair<int, int>> tried;
      for (const auto& c : poly.cells) {
        int dx = tx - c.x, dy = ty - c.y;
        if (region.kind == RegionKind::Torus) {
          dx = wrap(dx, region.width);
          dy = wrap(dy, region.height);
        }
        if (!tried.insert({dx, dy}).second || !fits(poly, dx, dy)) continue;
        mark(poly, dx, dy, 1);
        placed.push_back({role, dx, dy});
        if (run(from)) return true;
        placed.pop_back();
        mark(poly, dx, dy, 0);
      }
    }
    return false;
  }
};

struct CellSearch {
  std::vector<Shape> shapes;
  int minx, miny, w, h;
  std::vector<char> open;  // cell still to cover
  std::vector<Placement> placed;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  bool limited = false;

  bool is_open(long x, long y) const {
    if (x < minx || y < miny || x >= minx + w || y >= miny + h) return false;
    return open[static_cast<std::size_t>((y - miny) * w + (x - minx))];
  }
  void set(long x, long y, char v) { open[static_cast<std::size_t>((y - miny) * w + (x - minx))] = v; }

  bool run(long long from) {
    if (max_nodes && nodes >= max_nodes) {
      limited = true;
      return false;
    }
    ++nodes;
    const long long n = static_cast<long long>(w) * h;
    while (from < n && !open[static_cast<std::size_t>(from)]) ++from;
    if (from == n) return true;
    long cx = minx + from % w, cy = miny + from / w;
    // every earlier cell is covered, so the covering tile starts here
    for (const auto& s : shapes) {
      bool ok = true;
      for (const auto& r : s.rel) {
        if (!is_open(cx + r.x, cy + r.y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (const auto& r : s.rel) set(cx + r.x, cy + r.y, 0);
      placed.push_back({s.role, static_cast<int>(cx), static_cast<int>(cy)});
      if (run(from + 1)) return true;
      placed.pop_back();
      for (const auto& r : s.rel) set(cx + r.x, cy + r.y, 1);
      if (limited) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<Violation> find_violation(const TileMap& tiles, const PatternTiling& tiling) {
  const Region& region = tiling.region;
  check_region(region);
  std::vector<const Polyomino*> polys;
  polys.reserve(tiling.placements.size());
  for (const auto& p : tiling.placements) polys.push_back(&lookup(tiles, p.role));
  std::vector<int> count(static_cast<std::size_t>(region.area()), 0);
  long long outside = std::numeric_limits<long long>::max();
  const long np = static_cast<long>(tiling.placements.size());
#pragma omp parallel for schedule(dynamic, 4) reduction(min : outside)
  for (long i = 0; i < np; ++i) {
    const auto& pl = tiling.placements[static_cast<std::size_t>(i)];
    for (const auto& c : polys[static_cast<std::size_t>(i)]->cells) {
      long x = static_cast<long>(c.x) + pl.dx, y = static_cast<long>(c.y) + pl.dy;
      long long idx = cell_index(region, x, y);
      if (idx < 0) {
        outside = std::min(outside, row_major_key({static_cast<int>(x), static_cast<int>(y)}));
        continue;
      }
#pragma omp atomic
      ++count[static_cast<std::size_t>(idx)];
    }
  }
  return scan(region, count, outside);
}

std::optional<Violation> find_violation_serial(const TileMap& tiles, const PatternTiling& tiling) {
  const Region& region = tiling.region;
  check_region(region);
  std::vector<int> count(static_cast<std::size_t>(region.area()), 0);
  long long outside = std::numeric_limits<long long>::max();
  for (const auto& pl : tiling.placements) {
    for (const auto& c : lookup(tiles, pl.role).cells) {
      long x = static_cast<long>(c.x) + pl.dx, y = static_cast<long>(c.y) + pl.dy;
      long long idx = cell_index(region, x, y);
      if (idx < 0) {
        outside = std::min(outside, row_major_key({static_cast<int>(x), static_cast<int>(y)}));
      } else {
        ++count[static_cast<std::size_t>(idx)];
      }
    }
  }
  return scan(region, count, outside);
}

bool verify_tiling(const TileMap& tiles, const PatternTiling& tiling) {
  return !find_violation(tiles, tiling).has_value();
}

bool verify_tiling_serial(const TileMap& tiles, const PatternTiling& tiling) {
  return !find_violation_serial(tiles, tiling).has_value();
}

std::optional<PatternTiling> solve_region(const TileMap& tiles, Region region, std::optional<Cell> anchor) {
  check_region(region);
  long long total = 0;
  for (const auto& [role, poly] : tiles) total += static_cast<long long>(poly.size());
  if (total == 0) return std::nullopt;
  RegionSearch s{region, tiles, std::vector<char>(static_cast<std::size_t>(region.area()), 0), {}, anchor};
  if (!s.run(0)) return std::nullopt;
  return PatternTiling{region, s.placed};
}

CoverResult cover_cells(const TileMap& tiles, const std::vector<Cell>& cells, std::uint64_t max_nodes) {
  CoverResult out;
  if (cells.empty()) {
    out.status = SearchStatus::Found;
    return out;
  }
  int minx = cells.front().x, maxx = minx, miny = cells.front().y, maxy = miny;
  for (const auto& c : cells) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  CellSearch s{anchored_shapes(tiles), minx, miny, maxx - minx + 1, maxy - miny + 1, {}, {}, 0, max_nodes, false};
  s.open.assign(static_cast<std::size_t>(s.w) * static_cast<std::size_t>(s.h), 0);
  for (const auto& c : cells) s.set(c.x, c.y, 1);
  bool found = s.run(0);
  out.nodes = s.nodes;
  if (found) {
    out.status = SearchStatus::Found;
    // report translations of the tile's own cells rather than of its first cell
    for (auto& p : s.placed) {
      const Cell f = tiles.at(p.role).cells.front();
      out.placements.push_back({p.role, p.dx - f.x, p.dy - f.y});
    }
  } else {
    out.status = s.limited ? SearchStatus::LimitReached : SearchStatus::Exhausted;
  }
  return out;
}

std::string format_plc(const PatternTiling& tiling) {
  std::ostringstream os;
  os << "region: " << (tiling.region.kind == RegionKind::Torus ? "torus" : "rect") << ' '
     << tiling.region.width << ' ' << tiling.region.height << '\n';
  for (const auto& p : tiling.placements) {
    os << "place " << role_name(p.role) << ' ' << p.dx << ' ' << p.dy << '\n';
  }
  return os.str();
}

PatternTiling parse_plc(std::string_view text) {
  PatternTiling t;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_region = false;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string extra;
    if (head == "region:") {
      std::string kind;
      if (have_region) fail("second 'region:' line");
      if (!(ls >> kind >> t.region.width >> t.region.height)) fail("expected 'region: <rect|torus> W H'");
      if (kind == "torus") {
        t.region.kind = RegionKind::Torus;
      } else if (kind == "rect") {
        t.region.kind = RegionKind::Rectangle;
      } else {
        fail("unknown region kind '" + kind + "'");
      }
      if (t.region.width < 1 || t.region.height < 1) fail("region must be at least 1x1");
      have_region = true;
    } else if (head == "place") {
      if (!have_region) fail("'place' before 'region:'");
      std::string role;
      Placement p{Role::Meat, 0, 0};
      if (!(ls >> role >> p.dx >> p.dy)) fail("expected 'place <role> dx dy'");
      auto r = parse_role(role);
      if (!r) throw Error(Errc::UnknownRole, "line " + std::to_string(lineno) + ": '" + role + "'");
      p.role = *r;
      t.placements.push_back(p);
    } else {
      fail("unexpected '" + head + "'");
    }
    if (ls >> extra) fail("trailing text '" + extra + "'");
  }
  if (!have_region) fail("missing 'region:' line");
  return t;
}

}  // namespace polytile
