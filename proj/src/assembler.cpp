#include "polytile/assembler.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <tuple>

#include "polytile/error.hpp"

namespace polytile {

namespace {

int wrap(long v, long m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Cells of a tile with its word start moved to the origin.
Polyomino word_frame(const Tile& t) {
  return translate(t.cells, -static_cast<int>(t.start.x), -static_cast<int>(t.start.y));
}

TileMap residual_tiles(const PolyominoSet8& s) {
  TileMap m;
  for (const Tile* t : {&s.tooth1, &s.tooth2, &s.tooth3, &s.filler}) m[t->role] = t->cells;
  return m;
}

TileMap teeth_only(const PolyominoSet8& s) {
  TileMap m;
  for (const Tile* t : {&s.tooth1, &s.tooth2, &s.tooth3}) m[t->role] = t->cells;
  return m;
}

// Edge-connected components of the free cells of a torus grid, scanned
// row-major. Coordinates are unwrapped so each component is one piece in the plane.
std::vector<std::vector<Cell>> torus_components(const std::vector<char>& busy, int W, int H) {
  std::vector<char> seen(busy.size(), 0);
  std::vector<std::vector<Cell>> comps;
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      std::size_t i = static_cast<std::size_t>(y) * W + x;
      if (busy[i] || seen[i]) continue;
      seen[i] = 1;
      std::vector<Cell> comp;
      std::vector<Cell> stack{{x, y}};
      while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        comp.push_back(c);
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
          Cell n{c.x + dx, c.y + dy};
          std::size_t j = static_cast<std::size_t>(wrap(n.y, H)) * W + wrap(n.x, W);
          if (busy[j] || seen[j]) continue;
          seen[j] = 1;
          stack.push_back(n);
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

std::vector<std::vector<Cell>> plane_components(const std::set<Cell>& cells) {
  std::set<Cell> left = cells;
  std::vector<std::vector<Cell>> comps;
  while (!left.empty()) {
    std::vector<Cell> comp;
    std::vector<Cell> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
        if (left.erase(n)) stack.push_back(n);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Vertex block_corner(const FeatureInstance& f) {
  return {std::min(f.from.x, f.to.x), std::min(f.from.y, f.to.y)};
}

Polyomino path_cells(const BlockPath& path, Vertex start) {
  return word_to_polyomino(substitute(path.base_word(), path.plan()), start);
}

}  // namespace

AssemblyReport assemble_pattern(const PolyominoSet8& T, const WangTileSet& set, const WangTorusTiling& w) {
  bool valid = false;
  try {
    valid = check_torus(set, w);
  } catch (const Error& e) {
    throw Error(Errc::WangTilingInvalid, e.what());
  }
  if (!valid) throw Error(Errc::WangTilingInvalid, "adjacent edge colors differ");
  const auto& p = T.params;
  if (set.n() != p.n || set.t() != p.t) {
    throw Error(Errc::InvalidParameter, "tiles were reduced from a different set");
  }
  const int t = p.t;
  const long W = 9L * p.P * w.p, H = 9L * p.P * w.q;
  AssemblyReport rep;
  rep.tiling.region = {RegionKind::Torus, static_cast<int>(W), static_cast<int>(H)};
  auto& placements = rep.tiling.placements;
  auto put = [&](const Tile& tile, long sx, long sy) {
    Cell o = tile.offset_for_start(sx, sy);
    placements.push_back({tile.role, wrap(o.x, W), wrap(o.y, H)});
  };
  for (int j = 0; j < w.q; ++j) {
    for (int i = 0; i < w.p; ++i) {
      put(T.jaw, 9L * p.P * i, 9L * p.P * j);
      const long cx = static_cast<long>(p.P) * i + p.J, cy = static_cast<long>(p.P) * j + p.J;
      const int k = w.at(i, j) + 1;
      const auto a = meat_anchor(p, cx, cy, k);
      put(T.meat, 9 * a.x, 9 * a.y);
      const WangTile& tile = set.tiles[static_cast<std::size_t>(k - 1)];
      // one link per bit row (top row carries the most significant bit)
      auto east = encode_color(tile.east, t);
      for (int r = 0; r < t; ++r) {
        int shift = dent_for_bit(east[static_cast<std::size_t>(t - 1 - r)], Side::East) == FeatureKind::DeeperDent ? -1 : 0;
        put(T.link_h, 9 * (cx + t + 2) + shift, 9 * (cy + r + 1));
      }
      auto north = encode_color(tile.north, t);
      for (int r = 0; r < t; ++r) {
        int shift = dent_for_bit(north[static_cast<std::size_t>(r)], Side::North) == FeatureKind::NormalDent ? 1 : 0;
        put(T.link_v, 9 * (cx + r + 1), 9 * (cy + t + 2 + p.L) + shift);
      }
    }
  }

  std::vector<char> busy(static_cast<std::size_t>(W * H), 0);
  for (const auto& pl : placements) {
    for (const auto& c : T.get(pl.role).cells.cells) {
      auto& b = busy[static_cast<std::size_t>(wrap(c.y + pl.dy, H)) * W + wrap(c.x + pl.dx, W)];
      if (b) {
        throw Error(Errc::ResidualHoleUnmatched,
                    std::string(role_name(pl.role)) + " overlaps an earlier piece");
      }
      b = 1;
    }
  }

  auto comps = torus_components(busy, static_cast<int>(W), static_cast<int>(H));
  const TileMap fill = residual_tiles(T);
  std::vector<CoverResult> covers(comps.size());
  const long nc = static_cast<long>(comps.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < nc; ++c) {
    covers[static_cast<std::size_t>(c)] = cover_cells(fill, comps[static_cast<std::size_t>(c)], 1'000'000);
  }
  rep.residual_components = static_cast<int>(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    rep.residual_cells += static_cast<long long>(comps[c].size());
    if (covers[c].status != SearchStatus::Found) {
      const Cell f = comps[c].front();
      throw Error(Errc::ResidualHoleUnmatched,
                  "hole of " + std::to_string(comps[c].size()) + " cells at (" + std::to_string(f.x) +
                      "," + std::to_string(f.y) + ") is not covered by teeth and fillers");
    }
    for (const auto& pl : covers[c].placements) placements.push_back({pl.role, wrap(pl.dx, W), wrap(pl.dy, H)});
  }
  for (const auto& pl : placements) rep.counts[pl.role]++;
  return rep;
}

PatternTiling assemble_pattern(const WangTileSet& set, const WangTorusTiling& w) {
  return assemble_pattern(reduce(set), set, w).tiling;
}

WangTorusTiling extract_wang(const PolyominoSet8& T, const WangTileSet& set, const PatternTiling& tiling) {
  const auto& p = T.params;
  const long cell = 9L * p.P;
  const auto& r = tiling.region;
  if (r.kind != RegionKind::Torus || r.width % cell != 0 || r.height % cell != 0) {
    throw Error(Errc::MalformedPattern, "region is not a torus of whole lattice periods");
  }
  WangTorusTiling w;
  w.p = static_cast<int>(r.width / cell);
  w.q = static_cast<int>(r.height / cell);
  w.grid.assign(static_cast<std::size_t>(w.q), std::vector<int>(static_cast<std::size_t>(w.p), -1));
  const long PW = static_cast<long>(p.P) * w.p, PH = static_cast<long>(p.P) * w.q;
  for (const auto& pl : tiling.placements) {
    if (pl.role != Role::Meat) continue;
    long sx = wrap(pl.dx + T.meat.start.x, r.width), sy = wrap(pl.dy + T.meat.start.y, r.height);
    if (sx % 9 != 0 || sy % 9 != 0) {
      throw Error(Errc::MalformedPattern, "meat at (" + std::to_string(pl.dx) + "," + std::to_string(pl.dy) +
                                              ") is off the block grid");
    }
    int found = 0, fi = 0, fj = 0, fk = 0;
    for (int k = 1; k <= p.n; ++k) {
      // invert meat_anchor for this k
      long ax = sx / 9 + 3 + static_cast<long>(p.U) * (k - 1) - p.J;
      long ay = sy / 9 - p.t - 3 - static_cast<long>(p.U) * (k - 1) - p.J;
      ax = wrap(ax, PW);
      ay = wrap(ay, PH);
      if (ax % p.P != 0 || ay % p.P != 0) continue;
      ++found;
      fi = static_cast<int>(ax / p.P);
      fj = static_cast<int>(ay / p.P);
      fk = k;
    }
    if (found != 1) {
      throw Error(Errc::MalformedPattern, "meat at (" + std::to_string(pl.dx) + "," + std::to_string(pl.dy) +
                                              ") is not at a seating offset");
    }
    auto& slot = w.grid[static_cast<std::size_t>(fj)][static_cast<std::size_t>(fi)];
    if (slot != -1) throw Error(Errc::MalformedPattern, "two meats share a lattice cell");
    slot = fk - 1;
  }
  for (const auto& row : w.grid) {
    for (int k : row) {
      if (k < 0) throw Error(Errc::MalformedPattern, "a lattice cell has no meat");
    }
  }
  if (!check_torus(set, w)) throw Error(Errc::MalformedPattern, "recovered Wang grid breaks an edge color");
  return w;
}

WangTorusTiling extract_wang(const WangTileSet& set, const PatternTiling& tiling) {
  return extract_wang(reduce(set), set, tiling);
}

std::vector<MeatSeat> enumerate_mouth_seats(const PolyominoSet8& T) {
  const Tile& jaw = T.jaw;
  const Tile& meat = T.meat;
  auto jb = jaw.cells.bounds();
  const int jw = jb[2], jh = jb[3];
  std::vector<char> solid(static_cast<std::size_t>(jw) * jh, 0);
  for (const auto& c : jaw.cells.cells) solid[static_cast<std::size_t>(c.y) * jw + c.x] = 1;
  auto in_jaw = [&](long x, long y) {
    return x >= 0 && y >= 0 && x < jw && y < jh && solid[static_cast<std::size_t>(y) * jw + x];
  };

  std::set<std::tuple<long, long, long, long>> tdents;
  std::vector<const FeatureInstance*> jaw_td, meat_tb;
  for (const auto& f : jaw.features) {
    if (f.kind != FeatureKind::TDent) continue;
    tdents.insert({f.from.x, f.from.y, f.to.x, f.to.y});
    jaw_td.push_back(&f);
  }
  for (const auto& f : meat.features) {
    if (f.kind == FeatureKind::TBump) meat_tb.push_back(&f);
  }
  std::array<Polyomino, 4> bump_cells;
  for (int s = 0; s < 4; ++s) bump_cells[static_cast<std::size_t>(s)] = feature_cells(FeatureKind::TBump, static_cast<Side>(s));

  // a T-bump can only sit in a T-dent that faces it, edge against edge
  std::set<std::pair<long, long>> cand_set;
  for (const auto* fm : meat_tb) {
    for (const auto* fj : jaw_td) {
      if (fj->side != opposite(fm->side)) continue;
      cand_set.insert({fj->to.x - fm->from.x, fj->to.y - fm->from.y});
    }
  }
  std::vector<std::pair<long, long>> cands(cand_set.begin(), cand_set.end());
  std::vector<char> ok(cands.size(), 0);
  const long nc = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long ci = 0; ci < nc; ++ci) {
    auto [sx, sy] = cands[static_cast<std::size_t>(ci)];
    bool good = true;
    for (const auto& c : meat.cells.cells) {
      if (in_jaw(c.x + sx, c.y + sy)) {
        good = false;
        break;
      }
    }
    for (std::size_t b = 0; good && b < meat_tb.size(); ++b) {
      const auto* fm = meat_tb[b];
      Vertex corner = block_corner(*fm);
      bool touches = false;
      for (const auto& c : bump_cells[static_cast<std::size_t>(fm->side)].cells) {
        long x = c.x + corner.x + sx, y = c.y + corner.y + sy;
        if (in_jaw(x + 1, y) || in_jaw(x - 1, y) || in_jaw(x, y + 1) || in_jaw(x, y - 1)) {
          touches = true;
          break;
        }
      }
      if (touches && !tdents.count({fm->to.x + sx, fm->to.y + sy, fm->from.x + sx, fm->from.y + sy})) {
        good = false;
      }
    }
    ok[static_cast<std::size_t>(ci)] = good;
  }
  std::vector<MeatSeat> seats;
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    if (!ok[ci]) continue;
    long dx = cands[ci].first + meat.start.x - jaw.start.x;
    long dy = cands[ci].second + meat.start.y - jaw.start.y;
    seats.push_back({dx > 0 ? Mouth::SouthEast : Mouth::NorthWest, dx, dy});
  }
  std::sort(seats.begin(), seats.end(), [](const MeatSeat& a, const MeatSeat& b) {
    return std::tie(a.mouth, a.dx, a.dy) < std::tie(b.mouth, b.dx, b.dy);
  });
  return seats;
}

std::vector<MeatSeat> enumerate_meat_jaw_offsets(const PolyominoSet8& T) {
  // The jaw one lattice step south-east holds the same meat in its north-west mouth.
  const long step = static_cast<long>(kBlock) * T.params.P;
  auto seats = enumerate_mouth_seats(T);
  std::set<std::pair<long, long>> nw;
  for (const auto& s : seats) {
    if (s.mouth == Mouth::NorthWest) nw.insert({s.dx, s.dy});
  }
  std::vector<MeatSeat> out;
  for (const auto& s : seats) {
    if (s.mouth == Mouth::SouthEast && nw.count({s.dx - step, s.dy + step})) out.push_back(s);
  }
  return out;
}

std::vector<MeatSeat> enumerate_mouth_seats(const WangTileSet& set) { return enumerate_mouth_seats(reduce(set)); }

std::vector<MeatSeat> enumerate_meat_jaw_offsets(const WangTileSet& set) {
  return enumerate_meat_jaw_offsets(reduce(set));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Occupancy as rows of 64-bit words so a whole tile can be tested against
// it a word at a time.
struct BitTile {
  Role role;
  int w = 0, h = 0, words = 0;
  std::vector<std::uint64_t> rows;  // h * words
  std::vector<Cell> cells;
  std::vector<int> open_sides;  // per cell: bit 0 E, 1 W, 2 N, 3 S exposed
};

BitTile make_bit_tile(const Polyomino& p, Role role) {
  BitTile b;
  b.role = role;
  auto bb = p.bounds();
  b.w = bb[2];
  b.h = bb[3];
  b.words = (b.w + 63) / 64;
  b.rows.assign(static_cast<std::size_t>(b.h) * b.words, 0);
  for (const auto& c : p.cells) {
    b.rows[static_cast<std::size_t>(c.y) * b.words + c.x / 64] |= std::uint64_t{1} << (c.x % 64);
  }
  b.cells = p.cells;
  for (const auto& c : p.cells) {
    int m = 0;
    if (!p.contains({c.x + 1, c.y})) m |= 1;
    if (!p.contains({c.x - 1, c.y})) m |= 2;
    if (!p.contains({c.x, c.y + 1})) m |= 4;
    if (!p.contains({c.x, c.y - 1})) m |= 8;
    b.open_sides.push_back(m);
  }
  return b;
}

struct Board {
  int W = 0, H = 0, words = 0;
  std::vector<std::uint64_t> bits;

  bool get(int x, int y) const {
    if (x < 0 || y < 0 || x >= W || y >= H) return true;
    return (bits[static_cast<std::size_t>(y) * words + x / 64] >> (x % 64)) & 1;
  }
  bool fits(const BitTile& t, int ox, int oy) const {
    if (ox < 0 || oy < 0 || ox + t.w > W || oy + t.h > H) return false;
    const int sh = ox % 64, base = ox / 64;
    for (int r = 0; r < t.h; ++r) {
      const std::uint64_t* row = &bits[static_cast<std::size_t>(oy + r) * words];
      const std::uint64_t* tr = &t.rows[static_cast<std::size_t>(r) * t.words];
      for (int k = 0; k < t.words; ++k) {
        std::uint64_t v = tr[k];
        if (!v) continue;
        if (row[base + k] & (v << sh)) return false;
        if (sh && (row[base + k + 1] & (v >> (64 - sh)))) return false;
      }
    }
    return true;
  }
  void toggle(const BitTile& t, int ox, int oy) {
    const int sh = ox % 64, base = ox / 64;
    for (int r = 0; r < t.h; ++r) {
      std::uint64_t* row = &bits[static_cast<std::size_t>(oy + r) * words];
      const std::uint64_t* tr = &t.rows[static_cast<std::size_t>(r) * t.words];
      for (int k = 0; k < t.words; ++k) {
        std::uint64_t v = tr[k];
        row[base + k] ^= v << sh;
        if (sh) row[base + k + 1] ^= v >> (64 - sh);
      }
    }
  }
};

struct Move {
  int tile;
  int ox, oy;
};

struct DeadEndSearch {
  std::vector<BitTile> tiles;
  Board board;
  int fx = 0, fy = 0, radius = 0;
  std::uint64_t nodes = 0, max_nodes = 0;
  int max_depth = 0;
  bool budget_hit = false;

  void moves_for(int x, int y, std::size_t cap, std::vector<Move>& out) const {
    int need = 0;
    if (board.get(x + 1, y)) need |= 1;
    if (board.get(x - 1, y)) need |= 2;
    if (board.get(x, y + 1)) need |= 4;
    if (board.get(x, y - 1)) need |= 8;
    for (int ti = 0; ti < static_cast<int>(tiles.size()); ++ti) {
      const auto& t = tiles[static_cast<std::size_t>(ti)];
      for (std::size_t ci = 0; ci < t.cells.size(); ++ci) {
        if ((t.open_sides[ci] & need) != need) continue;
        int ox = x - t.cells[ci].x, oy = y - t.cells[ci].y;
        if (!board.fits(t, ox, oy)) continue;
        out.push_back({ti, ox, oy});
        if (out.size() > cap) return;
      }
    }
  }

  // true: every branch strands a cell; false: window covered
  bool refute(int depth) {
    if (max_nodes && nodes >= max_nodes) {
      budget_hit = true;
      return true;
    }
    ++nodes;
    max_depth = std::max(max_depth, depth);
    int bx = -1;
    std::vector<Move> best, scratch;
    bool any_open = false;
    for (int y = fy - radius; y <= fy + radius; ++y) {
      for (int x = fx - radius; x <= fx + radius; ++x) {
        if (board.get(x, y)) continue;
        any_open = true;
        bool frontier = board.get(x + 1, y) || board.get(x - 1, y) || board.get(x, y + 1) || board.get(x, y - 1);
        if (!frontier) continue;
        scratch.clear();
        // only need to know whether this cell beats the best so far
        moves_for(x, y, bx < 0 ? SIZE_MAX : best.size() - 1, scratch);
        if (bx < 0 || scratch.size() < best.size()) {
          best.swap(scratch);
          bx = x;
          if (best.empty()) return true;
        }
      }
    }
    if (!any_open) return false;
    if (bx < 0) return false;  // nothing open touches a placed piece; cannot happen once seeded
    for (const auto& m : best) {
      const auto& t = tiles[static_cast<std::size_t>(m.tile)];
      board.toggle(t, m.ox, m.oy);
      bool dead = refute(depth + 1);
      board.toggle(t, m.ox, m.oy);
      if (!dead) return false;
      if (budget_hit) return true;
    }
    return true;
  }
};

}  // namespace

DeadEndReport refute_window(const std::vector<Polyomino>& pieces, const Polyomino& seed, Cell focus,
                            int radius, std::uint64_t max_nodes) {
  DeadEndReport rep;
  rep.flank = focus;
  DeadEndSearch s;
  for (const auto& p : pieces) s.tiles.push_back(make_bit_tile(canonicalize(p), p.role.value_or(Role::Filler)));
  const Polyomino seed_c = canonicalize(seed);
  auto sb = seed.bounds();
  Cell focus_c{focus.x - sb[0], focus.y - sb[1]};
  int reach = 0;
  for (const auto& t : s.tiles) reach = std::max({reach, t.w, t.h});
  reach = std::max({reach, seed_c.bounds()[2], seed_c.bounds()[3]});
  const int margin = radius + reach + 2;
  s.board.W = 2 * margin + 1;
  s.board.H = 2 * margin + 1;
  s.board.words = (s.board.W + 63) / 64 + 1;
  s.board.bits.assign(static_cast<std::size_t>(s.board.H) * s.board.words, 0);
  s.fx = margin;
  s.fy = margin;
  s.radius = radius;
  s.max_nodes = max_nodes;
  BitTile seed_bits = make_bit_tile(seed_c, Role::Tooth1);
  s.board.toggle(seed_bits, s.fx - focus_c.x, s.fy - focus_c.y);
  if (s.board.get(s.fx, s.fy)) throw Error(Errc::InvalidParameter, "focus cell lies inside the seed");
  bool dead = s.refute(0);
  rep.nodes = s.nodes;
  rep.max_depth = s.max_depth;
  if (s.budget_hit) {
    rep.verdict = Verdict::Inconclusive;
  } else {
    rep.verdict = dead ? Verdict::True : Verdict::False;
  }
  return rep;
}

DeadEndReport dead_end_check(const PolyominoSet8& T, int radius, std::uint64_t max_nodes) {
  // east pocket of the seed tooth, between its core and its east T-bump
  const auto& outline = tooth_outline(1);
  long mx = outline.front().x, my = outline.front().y;
  for (const auto& v : outline) {
    mx = std::min(mx, v.x);
    my = std::min(my, v.y);
  }
  Cell pocket{static_cast<int>(5 - mx), static_cast<int>(1 - my)};
  if (radius < 10) {
    DeadEndReport rep;
    rep.flank = pocket;
    return rep;
  }
  std::vector<Polyomino> pieces;
  for (const Tile* t : {&T.tooth1, &T.tooth2, &T.tooth3, &T.filler, &T.link_h, &T.link_v}) pieces.push_back(t->cells);
  return refute_window(pieces, T.tooth1.cells, pocket, radius, max_nodes);
}

DeadEndReport dead_end_check(const WangTileSet& set, int radius, std::uint64_t max_nodes) {
  return dead_end_check(reduce(set), radius, max_nodes);
}

bool link_color_gate(const PolyominoSet8& T, int color_a, int color_b, Axis axis) {
  const auto& p = T.params;
  const int t = p.t;
  const auto a = encode_color(color_a, t);
  const auto b = encode_color(color_b, t);
  const long span = 9L * p.L;
  std::vector<FeatureKind> ka, kb;
  Polyomino host_a, host_b, link;
  long x0, x1, y0, y1;  // open channel including the host boxes
  if (axis == Axis::Horizontal) {
    for (int i = 0; i < t; ++i) ka.push_back(dent_for_bit(a[static_cast<std::size_t>(t - 1 - i)], Side::East));
    for (int i = 0; i < t; ++i) kb.push_back(dent_for_bit(b[static_cast<std::size_t>(i)], Side::West));
    BlockPath pa, pb;
    pa.run(Dir::D, t);
    pa.run(Dir::R, 2);
    pa.run(Dir::U, t, ka);
    pa.run(Dir::L, 2);
    pb.run(Dir::D, t, kb);
    pb.run(Dir::R, 2);
    pb.run(Dir::U, t);
    pb.run(Dir::L, 2);
    host_a = path_cells(pa, {-18, 9L * t});
    host_b = path_cells(pb, {span, 9L * t});
    link = word_frame(T.link_h);
    x0 = -18;
    x1 = span + 18;
    y0 = 0;
    y1 = 9L * t;
  } else {
    for (int i = 0; i < t; ++i) ka.push_back(dent_for_bit(a[static_cast<std::size_t>(t - 1 - i)], Side::North));
    for (int i = 0; i < t; ++i) kb.push_back(dent_for_bit(b[static_cast<std::size_t>(i)], Side::South));
    BlockPath pa, pb;
    pa.run(Dir::D, 2);
    pa.run(Dir::R, t);
    pa.run(Dir::U, 2);
    pa.run(Dir::L, t, ka);
    pb.run(Dir::D, 2);
    pb.run(Dir::R, t, kb);
    pb.run(Dir::U, 2);
    pb.run(Dir::L, t);
    host_a = path_cells(pa, {0, 0});
    host_b = path_cells(pb, {0, span + 18});
    link = word_frame(T.link_v);
    x0 = 0;
    x1 = 9L * t;
    y0 = -18;
    y1 = span + 18;
  }
  std::set<Cell> open;
  for (long y = y0; y < y1; ++y) {
    for (long x = x0; x < x1; ++x) {
      Cell c{static_cast<int>(x), static_cast<int>(y)};
      if (!host_a.contains(c) && !host_b.contains(c)) open.insert(c);
    }
  }
  const TileMap fill = teeth_only(T);
  for (int r = 0; r < t; ++r) {
    // the band of channel row r: its link plus whatever the dents leave over
    auto in_band = [&](Cell c) {
      return axis == Axis::Horizontal ? (c.y >= 9 * r && c.y < 9 * (r + 1)) : (c.x >= 9 * r && c.x < 9 * (r + 1));
    };
    bool row_ok = false;
    for (int s = -9; s <= 9 && !row_ok; ++s) {
      int ox = axis == Axis::Horizontal ? s : 9 * (r + 1);
      int oy = axis == Axis::Horizontal ? 9 * (r + 1) : static_cast<int>(span) + s;
      std::set<Cell> left;
      for (const auto& c : open) {
        if (in_band(c)) left.insert(c);
      }
      bool fits = true;
      for (const auto& c : link.cells) {
        if (!left.erase({c.x + ox, c.y + oy})) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      row_ok = true;
      for (const auto& comp : plane_components(left)) {
        if (cover_cells(fill, comp, 100'000).status != SearchStatus::Found) {
          row_ok = false;
          break;
        }
      }
    }
    if (!row_ok) return false;
  }
  return true;
}

bool link_color_gate(const WangTileSet& set, int color_a, int color_b, Axis axis) {
  return link_color_gate(reduce(set), color_a, color_b, axis);
}

}  // namespace polytile
