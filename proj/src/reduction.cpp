#include "polytile/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "polytile/error.hpp"

namespace polytile {

namespace {

using Kinds = std::vector<FeatureKind>;

// Per simulated tile: features on the west, south, east and north runs,
// each listed in travel order of its run.
struct UnitKinds {
  Kinds west, south, east, north;
};

void append_reversed(Kinds& out, Kinds in) {
  std::reverse(in.begin(), in.end());
  out.insert(out.end(), in.begin(), in.end());
}

// Staircase outline shared by the meat (n units) and the filler (one unit),
// from the upper-left corner. Each (.)^{t+1} run gets a T-bump on the
// block next to the single-block step and t color blocks next to the
// doubled step.
BlockPath staircase(const std::vector<UnitKinds>& units, int t) {
  BlockPath b;
  b.run(Dir::D, 1);
  for (const auto& u : units) {
    b.run(Dir::D, 1);
    b.run(Dir::R, 1);
    b.run(Dir::D, t + 1, u.west);
    b.run(Dir::R, 2);
    b.run(Dir::D, 2);
    b.run(Dir::R, t + 1, u.south);
  }
  b.run(Dir::U, 1);
  b.run(Dir::R, 1);
  for (auto it = units.rbegin(); it != units.rend(); ++it) {
    b.run(Dir::U, t + 1, it->east);
    b.run(Dir::L, 2);
    b.run(Dir::U, 2);
    b.run(Dir::L, t + 1, it->north);
    b.run(Dir::U, 1);
    b.run(Dir::L, 1);
  }
  b.run(Dir::L, 1);
  return b;
}

UnitKinds encoded_unit(const WangTile& tile, int t) {
  UnitKinds u;
  u.west = {FeatureKind::TBump};
  auto w = dent_sequence(encode_color(tile.west, t), Side::West);
  u.west.insert(u.west.end(), w.begin(), w.end());
  u.south = dent_sequence(encode_color(tile.south, t), Side::South);
  u.south.push_back(FeatureKind::TBump);
  // east and north runs travel against reading order
  u.east = {FeatureKind::TBump};
  append_reversed(u.east, dent_sequence(encode_color(tile.east, t), Side::East));
  append_reversed(u.north, dent_sequence(encode_color(tile.north, t), Side::North));
  u.north.push_back(FeatureKind::TBump);
  return u;
}

UnitKinds plug_unit(int t) {
  UnitKinds u;
  Kinds plugs(static_cast<std::size_t>(t), FeatureKind::DeeperBump);
  u.west = {FeatureKind::TBump};
  u.west.insert(u.west.end(), plugs.begin(), plugs.end());
  u.south = plugs;
  u.south.push_back(FeatureKind::TBump);
  u.east = u.west;
  u.north = u.south;
  return u;
}

Tile make_tile(Role role, const BlockPath& path) {
  Tile tile;
  tile.role = role;
  tile.word = substitute(path.base_word(), path.plan());
  Polyomino raw = word_to_polyomino(tile.word);
  auto b = raw.bounds();
  tile.start = {-b[0], -b[1]};
  tile.cells = translate(raw, -b[0], -b[1]);
  tile.cells.role = role;
  auto v = path.vertices();
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (!path.kinds[i]) continue;
    Vertex from{v[i].x * kBlock + tile.start.x, v[i].y * kBlock + tile.start.y};
    Vertex to{v[i + 1].x * kBlock + tile.start.x, v[i + 1].y * kBlock + tile.start.y};
    tile.features.push_back({*path.kinds[i], side_of(path.steps[i]), from, to});
  }
  return tile;
}

using SegKey = std::tuple<long, long, long, long>;

SegKey seg_key(Vertex a, Vertex b) {
  if (std::tie(b.x, b.y) < std::tie(a.x, a.y)) std::swap(a, b);
  return {a.x, a.y, b.x, b.y};
}

BlockPath jaw_outline(int n, int t) {
  const int E = 2 * (n - 1) * (t + 4) + 3;
  BlockPath b;
  b.run(Dir::R, E);
  b.run(Dir::U, 1);
  b.run(Dir::L, 1);
  for (int i = 0; i < n - 1; ++i) {
    b.run(Dir::U, 1);
    b.run(Dir::L, t + 1);
    b.run(Dir::U, 2);
    b.run(Dir::L, 2);
    b.run(Dir::U, t + 1);
    b.run(Dir::L, 1);
  }
  b.run(Dir::U, 2);
  b.run(Dir::R, 2);
  for (int i = 0; i < n - 1; ++i) {
    b.run(Dir::D, 1);
    b.run(Dir::R, t + 1);
    b.run(Dir::D, 2);
    b.run(Dir::R, 2);
    b.run(Dir::D, t + 1);
    b.run(Dir::R, 1);
  }
  b.run(Dir::D, 1);
  b.run(Dir::R, 1);
  b.run(Dir::U, E);
  b.run(Dir::L, E);
  b.run(Dir::D, 1);
  for (int i = 0; i < n - 1; ++i) {
    b.run(Dir::R, 1);
    b.run(Dir::D, 1);
    b.run(Dir::R, t + 1);
    b.run(Dir::D, 2);
    b.run(Dir::R, 2);
    b.run(Dir::D, t + 1);
  }
  b.run(Dir::L, 1);
  b.run(Dir::D, 1);
  for (int i = 0; i < n - 1; ++i) {
    b.run(Dir::L, t + 1);
    b.run(Dir::U, 2);
    b.run(Dir::L, 2);
    b.run(Dir::U, t + 1);
    b.run(Dir::L, 1);
    b.run(Dir::U, 1);
  }
  b.run(Dir::L, 1);
  b.run(Dir::D, E);
  return b;
}

const std::vector<Vertex> kTooth1 = {
    {0, 0},  {2, 0},  {2, -1}, {1, -1}, {1, -2}, {4, -2}, {4, -1}, {3, -1}, {3, 0},
    {5, 0},  {5, 2},  {6, 2},  {6, 1},  {7, 1},  {7, 4},  {6, 4},  {6, 3},  {5, 3},
    {5, 5},  {3, 5},  {3, 6},  {4, 6},  {4, 7},  {1, 7},  {1, 6},  {2, 6},  {2, 5},
    {0, 5},  {0, 3},  {-1, 3}, {-1, 4}, {-2, 4}, {-2, 1}, {-1, 1}, {-1, 2}, {0, 2}};
const std::vector<Vertex> kTooth2 = {
    {0, -1}, {2, -1}, {2, -2}, {1, -2}, {1, -3}, {4, -3}, {4, -2}, {3, -2}, {3, -1},
    {5, -1}, {5, 1},  {6, 1},  {6, 0},  {7, 0},  {7, 4},  {6, 4},  {6, 3},  {5, 3},
    {5, 5},  {3, 5},  {3, 6},  {4, 6},  {4, 7},  {1, 7},  {1, 6},  {2, 6},  {2, 5},
    {0, 5},  {0, 3},  {-1, 3}, {-1, 4}, {-2, 4}, {-2, 0}, {-1, 0}, {-1, 1}, {0, 1}};
const std::vector<Vertex> kTooth3 = {
    {22, 0}, {24, 0}, {24, -1}, {23, -1}, {23, -2}, {27, -2}, {27, -1}, {26, -1}, {26, 0},
    {28, 0}, {28, 2}, {29, 2},  {29, 1},  {30, 1},  {30, 4},  {29, 4},  {29, 3},  {28, 3},
    {28, 5}, {26, 5}, {26, 6},  {27, 6},  {27, 7},  {23, 7},  {23, 6},  {24, 6},  {24, 5},
    {22, 5}, {22, 3}, {21, 3},  {21, 4},  {20, 4},  {20, 1},  {21, 1},  {21, 2},  {22, 2}};

BoundaryWord block_word(std::initializer_list<std::pair<Dir, int>> runs) {
  BoundaryWord w;
  for (auto [d, k] : runs) w.append(d, kBlock * k);
  return normalize(w);
}

}  // namespace

ReductionParams ReductionParams::make(int n, int t) {
  if (n < 1 || t < 1) throw Error(Errc::InvalidParameter, "need n >= 1 and t >= 1");
  ReductionParams p;
  p.n = n;
  p.t = t;
  p.U = t + 4;
  p.L = 2 * (n - 1) * p.U + 1;
  p.J = p.L + 4;
  p.P = p.J + t;
  return p;
}

void BlockPath::run(Dir d, int count, const std::vector<FeatureKind>& features) {
  if (!features.empty() && static_cast<int>(features.size()) != count) {
    throw Error(Errc::InvalidParameter, "feature list does not match run length");
  }
  for (int i = 0; i < count; ++i) {
    steps.push_back(d);
    kinds.push_back(features.empty() ? std::nullopt
                                     : std::optional<FeatureKind>(features[static_cast<std::size_t>(i)]));
  }
}

BoundaryWord BlockPath::base_word() const {
  BoundaryWord w;
  for (Dir d : steps) {
    if (!w.steps.empty() && w.steps.back().dir == d) {
      w.steps.back().count += kBlock;
    } else {
      w.append(d, kBlock);
    }
  }
  return w;
}

FeaturePlan BlockPath::plan() const {
  FeaturePlan plan;
  std::size_t run = 0, block = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      if (steps[i] == steps[i - 1]) {
        ++block;
      } else {
        ++run;
        block = 0;
      }
    }
    if (kinds[i]) plan.push_back({run, block, *kinds[i], side_of(steps[i])});
  }
  return plan;
}

std::vector<Vertex> BlockPath::vertices(Vertex start) const {
  std::vector<Vertex> v{start};
  for (Dir d : steps) {
    Vertex p = v.back();
    switch (d) {
      case Dir::U: ++p.y; break;
      case Dir::D: --p.y; break;
      case Dir::L: --p.x; break;
      case Dir::R: ++p.x; break;
    }
    v.push_back(p);
  }
  return v;
}

BlockPath meat_path(const WangTileSet& set, int t) {
  std::vector<UnitKinds> units;
  for (const auto& tile : set.tiles) units.push_back(encoded_unit(tile, t));
  return staircase(units, t);
}

BlockPath filler_path(int t) { return staircase({plug_unit(t)}, t); }

BlockPath jaw_path(int n, int t) {
  // Every jaw feature is the complement of a meat feature that touches the
  // jaw for one of the n seatings in either mouth.
  const auto p = ReductionParams::make(n, t);
  BlockPath jaw = jaw_outline(n, t);
  auto jv = jaw.vertices();
  std::map<SegKey, std::size_t> edge_index;
  for (std::size_t i = 0; i < jaw.steps.size(); ++i) edge_index[seg_key(jv[i], jv[i + 1])] = i;

  WangTileSet shape;
  shape.tiles.assign(static_cast<std::size_t>(n), WangTile{});
  BlockPath meat = meat_path(shape, t);
  for (auto [cx, cy] : {std::pair<long, long>{p.J, -t}, std::pair<long, long>{-t, p.J}}) {
    for (int k = 1; k <= n; ++k) {
      auto mv = meat.vertices(meat_anchor(p, cx, cy, k));
      for (std::size_t i = 0; i < meat.steps.size(); ++i) {
        if (!meat.kinds[i]) continue;
        auto hit = edge_index.find(seg_key(mv[i], mv[i + 1]));
        if (hit == edge_index.end()) continue;
        FeatureKind want = *meat.kinds[i] == FeatureKind::TBump ? FeatureKind::TDent : FeatureKind::DeeperDent;
        auto& slot = jaw.kinds[hit->second];
        if (slot && *slot != want) {
          throw Error(Errc::OverlappingFeatures, "jaw block needs two different features");
        }
        slot = want;
      }
    }
  }
  return jaw;
}

BlockPath link_path(int n, int t) {
  const auto p = ReductionParams::make(n, t);
  BlockPath b;
  b.run(Dir::D, 1, {FeatureKind::NormalBump});
  b.run(Dir::R, p.L);
  b.run(Dir::U, 1, {FeatureKind::DeeperBump});
  b.run(Dir::L, p.L);
  return b;
}

BoundaryWord meat_base_word(int n, int t) {
  BoundaryWord w;
  auto b = [&](Dir d, int k) { w.append(d, kBlock * k); };
  b(Dir::D, 1);
  for (int i = 0; i < n; ++i) {
    b(Dir::D, 1);
    b(Dir::R, 1);
    b(Dir::D, t + 1);
    b(Dir::R, 2);
    b(Dir::D, 2);
    b(Dir::R, t + 1);
  }
  b(Dir::U, 1);
  b(Dir::R, 1);
  for (int i = 0; i < n; ++i) {
    b(Dir::U, t + 1);
    b(Dir::L, 2);
    b(Dir::U, 2);
    b(Dir::L, t + 1);
    b(Dir::U, 1);
    b(Dir::L, 1);
  }
  b(Dir::L, 1);
  return normalize(w);
}

BoundaryWord jaw_base_word(int n, int t) { return jaw_outline(n, t).base_word(); }

BoundaryWord filler_clockwise_word(int t) {
  return block_word({{Dir::R, 2}, {Dir::D, 1}, {Dir::R, t + 1}, {Dir::D, 2}, {Dir::R, 2},
                     {Dir::D, t + 1}, {Dir::L, 1}, {Dir::D, 1}, {Dir::L, t + 1}, {Dir::U, 2},
                     {Dir::L, 2}, {Dir::U, t + 1}, {Dir::L, 1}, {Dir::U, 2}});
}

BoundaryWord filler_base_word(int t) { return reverse_word(filler_clockwise_word(t)); }

BoundaryWord filler_printed_word(int t) {
  return block_word({{Dir::D, 2}, {Dir::R, 1}, {Dir::D, t + 1}, {Dir::R, 2}, {Dir::R, 2},
                     {Dir::R, t + 1}, {Dir::U, 1}, {Dir::R, 1}, {Dir::U, t + 1}, {Dir::L, 2},
                     {Dir::U, 2}, {Dir::L, t + 1}, {Dir::U, 1}, {Dir::L, 2}});
}

BoundaryWord link_base_word(int n, int t) { return link_path(n, t).base_word(); }

Tile build_meat(const WangTileSet& set) {
  if (set.n() < 2) throw Error(Errc::InvalidParameter, "the reduction needs at least two tiles");
  return make_tile(Role::Meat, meat_path(set, set.t()));
}

Tile build_jaw(int n, int t) {
  if (n < 2) throw Error(Errc::InvalidParameter, "the jaw needs n >= 2");
  return make_tile(Role::Jaw, jaw_path(n, t));
}

Tile build_filler(int t) {
  auto path = filler_path(t);
  if (!(path.base_word() == filler_base_word(t))) {
    throw Error(Errc::InvalidParameter, "filler outline disagrees with its reconstruction");
  }
  return make_tile(Role::Filler, path);
}

const std::vector<Vertex>& tooth_outline(int which) {
  switch (which) {
    case 1: return kTooth1;
    case 2: return kTooth2;
    case 3: return kTooth3;
    default: throw Error(Errc::InvalidParameter, "teeth are numbered 1 to 3");
  }
}

std::array<Tile, 3> teeth() {
  std::array<Tile, 3> out;
  const Role roles[3] = {Role::Tooth1, Role::Tooth2, Role::Tooth3};
  for (int i = 0; i < 3; ++i) {
    Tile& tile = out[static_cast<std::size_t>(i)];
    tile.role = roles[i];
    tile.cells = canonicalize(fill_polygon(tooth_outline(i + 1)));
    tile.cells.role = roles[i];
    auto o = trace_boundary(tile.cells);
    tile.word = o.word;
    tile.start = o.start;
  }
  return out;
}

std::pair<Tile, Tile> build_links(int n, int t) {
  if (n < 2) throw Error(Errc::InvalidParameter, "links need n >= 2");
  Tile h = make_tile(Role::LinkH, link_path(n, t));
  Tile v;
  v.role = Role::LinkV;
  v.word = rotate_word_cw(h.word);
  // word-frame cells of the horizontal link, turned a quarter clockwise
  Polyomino turned = rotate_cells_cw(translate(h.cells, -static_cast<int>(h.start.x),
                                               -static_cast<int>(h.start.y)));
  auto b = turned.bounds();
  v.start = {-b[0], -b[1]};
  v.cells = translate(turned, -b[0], -b[1]);
  v.cells.role = Role::LinkV;
  for (const auto& f : h.features) {
    auto turn = [&](Vertex p) {
      Vertex w{p.x - h.start.x, p.y - h.start.y};
      return Vertex{w.y + v.start.x, -w.x + v.start.y};
    };
    v.features.push_back({f.kind, static_cast<Side>((static_cast<int>(f.side) + 1) % 4), turn(f.from), turn(f.to)});
  }
  return {h, v};
}

Vertex meat_anchor(const ReductionParams& p, long cx, long cy, int k) {
  return {cx - 3 - static_cast<long>(p.U) * (k - 1), cy + p.t + 3 + static_cast<long>(p.U) * (k - 1)};
}

PolyominoSet8 reduce(const WangTileSet& set) {
  if (set.n() < 2) throw Error(Errc::InvalidParameter, "the reduction needs at least two tiles");
  const int t = set.t();
  PolyominoSet8 out;
  out.params = ReductionParams::make(set.n(), t);
  out.meat = build_meat(set);
  out.jaw = build_jaw(set.n(), t);
  out.filler = build_filler(t);
  auto th = teeth();
  out.tooth1 = th[0];
  out.tooth2 = th[1];
  out.tooth3 = th[2];
  std::tie(out.link_h, out.link_v) = build_links(set.n(), t);
  return out;
}

const Tile& PolyominoSet8::get(Role r) const {
  switch (r) {
    case Role::Meat: return meat;
    case Role::Jaw: return jaw;
    case Role::Filler: return filler;
    case Role::Tooth1: return tooth1;
    case Role::Tooth2: return tooth2;
    case Role::Tooth3: return tooth3;
    case Role::LinkH: return link_h;
    case Role::LinkV: return link_v;
  }
  throw Error(Errc::UnknownRole, "bad role");
}

std::array<const Tile*, 8> PolyominoSet8::all() const {
  return {&meat, &jaw, &filler, &tooth1, &tooth2, &tooth3, &link_h, &link_v};
}

TileMap PolyominoSet8::tile_map() const {
  TileMap m;
  for (const Tile* t : all()) m[t->role] = t->cells;
  return m;
}

std::string manifest(const PolyominoSet8& s) {
  const auto& p = s.params;
  std::ostringstream os;
  os << "n: " << p.n << '\n'
     << "t: " << p.t << '\n'
     << "unit_pitch_blocks: " << p.U << '\n'
     << "link_length_blocks: " << p.L << '\n'
     << "jaw_side_blocks: " << p.J << '\n'
     << "period_blocks: " << p.P << '\n'
     << "meat_base_side_blocks: " << p.meat_side() << '\n'
     << "facing_alignment: " << kFacingAlignment << '\n'
     << "tbumps_per_unit: 4\n"
     << "meat_anchor_blocks: (cx-3-U(k-1), cy+t+3+U(k-1)) with corner (P*i+J, P*j+J)\n"
     << "link_shift_cells: horizontal -1 when the west end faces a deeper dent, vertical +1 when "
        "the south end faces a normal dent\n";
  for (const Tile* t : s.all()) {
    auto b = t->cells.bounds();
    int bumps = 0, dents = 0;
    for (const auto& f : t->features) (is_dent(f.kind) ? dents : bumps)++;
    os << "tile " << role_name(t->role) << " cells=" << t->cells.size() << " bbox=" << (b[2] - b[0])
       << 'x' << (b[3] - b[1]) << " runs=" << t->word.steps.size() << " bumps=" << bumps
       << " dents=" << dents << '\n';
  }
  return os.str();
}

}  // namespace polytile
