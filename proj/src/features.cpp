#include "polytile/features.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "polytile/error.hpp"

namespace polytile {

namespace {

const BoundaryWord& north_word(FeatureKind k) {
  static const BoundaryWord tbump = BoundaryWord::parse("l4 u1 r1 u1 l1 u1 l1 d3 l4");
  static const BoundaryWord normal =
      BoundaryWord::parse("d1 l1 u1 l1 d2 l2 d1 r1 d1 l3 u1 r1 u1 l2 u2 l1 d1 l1 u1");
  static const BoundaryWord deeper =
      BoundaryWord::parse("d2 l1 u1 l1 d2 l2 d1 r1 d1 l3 u1 r1 u1 l2 u2 l1 d1 l1 u2");
  switch (k) {
    case FeatureKind::TBump: return tbump;
    case FeatureKind::NormalDent: return normal;
    case FeatureKind::DeeperDent: return deeper;
    default: throw Error(Errc::InvalidParameter, "no north word for this kind");
  }
}

int quarter_turns(Side s) { return static_cast<int>(s); }

bool edge_connected(const Polyomino& p) {
  if (p.cells.empty()) return false;
  std::set<Cell> left(p.cells.begin(), p.cells.end());
  std::queue<Cell> q;
  q.push(p.cells.front());
  left.erase(p.cells.front());
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      if (left.erase(n)) q.push(n);
    }
  }
  return left.empty();
}

}  // namespace

std::string_view feature_name(FeatureKind k) {
  switch (k) {
    case FeatureKind::TBump: return "t-bump";
    case FeatureKind::TDent: return "t-dent";
    case FeatureKind::NormalDent: return "normal-dent";
    case FeatureKind::DeeperDent: return "deeper-dent";
    case FeatureKind::NormalBump: return "normal-bump";
    case FeatureKind::DeeperBump: return "deeper-bump";
  }
  return "?";
}

std::string_view side_name(Side s) {
  switch (s) {
    case Side::North: return "north";
    case Side::East: return "east";
    case Side::South: return "south";
    case Side::West: return "west";
  }
  return "?";
}

Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

Side side_of(Dir d) {
  switch (d) {
    case Dir::L: return Side::North;
    case Dir::U: return Side::East;
    case Dir::R: return Side::South;
    case Dir::D: return Side::West;
  }
  return Side::North;
}

bool is_dent(FeatureKind k) {
  return k == FeatureKind::TDent || k == FeatureKind::NormalDent || k == FeatureKind::DeeperDent;
}

BoundaryWord tbump_word(Side side) { return feature_word(FeatureKind::TBump, side); }

BoundaryWord dent_word(FeatureKind kind, Side side) {
  if (kind != FeatureKind::NormalDent && kind != FeatureKind::DeeperDent) {
    throw Error(Errc::InvalidParameter, "dent_word takes a color dent kind");
  }
  return feature_word(kind, side);
}

BoundaryWord feature_word(FeatureKind kind, Side side) {
  switch (kind) {
    case FeatureKind::TDent:
      return reverse_word(feature_word(FeatureKind::TBump, opposite(side)));
    case FeatureKind::NormalBump:
      return reverse_word(feature_word(FeatureKind::NormalDent, opposite(side)));
    case FeatureKind::DeeperBump:
      return reverse_word(feature_word(FeatureKind::DeeperDent, opposite(side)));
    default: break;
  }
  BoundaryWord w = north_word(kind);
  for (int i = 0; i < quarter_turns(side); ++i) w = rotate_word_cw(w);
  return w;
}

Vertex feature_start(Side side) {
  switch (side) {
    case Side::North: return {kBlock, 0};
    case Side::East: return {0, 0};
    case Side::South: return {0, 0};
    case Side::West: return {0, kBlock};
  }
  return {};
}

Polyomino feature_cells(FeatureKind kind, Side side) {
  auto v = word_vertices(feature_word(kind, side), feature_start(side));
  return fill_polygon(std::move(v));
}

int feature_depth(FeatureKind kind) {
  auto b = feature_cells(kind, Side::North).bounds();
  return b[3] - b[1];
}

BoundaryWord substitute(const BoundaryWord& base, const FeaturePlan& plan) {
  std::map<std::pair<std::size_t, std::size_t>, const FeatureSite*> by_block;
  for (const auto& site : plan) {
    if (site.run >= base.steps.size()) {
      throw Error(Errc::BlockNotOnSide, "run " + std::to_string(site.run) + " does not exist");
    }
    const Step& run = base.steps[site.run];
    if (run.count % kBlock != 0 || site.block >= static_cast<std::size_t>(run.count / kBlock)) {
      throw Error(Errc::BlockNotOnSide, "run " + std::to_string(site.run) + " has no block " +
                                            std::to_string(site.block));
    }
    if (side_of(run.dir) != site.side) {
      throw Error(Errc::BlockNotOnSide,
                  std::string(feature_name(site.kind)) + " for the " +
                      std::string(side_name(site.side)) + " side placed on a " +
                      std::string(side_name(side_of(run.dir))) + " run");
    }
    if (!by_block.emplace(std::pair{site.run, site.block}, &site).second) {
      throw Error(Errc::OverlappingFeatures, "run " + std::to_string(site.run) + " block " +
                                                 std::to_string(site.block) + " targeted twice");
    }
  }
  if (plan.empty()) return base;
  BoundaryWord out;
  for (std::size_t r = 0; r < base.steps.size(); ++r) {
    const Step& run = base.steps[r];
    auto it = by_block.lower_bound({r, 0});
    if (it == by_block.end() || it->first.first != r) {
      out.append(run.dir, run.count);
      continue;
    }
    for (int b = 0; b < run.count / kBlock; ++b) {
      auto f = by_block.find({r, static_cast<std::size_t>(b)});
      if (f == by_block.end()) {
        out.append(run.dir, kBlock);
      } else {
        out.append(feature_word(f->second->kind, f->second->side));
      }
    }
  }
  if (!is_simple(out)) throw Error(Errc::ResultSelfIntersects, "features collide");
  return normalize(out);
}

Bits encode_color(int color_id, int t) {
  if (t < 1 || t > 30) throw Error(Errc::InvalidParameter, "bit width out of range");
  if (color_id < 0 || color_id >= (1 << t)) {
    throw Error(Errc::ColorOverflow,
                "color " + std::to_string(color_id) + " needs more than " + std::to_string(t) + " bits");
  }
  Bits bits(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) bits[static_cast<std::size_t>(i)] = (color_id >> (t - 1 - i)) & 1;
  return bits;
}

int decode_bits(const Bits& bits) {
  int v = 0;
  for (int b : bits) v = (v << 1) | (b & 1);
  return v;
}

FeatureKind dent_for_bit(int bit, Side side) {
  // a normal dent reads 0 on north/west and 1 on south/east
  int normal_bit = (side == Side::North || side == Side::West) ? 0 : 1;
  return (bit != 0 ? 1 : 0) == normal_bit ? FeatureKind::NormalDent : FeatureKind::DeeperDent;
}

std::vector<FeatureKind> dent_sequence(const Bits& bits, Side side) {
  std::vector<FeatureKind> kinds;
  kinds.reserve(bits.size());
  for (int b : bits) kinds.push_back(dent_for_bit(b, side));
  return kinds;
}

Bits decode_dent_sequence(const std::vector<FeatureKind>& kinds, Side side) {
  Bits bits;
  bits.reserve(kinds.size());
  for (auto k : kinds) {
    if (k != FeatureKind::NormalDent && k != FeatureKind::DeeperDent) {
      throw Error(Errc::InvalidParameter, "not a color dent");
    }
    bits.push_back(dent_for_bit(0, side) == k ? 0 : 1);
  }
  return bits;
}

Polyomino facing_hole(FeatureKind a, FeatureKind b, Axis axis, int lateral_offset) {
  auto check = [](FeatureKind k) {
    if (k != FeatureKind::NormalDent && k != FeatureKind::DeeperDent) {
      throw Error(Errc::InvalidParameter, "facing_hole takes color dents");
    }
  };
  check(a);
  check(b);
  Polyomino lower, upper;
  if (axis == Axis::Vertical) {
    lower = feature_cells(a, Side::North);
    upper = translate(feature_cells(b, Side::South), lateral_offset, 0);
  } else {
    lower = feature_cells(a, Side::East);
    upper = translate(feature_cells(b, Side::West), 0, lateral_offset);
  }
  std::vector<Cell> cells = lower.cells;
  cells.insert(cells.end(), upper.cells.begin(), upper.cells.end());
  Polyomino hole(std::move(cells));
  if (!edge_connected(hole)) {
    throw Error(Errc::CavitiesDisjoint,
                "cavities do not meet at lateral offset " + std::to_string(lateral_offset));
  }
  return canonicalize(hole);
}

}  // namespace polytile
