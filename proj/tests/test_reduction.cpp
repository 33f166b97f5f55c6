#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "polytile/error.hpp"
#include "polytile/reduction.hpp"

using namespace polytile;

namespace {

const char* kThree =
    "colors: red green blue yellow\n"
    "tile tile1 N=red E=yellow S=red W=green\n"
    "tile tile2 N=blue E=red S=blue W=yellow\n"
    "tile tile3 N=yellow E=green S=yellow W=red\n";

// same n and m as the three-tile set, other colors
const char* kOther =
    "colors: red green blue yellow\n"
    "tile a N=green E=green S=blue W=yellow\n"
    "tile b N=red E=blue S=yellow W=red\n"
    "tile c N=blue E=yellow S=red W=green\n";

const PolyominoSet8& three() {
  static const PolyominoSet8 s = reduce(parse_wang(kThree));
  return s;
}

std::pair<long, long> bbox_of(const BoundaryWord& w) { return oracle::bbox(w.to_string()); }

std::set<Cell> as_set(const Polyomino& p) { return {p.cells.begin(), p.cells.end()}; }

}  // namespace

TEST(Params, Formulas) {
  auto p = ReductionParams::make(3, 2);
  EXPECT_EQ(p.U, 6);
  EXPECT_EQ(p.L, 25);
  EXPECT_EQ(p.J, 29);
  EXPECT_EQ(p.P, 31);
  EXPECT_EQ(p.meat_side(), 19);
  EXPECT_THROW(ReductionParams::make(2, 0), Error);
}

TEST(BaseWords, SuiteCloseSimpleAndSized) {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 1; t <= 3; ++t) {
      const long U = t + 4, L = 2 * (n - 1) * U + 1;
      auto meat = meat_base_word(n, t), jaw = jaw_base_word(n, t), link = link_base_word(n, t);
      auto fil = filler_base_word(t);
      for (const auto* w : {&meat, &jaw, &link, &fil}) {
        auto s = w->to_string();
        EXPECT_EQ(oracle::closure(s), std::make_pair(0L, 0L)) << n << ' ' << t;
        EXPECT_TRUE(oracle::simple(s)) << n << ' ' << t;
        EXPECT_TRUE(is_simple(*w));
        EXPECT_EQ(shoelace_area(*w), static_cast<long long>(oracle::flood_cells(s).size()));
      }
      EXPECT_EQ(bbox_of(meat), std::make_pair(9 * (n * U + 1), 9 * (n * U + 1)));
      EXPECT_EQ(bbox_of(jaw), std::make_pair(9 * (L + 4), 9 * (L + 4)));
      EXPECT_EQ(bbox_of(link), std::make_pair(9 * L, 9L));
      EXPECT_EQ(9 * L, 18 * (n - 1) * U + 9);
    }
  }
}

TEST(BaseWords, SmallCases) {
  EXPECT_EQ(bbox_of(meat_base_word(1, 1)), std::make_pair(54L, 54L));
  EXPECT_EQ(oracle::closure(meat_base_word(1, 1).to_string()), std::make_pair(0L, 0L));
  EXPECT_EQ(bbox_of(link_base_word(2, 1)), std::make_pair(99L, 9L));
  EXPECT_EQ(bbox_of(meat_base_word(3, 2)), std::make_pair(171L, 171L));
  EXPECT_EQ(bbox_of(jaw_base_word(3, 2)), std::make_pair(261L, 261L));
}

TEST(BaseWords, MeatStartsGoingDown) {
  // "starting from the upper left corner", d9 first, l9 last
  auto w = meat_base_word(3, 2);
  EXPECT_EQ(w.steps.front().dir, Dir::D);
  EXPECT_EQ(w.steps.back().dir, Dir::L);
}

TEST(Filler, PrintedWordDefect) {
  EXPECT_EQ(oracle::closure(filler_printed_word(2).to_string()), std::make_pair(18L, 18L));
  EXPECT_NE(oracle::closure(filler_printed_word(1).to_string()), std::make_pair(0L, 0L));
}

TEST(Filler, ReconstructionMatchesBlockOutline) {
  // clockwise from the upper-left corner, in blocks
  std::vector<std::pair<long, long>> outline = {{0, 7}, {2, 7}, {2, 6}, {5, 6}, {5, 4}, {7, 4}, {7, 1},
                                            {6, 1}, {6, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 5}, {0, 5}};
  auto w = filler_base_word(2);
  ASSERT_EQ(oracle::closure(w.to_string()), std::make_pair(0L, 0L));
  auto corners = oracle::corner_cycle(oracle::walk(w.to_string()), true);
  long minx = corners[0].first, miny = corners[0].second;
  for (auto [x, y] : corners) {
    minx = std::min(minx, x);
    miny = std::min(miny, y);
  }
  for (auto& [x, y] : corners) {
    ASSERT_EQ((x - minx) % 9, 0);
    ASSERT_EQ((y - miny) % 9, 0);
    x = (x - minx) / 9;
    y = (y - miny) / 9;
  }
  corners = oracle::corner_cycle(corners, true);
  EXPECT_EQ(corners, oracle::corner_cycle(outline, false));
  // and the counterclockwise storage is the clockwise transcription reversed
  EXPECT_EQ(reverse_word(filler_clockwise_word(2)), w);
  EXPECT_GT(shoelace_area(w), 0);
  EXPECT_EQ(oracle::closure(filler_base_word(1).to_string()), std::make_pair(0L, 0L));
}

TEST(Teeth, TranscribedOutlines) {
  auto t = teeth();
  const std::size_t areas[] = {41, 50, 50};
  for (int i = 0; i < 3; ++i) {
    const auto& v = tooth_outline(i + 1);
    std::vector<std::pair<long, long>> c;
    for (auto p : v) c.push_back({p.x, p.y});
    auto flood = oracle::shift_to_origin(oracle::flood_cells(oracle::corners_to_word(c), c[0].first, c[0].second));
    EXPECT_EQ(flood.size(), areas[i]);
    EXPECT_EQ(t[static_cast<std::size_t>(i)].cells.cells, flood);
    EXPECT_EQ(v.size(), 36u);
  }
}

TEST(Teeth, SameForEveryInput) {
  auto a = reduce(parse_wang(kThree));
  auto b = reduce(parse_wang("colors: x y\ntile p N=x E=x S=x W=x\ntile q N=y E=y S=y W=y\n"));
  EXPECT_EQ(a.tooth1.cells, b.tooth1.cells);
  EXPECT_EQ(a.tooth2.cells, b.tooth2.cells);
  EXPECT_EQ(a.tooth3.cells, b.tooth3.cells);
}

TEST(Meat, ThreeCounts) {
  const auto& m = three().meat;
  int dents = 0, bumps = 0;
  for (const auto& f : m.features) {
    if (f.kind == FeatureKind::NormalDent || f.kind == FeatureKind::DeeperDent) ++dents;
    if (f.kind == FeatureKind::TBump) ++bumps;
  }
  EXPECT_EQ(dents, 4 * 2 * 3);
  EXPECT_EQ(bumps, 3 * 4);
  EXPECT_EQ(static_cast<long long>(m.cells.size()), shoelace_area(m.word));
  EXPECT_EQ(word_to_polyomino(m.word, m.start), m.cells);
}

TEST(Meat, DentsSpellTheTileColors) {
  // Group the meat's color dents per side and per unit, read them in
  // reading order and decode against the input tiles.
  auto set = parse_wang(kThree);
  const auto& m = three().meat;
  std::map<Side, std::map<long, std::vector<const FeatureInstance*>>> groups;
  for (const auto& f : m.features) {
    if (f.kind != FeatureKind::NormalDent && f.kind != FeatureKind::DeeperDent) continue;
    bool horiz = f.side == Side::North || f.side == Side::South;
    long key = horiz ? f.from.y : f.from.x;
    groups[f.side][key].push_back(&f);
  }
  for (auto [side, by_line] : groups) {
    ASSERT_EQ(by_line.size(), 3u) << side_name(side);
    std::vector<std::vector<const FeatureInstance*>> units;
    for (auto& [k, v] : by_line) units.push_back(v);
    // unit 1 is the north-west one: highest line for N/S, lowest x for E/W
    if (side == Side::North || side == Side::South) std::reverse(units.begin(), units.end());
    for (std::size_t u = 0; u < 3; ++u) {
      auto v = units[u];
      std::sort(v.begin(), v.end(), [&](auto* a, auto* b) {
        if (side == Side::North || side == Side::South) return std::min(a->from.x, a->to.x) < std::min(b->from.x, b->to.x);
        return std::max(a->from.y, a->to.y) > std::max(b->from.y, b->to.y);
      });
      std::vector<FeatureKind> kinds;
      for (auto* f : v) kinds.push_back(f->kind);
      int color = decode_bits(decode_dent_sequence(kinds, side));
      const auto& tile = set.tiles[u];
      int want = side == Side::North ? tile.north : side == Side::East ? tile.east : side == Side::South ? tile.south : tile.west;
      EXPECT_EQ(color, want) << side_name(side) << " unit " << u + 1;
    }
  }
  // the example spelled out: tile1 north is red = 00 = two normal dents
  std::vector<FeatureKind> top = {};
  long top_y = -1000000;
  for (const auto& f : m.features) {
    if (f.side == Side::North && is_dent(f.kind) && f.kind != FeatureKind::TDent) top_y = std::max(top_y, f.from.y);
  }
  for (const auto& f : m.features) {
    if (f.side == Side::North && is_dent(f.kind) && f.from.y == top_y) top.push_back(f.kind);
  }
  EXPECT_EQ(top, (std::vector<FeatureKind>{FeatureKind::NormalDent, FeatureKind::NormalDent}));
}

TEST(Meat, RejectsSingleTile) {
  try {
    reduce(parse_wang("colors: a\ntile x N=a E=a S=a W=a\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidParameter);
  }
}

TEST(Jaw, OnlyDeeperAndTDents) {
  const auto& j = three().jaw;
  int td = 0, dd = 0;
  for (const auto& f : j.features) {
    EXPECT_TRUE(f.kind == FeatureKind::TDent || f.kind == FeatureKind::DeeperDent) << feature_name(f.kind);
    td += f.kind == FeatureKind::TDent;
    dd += f.kind == FeatureKind::DeeperDent;
  }
  EXPECT_GT(td, 0);
  EXPECT_GT(dd, 0);
  EXPECT_EQ(static_cast<long long>(j.cells.size()), shoelace_area(j.word));
  auto b = j.cells.bounds();
  EXPECT_EQ(b[2] - b[0], 261);
  EXPECT_EQ(b[3] - b[1], 261);
}

TEST(Filler, IndependentOfN) {
  auto f3 = reduce(parse_wang(kThree)).filler;
  auto f4 = reduce(parse_wang(
                       "colors: red green blue yellow\n"
                       "tile a N=red E=red S=red W=red\ntile b N=green E=green S=green W=green\n"
                       "tile c N=blue E=blue S=blue W=blue\ntile d N=yellow E=yellow S=yellow W=yellow\n"))
                .filler;
  EXPECT_EQ(f3.cells, f4.cells);
  EXPECT_EQ(static_cast<long long>(f3.cells.size()), shoelace_area(f3.word));
}

TEST(Links, VerticalIsRotatedHorizontal) {
  const auto& s = three();
  EXPECT_EQ(canonicalize(rotate_cells_cw(s.link_h.cells)), s.link_v.cells);
  EXPECT_NE(s.link_h.cells, s.link_v.cells);
  auto b = s.link_h.cells.bounds();
  EXPECT_EQ(b[3] - b[1], 9);
}

namespace {

// Host blocks at both ends of a horizontal link channel of L blocks, the
// west one with an east-side dent, the east one with a west-side dent.
// Returns whether the link, pulled `shift` cells east, fills both cavities
// exactly without touching either host.
bool link_plugs(const Tile& link, int L, FeatureKind west_dent, FeatureKind east_dent, int shift) {
  auto west = oracle::flood_cells("r9 " + feature_word(west_dent, Side::East).to_string() + " l9 d9");
  auto east = oracle::flood_cells("r9 u9 l9 " + feature_word(east_dent, Side::West).to_string(), 9 + 9L * L, 0);
  std::set<Cell> host(west.begin(), west.end());
  host.insert(east.begin(), east.end());
  const FeatureInstance* wb = nullptr;
  for (const auto& f : link.features) {
    if (f.side == Side::West) wb = &f;
  }
  if (!wb) return false;
  // the west bump's edge runs down x = 9 from y = 9
  auto placed = translate(link.cells, static_cast<int>(9 - wb->from.x + shift), static_cast<int>(9 - wb->from.y));
  for (const auto& c : placed.cells) {
    if (host.count(c)) return false;
  }
  std::set<Cell> mine(placed.cells.begin(), placed.cells.end());
  for (int y = 0; y < 9; ++y) {
    for (int x = 0; x < 9; ++x) {
      if (!host.count({x, y}) && !mine.count({x, y})) return false;
      Cell e{x + 9 + 9 * L, y};
      if (!host.count(e) && !mine.count(e)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Links, PlugNormalAndDeeperExactly) {
  const auto& s = three();
  int L = s.params.L;
  EXPECT_TRUE(link_plugs(s.link_h, L, FeatureKind::NormalDent, FeatureKind::DeeperDent, 0));
}

TEST(Links, CannotPlugTwoNormalDents) {
  const auto& s = three();
  int L = s.params.L;
  for (int shift = -4; shift <= 4; ++shift) {
    EXPECT_FALSE(link_plugs(s.link_h, L, FeatureKind::NormalDent, FeatureKind::NormalDent, shift)) << shift;
  }
}

TEST(Reduce, EightTilesAndFeatureOwnership) {
  const auto& s = three();
  EXPECT_EQ(s.all().size(), 8u);
  std::set<Role> roles;
  for (const Tile* t : s.all()) {
    roles.insert(t->role);
    EXPECT_EQ(static_cast<long long>(t->cells.size()), shoelace_area(t->word)) << role_name(t->role);
    EXPECT_EQ(word_to_polyomino(t->word, t->start), t->cells) << role_name(t->role);
    for (const auto& f : t->features) {
      if (f.kind == FeatureKind::TDent) EXPECT_EQ(t->role, Role::Jaw);
      if (f.kind == FeatureKind::TBump) EXPECT_TRUE(t->role == Role::Meat || t->role == Role::Filler);
    }
  }
  EXPECT_EQ(roles.size(), 8u);
}

TEST(Reduce, TBumpShapeScan) {
  // Shape-level: look for a T-bump protruding from a full 9-cell host edge,
  // on any tile, in any orientation. Teeth, links and the jaw have none.
  const auto& s = three();
  auto count_bumps = [](const Polyomino& p) {
    auto cells = as_set(p);
    int found = 0;
    const Side sides[] = {Side::North, Side::East, Side::South, Side::West};
    for (Side side : sides) {
      auto bump = feature_cells(FeatureKind::TBump, side);
      // host-side row in the block frame
      std::vector<Cell> host;
      for (int i = 0; i < 9; ++i) {
        switch (side) {
          case Side::North: host.push_back({i, -1}); break;
          case Side::South: host.push_back({i, 0}); break;
          case Side::East: host.push_back({-1, i}); break;
          case Side::West: host.push_back({0, i}); break;
        }
      }
      const Cell a = bump.cells.front();
      for (const auto& c : p.cells) {
        int dx = c.x - a.x, dy = c.y - a.y;
        bool ok = true;
        for (const auto& b : bump.cells) ok = ok && cells.count({b.x + dx, b.y + dy});
        for (const auto& h : host) ok = ok && cells.count({h.x + dx, h.y + dy});
        // outside the bump on its own side of the edge: empty
        for (int i = 0; ok && i < 9; ++i) {
          Cell o = side == Side::North ? Cell{i, 0} : side == Side::South ? Cell{i, -1}
                   : side == Side::East ? Cell{0, i} : Cell{-1, i};
          if (!bump.contains(o) && cells.count({o.x + dx, o.y + dy})) ok = false;
        }
        found += ok;
      }
    }
    return found;
  };
  EXPECT_EQ(count_bumps(s.meat.cells), 12);
  EXPECT_GT(count_bumps(s.filler.cells), 0);
  for (const Tile* t : {&s.jaw, &s.tooth1, &s.tooth2, &s.tooth3, &s.link_h, &s.link_v}) {
    EXPECT_EQ(count_bumps(t->cells), 0) << role_name(t->role);
  }
}

TEST(Reduce, OnlyTheMeatDependsOnColors) {
  auto a = reduce(parse_wang(kThree));
  auto b = reduce(parse_wang(kOther));
  EXPECT_NE(a.meat.cells, b.meat.cells);
  EXPECT_EQ(a.jaw.cells, b.jaw.cells);
  EXPECT_EQ(a.filler.cells, b.filler.cells);
  EXPECT_EQ(a.link_h.cells, b.link_h.cells);
  EXPECT_EQ(a.link_v.cells, b.link_v.cells);
}

TEST(Reduce, Deterministic) {
  auto a = reduce(parse_wang(kThree));
  EXPECT_EQ(manifest(a), manifest(three()));
  EXPECT_EQ(a.meat.word, three().meat.word);
  EXPECT_EQ(a.jaw.word, three().jaw.word);
}

TEST(Reduce, ColorOverflowWhenPaletteOutrunsUsedColors) {
  // five palette entries, two used: t = 1 but a color id is 4
  try {
    reduce(parse_wang("colors: a b c d e\ntile x N=a E=e S=a W=e\ntile y N=e E=a S=e W=a\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ColorOverflow);
  }
}

TEST(Reduce, ManifestRecordsConstants) {
  auto m = manifest(three());
  for (const char* key : {"n: 3", "t: 2", "period_blocks: 31", "link_length_blocks: 25", "tile meat cells=6846"}) {
    EXPECT_NE(m.find(key), std::string::npos) << key;
  }
}
