#pragma once

// Wang torus tiling -> polyomino torus tiling, the way back, and bounded
// local checks the construction relies on.

#include <cstdint>
#include <map>
#include <vector>

#include "polytile/engine.hpp"
#include "polytile/reduction.hpp"
#include "polytile/wang.hpp"

namespace polytile {

struct AssemblyReport {
  PatternTiling tiling;
  std::map<Role, int> counts;
  int residual_components = 0;
  long long residual_cells = 0;
};

// Throws WangTilingInvalid, ResidualHoleUnmatched.
AssemblyReport assemble_pattern(const PolyominoSet8& tiles, const WangTileSet& set,
                                const WangTorusTiling& w);
PatternTiling assemble_pattern(const WangTileSet& set, const WangTorusTiling& w);

// Throws MalformedPattern.
WangTorusTiling extract_wang(const PolyominoSet8& tiles, const WangTileSet& set,
                             const PatternTiling& tiling);
WangTorusTiling extract_wang(const WangTileSet& set, const PatternTiling& tiling);

enum class Mouth { SouthEast, NorthWest };

struct MeatSeat {
  Mouth mouth;
  // meat word start relative to the jaw word start, in cells
  long dx;
  long dy;
  bool operator==(const MeatSeat&) const = default;
};

// Every translation of the meat against one jaw that overlaps nothing and
// seats each T-bump touching the jaw in a T-dent, either mouth. Sorted.
std::vector<MeatSeat> enumerate_mouth_seats(const PolyominoSet8& tiles);
std::vector<MeatSeat> enumerate_mouth_seats(const WangTileSet& set);

// Seats in a jaw's south-east mouth that the jaw diagonally below-right
// accepts in its north-west mouth at the same time: the ways a meat can be
// embraced by a jaw pair. Offsets are relative to the north-west jaw.
std::vector<MeatSeat> enumerate_meat_jaw_offsets(const PolyominoSet8& tiles);
std::vector<MeatSeat> enumerate_meat_jaw_offsets(const WangTileSet& set);

enum class Verdict { True, False, Inconclusive };
const char* verdict_name(Verdict v);

struct DeadEndReport {
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t nodes = 0;
  int max_depth = 0;
  Cell flank;  // pocket cell beside the seed tooth, in the tooth's canonical frame
};

// Seeds tooth1 at the origin and searches every way of covering its east
// pocket using only teeth, links and the filler, restricted to cells within
// `radius` (Chebyshev) of that pocket. True: every branch strands a cell.
// False: the whole window can be covered. Inconclusive: radius < 10 or the
// node budget ran out.
// The search behind dead_end_check, for any pieces: `seed` is fixed, then
// every way of covering `focus` (a free cell beside it) and onwards is tried
// until each branch strands a cell or the window of `radius` is covered.
DeadEndReport refute_window(const std::vector<Polyomino>& pieces, const Polyomino& seed, Cell focus,
                            int radius, std::uint64_t max_nodes);

DeadEndReport dead_end_check(const PolyominoSet8& tiles, int radius,
                             std::uint64_t max_nodes = 2'000'000);
DeadEndReport dead_end_check(const WangTileSet& set, int radius,
                             std::uint64_t max_nodes = 2'000'000);

// Two hosts face each other across a channel of link length, carrying the
// dents that encode color_a (west or south host) and color_b (east or north
// host). True iff per dent row a link at some shift plus teeth fills the
// channel exactly.
bool link_color_gate(const PolyominoSet8& tiles, int color_a, int color_b, Axis axis);
bool link_color_gate(const WangTileSet& set, int color_a, int color_b, Axis axis);

}  // namespace polytile
