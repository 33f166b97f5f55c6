#pragma once

// Compiles a Wang tile set into the eight polyominoes: meat, jaw, filler,
// three teeth and two links.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polytile/engine.hpp"
#include "polytile/features.hpp"
#include "polytile/geometry.hpp"
#include "polytile/wang.hpp"

namespace polytile {

// All lengths in 9-cell blocks.
struct ReductionParams {
  int n = 0;
  int t = 0;
  int U = 0;  // pitch of one simulated tile along the staircase, t+4
  int L = 0;  // link length, 2(n-1)U+1
  int J = 0;  // jaw side, L+4
  int P = 0;  // lattice period, J+t

  static ReductionParams make(int n, int t);
  int meat_side() const { return n * U + 1; }
  int jaw_side() const { return J; }
};

// Block-level outline: one entry per 9-cell step, optionally carrying a feature.
struct BlockPath {
  std::vector<Dir> steps;
  std::vector<std::optional<FeatureKind>> kinds;

  void run(Dir d, int count, const std::vector<FeatureKind>& features = {});
  BoundaryWord base_word() const;
  FeaturePlan plan() const;
  // block-coordinate vertices, steps.size()+1 of them
  std::vector<Vertex> vertices(Vertex start = {}) const;
};

BlockPath meat_path(const WangTileSet& set, int t);
BlockPath jaw_path(int n, int t);
BlockPath filler_path(int t);
BlockPath link_path(int n, int t);

// A bump or dent as built, located by the block edge it replaced
// (cell coordinates in the tile's canonical frame, travel order).
struct FeatureInstance {
  FeatureKind kind;
  Side side;
  Vertex from;
  Vertex to;
};

struct Tile {
  Role role = Role::Meat;
  Polyomino cells;          // canonical
  BoundaryWord word;        // ccw outline
  Vertex start;             // where `word` begins, canonical frame
  std::vector<FeatureInstance> features;

  // translation that puts the word's start at (x, y)
  Cell offset_for_start(long x, long y) const {
    return {static_cast<int>(x - start.x), static_cast<int>(y - start.y)};
  }
};

struct PolyominoSet8 {
  ReductionParams params;
  Tile meat, jaw, filler, tooth1, tooth2, tooth3, link_h, link_v;

  const Tile& get(Role r) const;
  std::array<const Tile*, 8> all() const;
  TileMap tile_map() const;
};

BoundaryWord meat_base_word(int n, int t);
BoundaryWord jaw_base_word(int n, int t);
// Closed reconstruction, stored counterclockwise from the upper-left corner.
BoundaryWord filler_base_word(int t);
// The same outline as transcribed, clockwise from the upper-left corner.
BoundaryWord filler_clockwise_word(int t);
// The filler word exactly as printed; it does not close.
BoundaryWord filler_printed_word(int t);
BoundaryWord link_base_word(int n, int t);

Tile build_meat(const WangTileSet& set);
Tile build_jaw(int n, int t);
Tile build_filler(int t);
// Fixed shapes, independent of the input set.
std::array<Tile, 3> teeth();
std::pair<Tile, Tile> build_links(int n, int t);

// Throws InvalidParameter for n < 2 and ColorOverflow if a color id needs more than t bits.
PolyominoSet8 reduce(const WangTileSet& set);

// Offset of a meat's word start against the corner square of the jaw
// mouth it sits in, for exposed unit k (1-based), in blocks.
Vertex meat_anchor(const ReductionParams& p, long cx, long cy, int k);

std::string manifest(const PolyominoSet8& tiles);

// The transcribed tooth outlines (unit-cell vertices).
const std::vector<Vertex>& tooth_outline(int which);

}  // namespace polytile
