#pragma once

// Bumps and dents substituted for 9-cell blocks of a base boundary word.

#include <cstddef>
#include <vector>

#include "polytile/geometry.hpp"

namespace polytile {

inline constexpr int kBlock = 9;

enum class FeatureKind { TBump, TDent, NormalDent, DeeperDent, NormalBump, DeeperBump };
enum class Side { North, East, South, West };
enum class Axis { Vertical, Horizontal };

std::string_view feature_name(FeatureKind k);
std::string_view side_name(Side s);
Side opposite(Side s);
// Side of a ccw outline that a step in this direction runs along.
Side side_of(Dir d);
bool is_dent(FeatureKind k);

BoundaryWord tbump_word(Side side);
// kind is NormalDent or DeeperDent
BoundaryWord dent_word(FeatureKind kind, Side side);
// Any kind. TDent and the two bumps are the reversed complements of the
// matching feature on the opposite side.
BoundaryWord feature_word(FeatureKind kind, Side side);

// Where a feature word begins relative to the lower-left corner of the
// 9-cell block edge it replaces.
Vertex feature_start(Side side);

// Cells between the feature path and its host edge, in the block frame of
// feature_start: removed cells for dents, added cells for bumps.
Polyomino feature_cells(FeatureKind kind, Side side);

// Depth of a dent or height of a bump, measured perpendicular to the edge.
int feature_depth(FeatureKind kind);

struct FeatureSite {
  std::size_t run;    // index into BoundaryWord::steps
  std::size_t block;  // 9-cell block within that run, in travel order
  FeatureKind kind;
  Side side;
};
using FeaturePlan = std::vector<FeatureSite>;

// Replaces each targeted block by its feature word; returns the normalized
// result. Throws BlockNotOnSide, OverlappingFeatures, ResultSelfIntersects.
BoundaryWord substitute(const BoundaryWord& base, const FeaturePlan& plan);

using Bits = std::vector<int>;

// Big-endian, t bits. Throws ColorOverflow.
Bits encode_color(int color_id, int t);
int decode_bits(const Bits& bits);

// Per-bit dent kinds in reading order (west to east, north to south).
std::vector<FeatureKind> dent_sequence(const Bits& bits, Side side);
Bits decode_dent_sequence(const std::vector<FeatureKind>& kinds, Side side);
FeatureKind dent_for_bit(int bit, Side side);

// Lateral shift between facing dents that reproduces the teeth.
inline constexpr int kFacingAlignment = 0;

// Union of two facing cavities across a shared edge, canonicalized.
// Vertical: a on a north side below the edge, b on a south side above it.
// Horizontal: a on an east side, b on a west side.
// Throws CavitiesDisjoint when the union is not one piece.
Polyomino facing_hole(FeatureKind a, FeatureKind b, Axis axis,
                      int lateral_offset = kFacingAlignment);

}  // namespace polytile
