#pragma once

// Translational tiling over rectangles and tori: a coverage-count verifier
// and an exact-cover backtracking solver.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polytile/geometry.hpp"

namespace polytile {

using TileMap = std::map<Role, Polyomino>;

enum class RegionKind { Rectangle, Torus };

struct Region {
  RegionKind kind = RegionKind::Rectangle;
  int width = 0;
  int height = 0;
  long long area() const { return static_cast<long long>(width) * height; }
  bool operator==(const Region&) const = default;
};

struct Placement {
  Role role;
  int dx = 0;
  int dy = 0;
  bool operator==(const Placement&) const = default;
};

struct PatternTiling {
  Region region;
  std::vector<Placement> placements;
  bool operator==(const PatternTiling&) const = default;
};

struct Violation {
  Cell cell;
  int coverage;  // 0 = gap, >1 = overlap, -1 = placed outside the rectangle
};

// First offending cell in row-major order (outside cells take precedence).
// Throws UnknownRole. Counting is parallel over placements.
std::optional<Violation> find_violation(const TileMap& tiles, const PatternTiling& tiling);
std::optional<Violation> find_violation_serial(const TileMap& tiles, const PatternTiling& tiling);

bool verify_tiling(const TileMap& tiles, const PatternTiling& tiling);
bool verify_tiling_serial(const TileMap& tiles, const PatternTiling& tiling);

// Branches on the first uncovered cell in row-major order (or `anchor`
// first, when given) over every tile translation covering it.
std::optional<PatternTiling> solve_region(const TileMap& tiles, Region region,
                                          std::optional<Cell> anchor = std::nullopt);

enum class SearchStatus { Found, Exhausted, LimitReached };

struct CoverResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Placement> placements;
  std::uint64_t nodes = 0;
};

// Exact cover of a finite cell set in the plane by translates of `tiles`.
// max_nodes = 0 means no limit.
CoverResult cover_cells(const TileMap& tiles, const std::vector<Cell>& cells,
                        std::uint64_t max_nodes = 0);

std::string format_plc(const PatternTiling& tiling);
PatternTiling parse_plc(std::string_view text);

}  // namespace polytile
