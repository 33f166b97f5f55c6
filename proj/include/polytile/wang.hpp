#pragma once

// Wang tiles, the .wang/.wtil text formats and the periodic torus search.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polytile {

struct WangTile {
  std::string name;
  int north = 0;
  int east = 0;
  int south = 0;
  int west = 0;
  bool operator==(const WangTile&) const = default;
};

struct WangTileSet {
  std::vector<std::string> palette;  // index = color id
  std::vector<WangTile> tiles;

  int n() const { return static_cast<int>(tiles.size()); }
  // distinct colors actually used on tile edges
  int m() const;
  // bits per edge, at least 1
  int t() const;
  std::optional<int> tile_index(std::string_view name) const;
  std::optional<int> color_id(std::string_view name) const;
  bool operator==(const WangTileSet&) const = default;
};

// grid[y][x], y = 0 is the southmost row
struct WangTorusTiling {
  int p = 0;
  int q = 0;
  std::vector<std::vector<int>> grid;
  int at(int x, int y) const { return grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }
  bool operator==(const WangTorusTiling&) const = default;
};

int bits_for_colors(int m);

WangTileSet parse_wang(std::string_view text);
std::string format_wang(const WangTileSet& set);

WangTorusTiling parse_wtil(std::string_view text, const WangTileSet& set);
std::string format_wtil(const WangTorusTiling& tiling, const WangTileSet& set);

// Throws IndexOutOfRange for tile indices outside the set or a ragged grid.
bool check_torus(const WangTileSet& set, const WangTorusTiling& tiling);

// Periods scanned by increasing p+q, then p; cells filled row-major with
// tiles in input order. First solution wins.
std::optional<WangTorusTiling> solve_torus(const WangTileSet& set, int max_period);

}  // namespace polytile
