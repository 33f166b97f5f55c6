#pragma once

// SVG output. One path per placed piece, 1 unit = 1 cell, north up.

#include <optional>
#include <string>
#include <vector>

#include "polytile/engine.hpp"

namespace polytile {

const char* role_color(std::optional<Role> r);

std::string render_svg(const TileMap& tiles, const PatternTiling& tiling);
// Pieces side by side along the x axis, 4 cells apart.
std::string render_pieces_svg(const std::vector<Polyomino>& pieces);

}  // namespace polytile
