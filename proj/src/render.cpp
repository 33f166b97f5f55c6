#include "polytile/render.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "polytile/error.hpp"

namespace polytile {

namespace {

void path(std::ostringstream& os, const Outline& o, long dx, long dy, std::optional<Role> role) {
  os << "<path fill=\"" << role_color(role) << "\" d=\"M" << o.start.x + dx << ' ' << o.start.y + dy;
  for (const auto& s : o.word.steps) {
    switch (s.dir) {
      case Dir::R: os << 'h' << s.count; break;
      case Dir::L: os << 'h' << -s.count; break;
      case Dir::U: os << 'v' << s.count; break;
      case Dir::D: os << 'v' << -s.count; break;
    }
  }
  os << "z\"/>\n";
}

void open_doc(std::ostringstream& os, long w, long h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w
     << "\" height=\"" << h << "\">\n"
     << "<g transform=\"matrix(1 0 0 -1 0 " << h << ")\" stroke=\"#000\" stroke-width=\"0.2\">\n";
}

void close_doc(std::ostringstream& os) { os << "</g>\n</svg>\n"; }

}  // namespace

const char* role_color(std::optional<Role> r) {
  if (!r) return "#bdbdbd";
  switch (*r) {
    case Role::Jaw: return "#9e9e9e";
    case Role::Meat: return "#f28c28";
    case Role::Filler: return "#4caf50";
    case Role::LinkH:
    case Role::LinkV: return "#c9a0dc";
    case Role::Tooth1: return "#263238";
    case Role::Tooth2: return "#4e342e";
    case Role::Tooth3: return "#1a237e";
  }
  return "#bdbdbd";
}

std::string render_svg(const TileMap& tiles, const PatternTiling& tiling) {
  std::map<Role, Outline> outlines;
  for (const auto& p : tiling.placements) {
    auto it = tiles.find(p.role);
    if (it == tiles.end()) throw Error(Errc::UnknownRole, std::string(role_name(p.role)));
    if (!outlines.count(p.role)) outlines.emplace(p.role, trace_boundary(it->second));
  }
  std::ostringstream os;
  open_doc(os, tiling.region.width, tiling.region.height);
  for (const auto& p : tiling.placements) path(os, outlines.at(p.role), p.dx, p.dy, p.role);
  close_doc(os);
  return os.str();
}

std::string render_pieces_svg(const std::vector<Polyomino>& pieces) {
  long x = 0, h = 0;
  std::vector<std::pair<Outline, long>> laid;
  for (const auto& p : pieces) {
    Polyomino c = canonicalize(p);
    auto b = c.bounds();
    laid.emplace_back(trace_boundary(c), x);
    x += b[2] + 4;
    h = std::max<long>(h, b[3]);
  }
  std::ostringstream os;
  open_doc(os, std::max(0L, x - 4), h);
  for (std::size_t i = 0; i < laid.size(); ++i) path(os, laid[i].first, laid[i].second, 0, pieces[i].role);
  close_doc(os);
  return os.str();
}

}  // namespace polytile
