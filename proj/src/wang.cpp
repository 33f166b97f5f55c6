#include "polytile/wang.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polytile/error.hpp"

namespace polytile {

namespace {

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

[[noreturn]] void syntax(int lineno, const std::string& msg) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
}

bool fits(const WangTileSet& set, const WangTorusTiling& w, int x, int y, int tile) {
  // west and south neighbours are placed; the wraparound partner too once a row or column closes
  const auto& t = set.tiles[static_cast<std::size_t>(tile)];
  const auto placed = [&](int xx, int yy) -> const WangTile& {
    return set.tiles[static_cast<std::size_t>(w.at(xx, yy))];
  };
  if (x > 0 && placed(x - 1, y).east != t.west) return false;
  if (x == w.p - 1 && (w.p == 1 ? t.east != t.west : placed(0, y).west != t.east)) return false;
  if (y > 0 && placed(x, y - 1).north != t.south) return false;
  if (y == w.q - 1 && (w.q == 1 ? t.north != t.south : placed(x, 0).south != t.north)) return false;
  return true;
}

bool fill(const WangTileSet& set, WangTorusTiling& w, int cell) {
  if (cell == w.p * w.q) return true;
  int x = cell % w.p, y = cell / w.p;
  for (int k = 0; k < set.n(); ++k) {
    if (!fits(set, w, x, y, k)) continue;
    w.grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = k;
    if (fill(set, w, cell + 1)) return true;
  }
  w.grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 0;
  return false;
}

}  // namespace

int bits_for_colors(int m) {
  int t = 1;
  while ((1 << t) < m) ++t;
  return t;
}

int WangTileSet::m() const {
  std::set<int> used;
  for (const auto& t : tiles) used.insert({t.north, t.east, t.south, t.west});
  return static_cast<int>(used.size());
}

int WangTileSet::t() const { return bits_for_colors(m()); }

std::optional<int> WangTileSet::tile_index(std::string_view name) const {
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> WangTileSet::color_id(std::string_view name) const {
  for (std::size_t i = 0; i < palette.size(); ++i) {
    if (palette[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

WangTileSet parse_wang(std::string_view text) {
  WangTileSet set;
  bool have_colors = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "colors:") {
      if (have_colors) syntax(lineno, "second 'colors:' line");
      std::string c;
      while (ls >> c) {
        if (set.color_id(c)) syntax(lineno, "color '" + c + "' listed twice");
        set.palette.push_back(c);
      }
      if (set.palette.empty()) syntax(lineno, "empty palette");
      have_colors = true;
    } else if (head == "tile") {
      if (!have_colors) syntax(lineno, "'tile' before 'colors:'");
      WangTile tile;
      if (!(ls >> tile.name)) syntax(lineno, "missing tile name");
      bool seen[4] = {false, false, false, false};
      std::string field;
      while (ls >> field) {
        auto eq = field.find('=');
        if (eq != 1 || field.size() < 3) syntax(lineno, "expected <N|E|S|W>=<color>, got '" + field + "'");
        auto color = field.substr(2);
        auto id = set.color_id(color);
        if (!id) {
          throw Error(Errc::UnknownColor, "line " + std::to_string(lineno) + ": '" + color + "'");
        }
        int slot = 0;
        switch (field[0]) {
          case 'N': slot = 0; tile.north = *id; break;
          case 'E': slot = 1; tile.east = *id; break;
          case 'S': slot = 2; tile.south = *id; break;
          case 'W': slot = 3; tile.west = *id; break;
          default: syntax(lineno, "unknown edge '" + field.substr(0, 1) + "'");
        }
        if (seen[slot]) syntax(lineno, "edge given twice");
        seen[slot] = true;
      }
      if (!(seen[0] && seen[1] && seen[2] && seen[3])) syntax(lineno, "tile needs N, E, S and W");
      if (set.tile_index(tile.name)) {
        throw Error(Errc::DuplicateTileName, "line " + std::to_string(lineno) + ": '" + tile.name + "'");
      }
      set.tiles.push_back(std::move(tile));
    } else {
      syntax(lineno, "unexpected '" + head + "'");
    }
  }
  if (!have_colors) syntax(lineno, "missing 'colors:' line");
  if (set.tiles.empty()) syntax(lineno, "no tiles");
  return set;
}

std::string format_wang(const WangTileSet& set) {
  std::ostringstream os;
  os << "colors:";
  for (const auto& c : set.palette) os << ' ' << c;
  os << '\n';
  for (const auto& t : set.tiles) {
    const auto& p = set.palette;
    os << "tile " << t.name << " N=" << p[static_cast<std::size_t>(t.north)]
       << " E=" << p[static_cast<std::size_t>(t.east)] << " S=" << p[static_cast<std::size_t>(t.south)]
       << " W=" << p[static_cast<std::size_t>(t.west)] << '\n';
  }
  return os.str();
}

WangTorusTiling parse_wtil(std::string_view text, const WangTileSet& set) {
  WangTorusTiling w;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_period = false;
  while (std::getline(is, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_period) {
      if (head != "period:" || !(ls >> w.p >> w.q) || w.p < 1 || w.q < 1) {
        syntax(lineno, "expected 'period: <p> <q>'");
      }
      have_period = true;
      continue;
    }
    std::vector<int> row;
    std::string name = head;
    do {
      auto idx = set.tile_index(name);
      if (!idx) syntax(lineno, "unknown tile '" + name + "'");
      row.push_back(*idx);
    } while (ls >> name);
    if (static_cast<int>(row.size()) != w.p) syntax(lineno, "row length differs from p");
    w.grid.push_back(std::move(row));
  }
  if (!have_period) syntax(lineno, "missing 'period:' line");
  if (static_cast<int>(w.grid.size()) != w.q) syntax(lineno, "row count differs from q");
  return w;
}

std::string format_wtil(const WangTorusTiling& tiling, const WangTileSet& set) {
  std::ostringstream os;
  os << "period: " << tiling.p << ' ' << tiling.q << '\n';
  for (const auto& row : tiling.grid) {
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x) os << ' ';
      os << set.tiles.at(static_cast<std::size_t>(row[x])).name;
    }
    os << '\n';
  }
  return os.str();
}

bool check_torus(const WangTileSet& set, const WangTorusTiling& w) {
  if (w.p < 1 || w.q < 1 || static_cast<int>(w.grid.size()) != w.q) {
    throw Error(Errc::IndexOutOfRange, "grid shape does not match period");
  }
  for (const auto& row : w.grid) {
    if (static_cast<int>(row.size()) != w.p) throw Error(Errc::IndexOutOfRange, "ragged grid");
    for (int k : row) {
      if (k < 0 || k >= set.n()) throw Error(Errc::IndexOutOfRange, "tile index " + std::to_string(k));
    }
  }
  for (int y = 0; y < w.q; ++y) {
    for (int x = 0; x < w.p; ++x) {
      const auto& a = set.tiles[static_cast<std::size_t>(w.at(x, y))];
      const auto& east = set.tiles[static_cast<std::size_t>(w.at((x + 1) % w.p, y))];
      const auto& north = set.tiles[static_cast<std::size_t>(w.at(x, (y + 1) % w.q))];
      if (a.east != east.west || a.north != north.south) return false;
    }
  }
  return true;
}

std::optional<WangTorusTiling> solve_torus(const WangTileSet& set, int max_period) {
  if (max_period < 1 || set.tiles.empty()) return std::nullopt;
  for (int sum = 2; sum <= 2 * max_period; ++sum) {
    for (int p = std::max(1, sum - max_period); p <= std::min(max_period, sum - 1); ++p) {
      int q = sum - p;
      WangTorusTiling w{p, q, std::vector<std::vector<int>>(static_cast<std::size_t>(q),
                                                            std::vector<int>(static_cast<std::size_t>(p), 0))};
      if (fill(set, w, 0)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace polytile
