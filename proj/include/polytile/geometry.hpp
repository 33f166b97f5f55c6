#pragma once

// Integer-lattice geometry: boundary words, cell sets and the transforms
// the construction needs. y grows northward; counterclockwise words have
// positive area.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polytile {

enum class Dir : std::uint8_t { U, D, L, R };

char dir_char(Dir d);
Dir opposite(Dir d);
// U -> R -> D -> L -> U
Dir rotate_cw(Dir d);

struct Step {
  Dir dir;
  int count;  // >= 1
  bool operator==(const Step&) const = default;
};

struct BoundaryWord {
  std::vector<Step> steps;

  static BoundaryWord parse(std::string_view text);
  std::string to_string() const;
  bool empty() const { return steps.empty(); }
  BoundaryWord& append(Dir d, int count = 1);
  BoundaryWord& append(const BoundaryWord& other);
  bool operator==(const BoundaryWord&) const = default;
};

struct Vertex {
  long x = 0;
  long y = 0;
  bool operator==(const Vertex&) const = default;
};

// Unit cell [x, x+1) x [y, y+1). Ordered row-major (south row first).
struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class Role { Meat, Jaw, Filler, Tooth1, Tooth2, Tooth3, LinkH, LinkV };
inline constexpr int kRoleCount = 8;

std::string_view role_name(Role r);
std::optional<Role> parse_role(std::string_view name);

// Cells are kept sorted and unique.
struct Polyomino {
  std::vector<Cell> cells;
  std::optional<Role> role;

  Polyomino() = default;
  explicit Polyomino(std::vector<Cell> c, std::optional<Role> r = std::nullopt);

  std::size_t size() const { return cells.size(); }
  bool contains(Cell c) const;
  // {min_x, min_y, max_x + 1, max_y + 1}
  std::array<int, 4> bounds() const;
  bool operator==(const Polyomino& o) const { return cells == o.cells; }
};

// Net displacement of the path; (0,0) iff closed. Throws on an empty word.
std::pair<long, long> word_closure(const BoundaryWord& word);

std::vector<Vertex> word_vertices(const BoundaryWord& word, Vertex start = {});

// Merges runs in the same direction and cancels immediate back-tracking.
BoundaryWord normalize(const BoundaryWord& word);

// Closed, and no lattice vertex is visited twice after normalization.
bool is_simple(const BoundaryWord& word);

// Signed area; positive for counterclockwise. Throws NotClosed.
long long shoelace_area(const BoundaryWord& word);

// Interior cells of a closed simple word whose path starts at `start`.
// Scanline parity fill, rows processed in parallel.
Polyomino word_to_polyomino(const BoundaryWord& word, Vertex start = {});
// Same result, single-threaded; kept as the reference for tests/benchmarks.
Polyomino word_to_polyomino_serial(const BoundaryWord& word, Vertex start = {});

// Parity fill of a lattice polygon given as a vertex loop (closing edge
// implied). No simplicity check; used for cavities and transcribed outlines.
Polyomino fill_polygon(std::vector<Vertex> loop);

// Boundary of an edge-connected, hole-free cell set, counterclockwise,
// starting at the south-west corner of its first cell.
struct Outline {
  BoundaryWord word;
  Vertex start;
};
Outline trace_boundary(const Polyomino& p);

BoundaryWord rotate_word_cw(const BoundaryWord& word);
// Reversed traversal of the same path: steps reversed, directions inverted.
BoundaryWord reverse_word(const BoundaryWord& word);

Polyomino canonicalize(const Polyomino& p);
Polyomino translate(const Polyomino& p, int dx, int dy);
// Quarter turn clockwise about the origin: cell (x,y) -> (y, -x-1).
Polyomino rotate_cells_cw(const Polyomino& p);

// ".poly" text: `role: <tag>`, then `word: <steps>` and/or `cells:` + "x y" lines.
std::string format_poly(const Polyomino& p, const std::optional<BoundaryWord>& word);
Polyomino parse_poly(std::string_view text);

}  // namespace polytile
