#include "polytile/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "polytile/error.hpp"

namespace polytile {

namespace {

constexpr std::pair<int, int> delta(Dir d) {
  switch (d) {
    case Dir::U: return {0, 1};
    case Dir::D: return {0, -1};
    case Dir::L: return {-1, 0};
    case Dir::R: return {1, 0};
  }
  return {0, 0};
}

std::optional<Dir> dir_from_char(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'u': return Dir::U;
    case 'd': return Dir::D;
    case 'l': return Dir::L;
    case 'r': return Dir::R;
    default: return std::nullopt;
  }
}

std::uint64_t pack(long x, long y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

struct VerticalEdge {
  long x;
  long ylo;
  long yhi;
};

std::vector<VerticalEdge> vertical_edges(const std::vector<Vertex>& v) {
  std::vector<VerticalEdge> edges;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i].x == v[i + 1].x && v[i].y != v[i + 1].y) {
      edges.push_back({v[i].x, std::min(v[i].y, v[i + 1].y), std::max(v[i].y, v[i + 1].y)});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const VerticalEdge& a, const VerticalEdge& b) { return a.ylo < b.ylo; });
  return edges;
}

// Cells of one scanline row (cells with this y), west to east.
void fill_row(const std::vector<VerticalEdge>& edges, long y, std::vector<long>& scratch,
              std::vector<Cell>& out) {
  scratch.clear();
  for (const auto& e : edges) {
    if (e.ylo > y) break;
    if (y < e.yhi) scratch.push_back(e.x);
  }
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i + 1 < scratch.size(); i += 2) {
    for (long x = scratch[i]; x < scratch[i + 1]; ++x) {
      out.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
  }
}

std::vector<Vertex> checked_vertices(const BoundaryWord& word, Vertex start) {
  if (word.empty()) throw Error(Errc::NotClosed, "empty boundary word");
  auto [dx, dy] = word_closure(word);
  if (dx != 0 || dy != 0) {
    throw Error(Errc::NotClosed, "net displacement (" + std::to_string(dx) + "," +
                                     std::to_string(dy) + ")");
  }
  if (!is_simple(word)) throw Error(Errc::SelfIntersecting, "path revisits a lattice vertex");
  return word_vertices(normalize(word), start);
}

}  // namespace

char dir_char(Dir d) {
  switch (d) {
    case Dir::U: return 'u';
    case Dir::D: return 'd';
    case Dir::L: return 'l';
    case Dir::R: return 'r';
  }
  return '?';
}

Dir opposite(Dir d) {
  switch (d) {
    case Dir::U: return Dir::D;
    case Dir::D: return Dir::U;
    case Dir::L: return Dir::R;
    case Dir::R: return Dir::L;
  }
  return d;
}

Dir rotate_cw(Dir d) {
  switch (d) {
    case Dir::U: return Dir::R;
    case Dir::R: return Dir::D;
    case Dir::D: return Dir::L;
    case Dir::L: return Dir::U;
  }
  return d;
}

BoundaryWord BoundaryWord::parse(std::string_view text) {
  BoundaryWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    auto d = dir_from_char(text[i]);
    if (!d) {
      throw Error(Errc::SyntaxError, "bad step direction '" + std::string(1, text[i]) + "'");
    }
    ++i;
    int count = 1;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, count);
      if (ec != std::errc{} || count < 1) throw Error(Errc::SyntaxError, "bad step count");
    }
    i = j;
    w.steps.push_back({*d, count});
  }
  return w;
}

std::string BoundaryWord::to_string() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += dir_char(s.dir);
    out += std::to_string(s.count);
  }
  return out;
}

BoundaryWord& BoundaryWord::append(Dir d, int count) {
  steps.push_back({d, count});
  return *this;
}

BoundaryWord& BoundaryWord::append(const BoundaryWord& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  return *this;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Meat: return "meat";
    case Role::Jaw: return "jaw";
    case Role::Filler: return "filler";
    case Role::Tooth1: return "tooth1";
    case Role::Tooth2: return "tooth2";
    case Role::Tooth3: return "tooth3";
    case Role::LinkH: return "link-h";
    case Role::LinkV: return "link-v";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view name) {
  for (int i = 0; i < kRoleCount; ++i) {
    auto r = static_cast<Role>(i);
    if (role_name(r) == name) return r;
  }
  return std::nullopt;
}

Polyomino::Polyomino(std::vector<Cell> c, std::optional<Role> r) : cells(std::move(c)), role(r) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

bool Polyomino::contains(Cell c) const { return std::binary_search(cells.begin(), cells.end(), c); }

std::array<int, 4> Polyomino::bounds() const {
  if (cells.empty()) return {0, 0, 0, 0};
  std::array<int, 4> b{std::numeric_limits<int>::max(), cells.front().y,
                       std::numeric_limits<int>::min(), cells.back().y + 1};
  for (const auto& c : cells) {
    b[0] = std::min(b[0], c.x);
    b[2] = std::max(b[2], c.x + 1);
  }
  return b;
}

std::pair<long, long> word_closure(const BoundaryWord& word) {
  if (word.empty()) throw Error(Errc::InvalidParameter, "empty boundary word");
  long x = 0, y = 0;
  for (const auto& s : word.steps) {
    auto [dx, dy] = delta(s.dir);
    x += static_cast<long>(dx) * s.count;
    y += static_cast<long>(dy) * s.count;
  }
  return {x, y};
}

std::vector<Vertex> word_vertices(const BoundaryWord& word, Vertex start) {
  std::vector<Vertex> v{start};
  v.reserve(word.steps.size() + 1);
  for (const auto& s : word.steps) {
    auto [dx, dy] = delta(s.dir);
    Vertex p = v.back();
    p.x += static_cast<long>(dx) * s.count;
    p.y += static_cast<long>(dy) * s.count;
    v.push_back(p);
  }
  return v;
}

BoundaryWord normalize(const BoundaryWord& word) {
  BoundaryWord out;
  auto& st = out.steps;
  for (auto s : word.steps) {
    while (s.count > 0 && !st.empty() && st.back().dir == opposite(s.dir)) {
      int m = std::min(s.count, st.back().count);
      s.count -= m;
      st.back().count -= m;
      if (st.back().count == 0) st.pop_back();
    }
    if (s.count == 0) continue;
    if (!st.empty() && st.back().dir == s.dir) {
      st.back().count += s.count;
    } else {
      st.push_back(s);
    }
  }
  return out;
}

bool is_simple(const BoundaryWord& word) {
  if (word.empty()) return false;
  auto [dx, dy] = word_closure(word);
  if (dx != 0 || dy != 0) return false;
  BoundaryWord w = normalize(word);
  // a spike across the start point is not a crossing either
  auto& st = w.steps;
  while (st.size() >= 2 && st.front().dir == opposite(st.back().dir)) {
    int m = std::min(st.front().count, st.back().count);
    st.front().count -= m;
    st.back().count -= m;
    if (st.back().count == 0) st.pop_back();
    if (!st.empty() && st.front().count == 0) st.erase(st.begin());
  }
  if (w.empty()) return false;
  std::unordered_set<std::uint64_t> seen;
  long x = 0, y = 0;
  seen.insert(pack(0, 0));
  std::size_t total = 0;
  for (const auto& s : w.steps) total += static_cast<std::size_t>(s.count);
  std::size_t walked = 0;
  for (const auto& s : w.steps) {
    auto [sx, sy] = delta(s.dir);
    for (int k = 0; k < s.count; ++k) {
      x += sx;
      y += sy;
      ++walked;
      if (walked == total) return x == 0 && y == 0;
      if (!seen.insert(pack(x, y)).second) return false;
    }
  }
  return false;
}

long long shoelace_area(const BoundaryWord& word) {
  auto [dx, dy] = word_closure(word);
  if (dx != 0 || dy != 0) throw Error(Errc::NotClosed, "word does not close");
  auto v = word_vertices(word);
  long long twice = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    twice += static_cast<long long>(v[i].x) * v[i + 1].y - static_cast<long long>(v[i + 1].x) * v[i].y;
  }
  return twice / 2;
}

Polyomino word_to_polyomino(const BoundaryWord& word, Vertex start) {
  auto v = checked_vertices(word, start);
  auto edges = vertical_edges(v);
  long ymin = v.front().y, ymax = v.front().y;
  for (const auto& p : v) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const long rows = ymax - ymin;
  std::vector<std::vector<Cell>> per_row(static_cast<std::size_t>(rows));
#pragma omp parallel
  {
    std::vector<long> scratch;
#pragma omp for schedule(static)
    for (long r = 0; r < rows; ++r) {
      fill_row(edges, ymin + r, scratch, per_row[static_cast<std::size_t>(r)]);
    }
  }
  std::size_t total = 0;
  for (const auto& row : per_row) total += row.size();
  Polyomino p;
  p.cells.reserve(total);
  for (const auto& row : per_row) p.cells.insert(p.cells.end(), row.begin(), row.end());
  return p;  // rows are emitted south to north, west to east: already sorted
}

Polyomino word_to_polyomino_serial(const BoundaryWord& word, Vertex start) {
  auto v = checked_vertices(word, start);
  auto edges = vertical_edges(v);
  long ymin = v.front().y, ymax = v.front().y;
  for (const auto& p : v) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  Polyomino p;
  std::vector<long> scratch;
  for (long y = ymin; y < ymax; ++y) fill_row(edges, y, scratch, p.cells);
  return p;
}

Polyomino fill_polygon(std::vector<Vertex> loop) {
  if (loop.empty()) return {};
  if (!(loop.front() == loop.back())) loop.push_back(loop.front());
  auto edges = vertical_edges(loop);
  long ymin = loop.front().y, ymax = loop.front().y;
  for (const auto& p : loop) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  Polyomino p;
  std::vector<long> scratch;
  for (long y = ymin; y < ymax; ++y) fill_row(edges, y, scratch, p.cells);
  return p;
}

Outline trace_boundary(const Polyomino& p) {
  if (p.cells.empty()) throw Error(Errc::InvalidParameter, "empty cell set has no boundary");
  // outgoing boundary edges per lattice vertex, ccw around the set
  std::unordered_map<std::uint64_t, std::vector<Dir>> out;
  std::size_t edge_count = 0;
  auto add = [&](long x, long y, Dir d) {
    out[pack(x, y)].push_back(d);
    ++edge_count;
  };
  for (const auto& c : p.cells) {
    if (!p.contains({c.x, c.y - 1})) add(c.x, c.y, Dir::R);
    if (!p.contains({c.x + 1, c.y})) add(c.x + 1, c.y, Dir::U);
    if (!p.contains({c.x, c.y + 1})) add(c.x + 1, c.y + 1, Dir::L);
    if (!p.contains({c.x - 1, c.y})) add(c.x, c.y + 1, Dir::D);
  }
  auto left_of = [](Dir d) { return rotate_cw(rotate_cw(rotate_cw(d))); };
  Outline o;
  o.start = {p.cells.front().x, p.cells.front().y};
  long x = o.start.x, y = o.start.y;
  Dir cur = Dir::R;
  std::size_t walked = 0;
  do {
    auto& opts = out[pack(x, y)];
    // at a pinch vertex keep turning left so touching corners stay apart
    Dir pick = cur;
    bool found = false;
    for (Dir cand : {left_of(cur), cur, rotate_cw(cur)}) {
      auto it = std::find(opts.begin(), opts.end(), cand);
      if (it != opts.end()) {
        pick = cand;
        opts.erase(it);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::InvalidParameter, "boundary trace lost its way");
    o.word.append(pick);
    auto [dx, dy] = delta(pick);
    x += dx;
    y += dy;
    cur = pick;
    ++walked;
  } while (x != o.start.x || y != o.start.y);
  if (walked != edge_count) {
    throw Error(Errc::InvalidParameter, "cell set is not a single hole-free piece");
  }
  o.word = normalize(o.word);
  return o;
}

BoundaryWord rotate_word_cw(const BoundaryWord& word) {
  BoundaryWord out = word;
  for (auto& s : out.steps) s.dir = rotate_cw(s.dir);
  return out;
}

BoundaryWord reverse_word(const BoundaryWord& word) {
  BoundaryWord out;
  out.steps.assign(word.steps.rbegin(), word.steps.rend());
  for (auto& s : out.steps) s.dir = opposite(s.dir);
  return out;
}

Polyomino canonicalize(const Polyomino& p) {
  auto b = p.bounds();
  return translate(p, -b[0], -b[1]);
}

Polyomino translate(const Polyomino& p, int dx, int dy) {
  Polyomino out;
  out.role = p.role;
  out.cells.reserve(p.cells.size());
  for (const auto& c : p.cells) out.cells.push_back({c.x + dx, c.y + dy});
  return out;  // translation preserves row-major order
}

Polyomino rotate_cells_cw(const Polyomino& p) {
  std::vector<Cell> cells;
  cells.reserve(p.cells.size());
  for (const auto& c : p.cells) cells.push_back({c.y, -c.x - 1});
  return Polyomino(std::move(cells), p.role);
}

std::string format_poly(const Polyomino& p, const std::optional<BoundaryWord>& word) {
  std::ostringstream os;
  os << "role: " << (p.role ? role_name(*p.role) : std::string_view("none")) << '\n';
  if (word) os << "word: " << word->to_string() << '\n';
  os << "cells:\n";
  for (const auto& c : p.cells) os << c.x << ' ' << c.y << '\n';
  return os.str();
}

Polyomino parse_poly(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
  };
  std::optional<Role> role;
  bool have_role = false;
  std::optional<BoundaryWord> word;
  std::vector<Cell> cells;
  bool in_cells = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "role:") {
      std::string tag;
      if (!(ls >> tag)) fail("missing role tag");
      if (tag != "none") {
        role = parse_role(tag);
        if (!role) fail("unknown role '" + tag + "'");
      }
      have_role = true;
      in_cells = false;
    } else if (head == "word:") {
      std::string rest;
      std::getline(ls, rest);
      try {
        word = BoundaryWord::parse(rest);
      } catch (const Error& e) {
        fail(e.what());
      }
      in_cells = false;
    } else if (head == "cells:") {
      in_cells = true;
    } else if (in_cells) {
      Cell c;
      std::istringstream cs(line);
      if (!(cs >> c.x >> c.y)) fail("expected 'x y'");
      std::string extra;
      if (cs >> extra) fail("trailing text after cell");
      cells.push_back(c);
    } else {
      fail("unexpected '" + head + "'");
    }
  }
  if (!have_role) throw Error(Errc::SyntaxError, "missing 'role:' line");
  if (!cells.empty()) return Polyomino(std::move(cells), role);
  if (!word) throw Error(Errc::SyntaxError, "neither 'word:' nor 'cells:' given");
  auto p = word_to_polyomino(*word);
  p.role = role;
  return p;
}

}  // namespace polytile
