// polytile: command-line front end.
// Exit codes: 0 success, 1 domain "no" (no tiling, verification failed, ...), 2 usage or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polytile/assembler.hpp"
#include "polytile/error.hpp"
#include "polytile/reduction.hpp"
#include "polytile/render.hpp"

namespace fs = std::filesystem;
using namespace polytile;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

// Parse errors get the file name in front.
template <class F>
auto parse_file(const std::string& path, F parse) {
  std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

WangTileSet load_wang(const std::string& path) {
  return parse_file(path, [](const std::string& s) { return parse_wang(s); });
}

PatternTiling load_plc(const std::string& path) {
  return parse_file(path, [](const std::string& s) { return parse_plc(s); });
}

// Every .poly file in a directory, in name order; roles must be distinct.
TileMap load_tiles(const std::string& dir) {
  if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".poly") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  TileMap tiles;
  for (const auto& f : files) {
    Polyomino p = parse_file(f.string(), [](const std::string& s) { return parse_poly(s); });
    if (!p.role) continue;
    if (tiles.count(*p.role)) throw UsageError(f.string() + ": second tile with role " + std::string(role_name(*p.role)));
    tiles[*p.role] = p;
  }
  if (tiles.empty()) throw UsageError(dir + " holds no tagged .poly files");
  return tiles;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    spit(out_path, text);
  }
}

std::string word_report(const std::string& name, const BoundaryWord& w) {
  std::ostringstream os;
  auto [dx, dy] = word_closure(w);
  bool closed = dx == 0 && dy == 0;
  os << name << ": closure=(" << dx << "," << dy << ") closed=" << (closed ? "yes" : "no");
  if (closed) {
    bool simple = is_simple(w);
    os << " simple=" << (simple ? "yes" : "no");
    auto v = word_vertices(w);
    long minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const auto& p : v) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    os << " bbox=" << (maxx - minx) << "x" << (maxy - miny) << " area=" << shoelace_area(w);
  }
  os << '\n';
  return os.str();
}

int run_wang_solve(const std::string& input, int max_period, const std::string& out) {
  auto set = load_wang(input);
  auto w = solve_torus(set, max_period);
  if (!w) {
    std::cout << "none up to period " << max_period
              << " (a periodic witness was not found; this says nothing about aperiodic tilings)\n";
    return 1;
  }
  emit(format_wtil(*w, set), out);
  if (!out.empty()) std::cout << "period: " << w->p << ' ' << w->q << '\n';
  return 0;
}

int run_reduce(const std::string& input, const std::string& out_dir, int max_period) {
  auto set = load_wang(input);
  if (set.n() == 1) {
    std::cout << "n = 1: the reduction needs two or more tiles; solving the Wang set directly\n";
    return run_wang_solve(input, max_period, "");
  }
  auto tiles = reduce(set);
  std::string man = manifest(tiles);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const Tile* t : tiles.all()) {
      spit(fs::path(out_dir) / (std::string(role_name(t->role)) + ".poly"), format_poly(t->cells, t->word));
    }
    spit(fs::path(out_dir) / "manifest", man);
  }
  std::cout << man;
  return 0;
}

int run_features(const std::string& out_dir) {
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (auto k : {FeatureKind::TBump, FeatureKind::TDent, FeatureKind::NormalDent, FeatureKind::DeeperDent,
                 FeatureKind::NormalBump, FeatureKind::DeeperBump}) {
    for (auto s : {Side::North, Side::East, Side::South, Side::West}) {
      auto w = feature_word(k, s);
      auto cells = feature_cells(k, s);
      auto [dx, dy] = word_closure(w);
      std::cout << feature_name(k) << ' ' << side_name(s) << " net=(" << dx << "," << dy
                << ") cells=" << cells.size() << " word=" << w.to_string() << '\n';
      if (!out_dir.empty()) {
        std::string name = std::string(feature_name(k)) + "-" + std::string(side_name(s)) + ".poly";
        spit(fs::path(out_dir) / name, format_poly(cells, std::nullopt));
      }
    }
  }
  return 0;
}

int run_render(const std::string& tiles_dir, const std::string& input, const std::string& plc,
               const std::string& out) {
  TileMap tiles;
  if (!tiles_dir.empty()) {
    tiles = load_tiles(tiles_dir);
  } else if (!input.empty()) {
    tiles = reduce(load_wang(input)).tile_map();
  } else {
    throw UsageError("render needs --tiles or --input");
  }
  std::string svg;
  if (!plc.empty()) {
    svg = render_svg(tiles, load_plc(plc));
  } else {
    std::vector<Polyomino> pieces;
    for (const auto& [role, p] : tiles) pieces.push_back(p);
    svg = render_pieces_svg(pieces);
  }
  emit(svg, out);
  return 0;
}

int run_tile(const std::string& tiles_dir, const std::string& kind, int w, int h, const std::vector<int>& anchor,
             const std::string& out) {
  auto tiles = load_tiles(tiles_dir);
  Region r{kind == "torus" ? RegionKind::Torus : RegionKind::Rectangle, w, h};
  std::optional<Cell> a;
  if (!anchor.empty()) a = Cell{anchor[0], anchor[1]};
  auto sol = solve_region(tiles, r, a);
  if (!sol) {
    std::cout << "none\n";
    return 1;
  }
  emit(format_plc(*sol), out);
  return 0;
}

int run_assemble(const std::string& input, const std::string& wtil, const std::string& out, const std::string& svg) {
  auto set = load_wang(input);
  auto w = parse_file(wtil, [&](const std::string& s) { return parse_wtil(s, set); });
  auto tiles = reduce(set);
  auto rep = assemble_pattern(tiles, set, w);
  emit(format_plc(rep.tiling), out);
  if (!svg.empty()) spit(svg, render_svg(tiles.tile_map(), rep.tiling));
  if (!out.empty()) {
    std::cout << "region: torus " << rep.tiling.region.width << ' ' << rep.tiling.region.height << '\n';
    for (const auto& [role, c] : rep.counts) std::cout << "count " << role_name(role) << ' ' << c << '\n';
    std::cout << "residual_components: " << rep.residual_components << '\n';
    std::cout << "verified: " << (verify_tiling(tiles.tile_map(), rep.tiling) ? "yes" : "no") << '\n';
  }
  return 0;
}

int run_extract(const std::string& input, const std::string& plc, const std::string& out) {
  auto set = load_wang(input);
  auto w = extract_wang(set, load_plc(plc));
  emit(format_wtil(w, set), out);
  return 0;
}

int run_verify(const std::string& tiles_dir, const std::string& input, const std::string& plc) {
  TileMap tiles;
  if (!tiles_dir.empty()) {
    tiles = load_tiles(tiles_dir);
  } else if (!input.empty()) {
    tiles = reduce(load_wang(input)).tile_map();
  } else {
    throw UsageError("verify needs --tiles or --input");
  }
  auto v = find_violation(tiles, load_plc(plc));
  if (!v) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "violation cell " << v->cell.x << ' ' << v->cell.y << " coverage " << v->coverage << '\n';
  return 1;
}

int run_deadend(const std::string& input, int radius, std::uint64_t max_nodes) {
  auto rep = dead_end_check(load_wang(input), radius, max_nodes);
  std::cout << "dead_end: " << verdict_name(rep.verdict) << '\n'
            << "radius: " << radius << '\n'
            << "nodes: " << rep.nodes << '\n'
            << "depth: " << rep.max_depth << '\n'
            << "pocket: " << rep.flank.x << ' ' << rep.flank.y << '\n';
  return rep.verdict == Verdict::True ? 0 : 1;
}

int run_check_words(int n, int t, bool printed_only) {
  if (printed_only) {
    std::cout << word_report("filler-printed", filler_printed_word(t));
    return 0;
  }
  std::cout << word_report("meat", meat_base_word(n, t)) << word_report("jaw", jaw_base_word(n, t))
            << word_report("filler", filler_base_word(t)) << word_report("filler-printed", filler_printed_word(t))
            << word_report("link", link_base_word(n, t));
  return 0;
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::UnknownColor:
    case Errc::DuplicateTileName:
    case Errc::UnknownRole:
    case Errc::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wang tiles to an 8-polyomino translational tiling, and checks of the construction"};
  app.require_subcommand(1);
  unsigned long seed = 0;
  app.add_option("--seed", seed, "accepted for interface stability; every algorithm is deterministic");

  std::string input, out, tiles_dir, plc, wtil, svg, region_kind = "torus";
  int max_period = 4, n = 3, t = 2, width = 0, height = 0, radius = 30;
  std::uint64_t max_nodes = 2'000'000;
  bool printed = false;
  std::vector<int> anchor;

  auto* ws = app.add_subcommand("wang-solve", "search periodic (torus) Wang tilings, smallest p+q first");
  ws->add_option("--input", input, ".wang file")->required();
  ws->add_option("--max-period", max_period)->check(CLI::PositiveNumber);
  ws->add_option("--output", out, "write the .wtil here instead of stdout");

  auto* rd = app.add_subcommand("reduce", "build the eight polyominoes for a Wang set");
  rd->add_option("--input", input, ".wang file")->required();
  rd->add_option("--out", out, "directory for the .poly files and manifest");
  rd->add_option("--max-period", max_period, "period bound used when n = 1")->check(CLI::PositiveNumber);

  auto* fe = app.add_subcommand("features", "dump every bump and dent in all four orientations");
  fe->add_option("--out", out, "directory for .poly files");

  auto* rn = app.add_subcommand("render", "SVG of a tile set or of a placement file");
  rn->add_option("--tiles", tiles_dir, "directory of .poly files");
  rn->add_option("--input", input, ".wang file (tiles are reduced from it)");
  rn->add_option("--placements", plc, ".plc file");
  rn->add_option("--output", out);

  auto* tl = app.add_subcommand("tile", "exact-cover search over a rectangle or torus");
  tl->add_option("--tiles", tiles_dir)->required();
  tl->add_option("--region", region_kind)->check(CLI::IsMember({"rect", "torus"}));
  tl->add_option("--width", width)->required()->check(CLI::PositiveNumber);
  tl->add_option("--height", height)->required()->check(CLI::PositiveNumber);
  tl->add_option("--anchor", anchor, "x y of the first cell to cover")->expected(2);
  tl->add_option("--output", out);

  auto* as = app.add_subcommand("assemble", "polyomino torus tiling from a Wang torus tiling");
  as->add_option("--input", input, ".wang file")->required();
  as->add_option("--tiling", wtil, ".wtil file")->required();
  as->add_option("--output", out, ".plc file (stdout if omitted)");
  as->add_option("--emit-svg", svg, "also render the pattern");

  auto* ex = app.add_subcommand("extract", "recover the Wang tiling from an assembled pattern");
  ex->add_option("--input", input, ".wang file")->required();
  ex->add_option("--placements", plc, ".plc file")->required();
  ex->add_option("--output", out);

  auto* vf = app.add_subcommand("verify", "check that placements cover the region exactly once");
  vf->add_option("--tiles", tiles_dir, "directory of .poly files");
  vf->add_option("--input", input, ".wang file (tiles are reduced from it)");
  vf->add_option("--placements", plc, ".plc file")->required();

  auto* de = app.add_subcommand("deadend", "bounded search: teeth, links and filler alone get stuck");
  de->add_option("--input", input, ".wang file")->required();
  de->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  de->add_option("--max-nodes", max_nodes);

  auto* cw = app.add_subcommand("check-words", "closure, simplicity and extent of the base words");
  cw->add_option("--n", n)->check(CLI::Range(1, 64));
  cw->add_option("--t", t)->check(CLI::Range(1, 16));
  cw->add_flag("--printed-filler", printed, "only the filler word as printed, with its closure defect");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ws) return run_wang_solve(input, max_period, out);
    if (*rd) return run_reduce(input, out, max_period);
    if (*fe) return run_features(out);
    if (*rn) return run_render(tiles_dir, input, plc, out);
    if (*tl) return run_tile(tiles_dir, region_kind, width, height, anchor, out);
    if (*as) return run_assemble(input, wtil, out, svg);
    if (*ex) return run_extract(input, plc, out);
    if (*vf) return run_verify(tiles_dir, input, plc);
    if (*de) return run_deadend(input, radius, max_nodes);
    if (*cw) return run_check_words(n, t, printed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
