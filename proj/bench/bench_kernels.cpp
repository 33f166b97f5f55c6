// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "polytile/assembler.hpp"

using namespace polytile;

namespace {

const char* kThree =
    "colors: red green blue yellow\n"
    "tile tile1 N=red E=yellow S=red W=green\n"
    "tile tile2 N=blue E=red S=blue W=yellow\n"
    "tile tile3 N=yellow E=green S=yellow W=red\n";

struct Flagship {
  WangTileSet set = parse_wang(kThree);
  PolyominoSet8 tiles = reduce(set);
  TileMap map = tiles.tile_map();
  PatternTiling tiling = assemble_pattern(tiles, set, WangTorusTiling{3, 1, {{0, 1, 2}}}).tiling;
};

const Flagship& flagship() {
  static const Flagship f;
  return f;
}

// the jaw is the largest of the eight
void BM_FillJaw(benchmark::State& st) {
  auto w = jaw_base_word(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(word_to_polyomino(w));
}

void BM_FillJawSerial(benchmark::State& st) {
  auto w = jaw_base_word(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(word_to_polyomino_serial(w));
}

void BM_Verify(benchmark::State& st) {
  const auto& f = flagship();
  for (auto _ : st) benchmark::DoNotOptimize(find_violation(f.map, f.tiling));
}

void BM_VerifySerial(benchmark::State& st) {
  const auto& f = flagship();
  for (auto _ : st) benchmark::DoNotOptimize(find_violation_serial(f.map, f.tiling));
}

void BM_MouthSeats(benchmark::State& st) {
  const auto& f = flagship();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_mouth_seats(f.tiles));
}

}  // namespace

BENCHMARK(BM_FillJaw)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillJawSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MouthSeats)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
