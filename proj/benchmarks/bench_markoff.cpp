#include <benchmark/benchmark.h>

#include "markoff/linearity.hpp"
#include "markoff/positivity.hpp"
#include "markoff/treewalk.hpp"

using namespace markoff;

static void BM_BuildTree(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto tree = build_tree(0, 0, 1, height);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(BM_BuildTree)->Arg(6)->Arg(9)->Arg(12);

static void BM_Path(benchmark::State& state) {
  MovePath word(static_cast<size_t>(state.range(0)), Move::Left);
  for (size_t i = 1; i < word.size(); i += 2) word[i] = Move::Right;
  for (auto _ : state) {
    auto rows = path(Rational(11, 10), 1, 1, word);
    benchmark::DoNotOptimize(rows);
  }
}
// alternating words grow doubly exponentially; lengths stay small
BENCHMARK(BM_Path)->Arg(8)->Arg(16)->Arg(24);

static void BM_TransferMatrix(benchmark::State& state) {
  MovePath word(static_cast<size_t>(state.range(0)), Move::Right);
  for (size_t i = 0; i < word.size(); i += 3) word[i] = Move::Left;
  for (auto _ : state) {
    auto M = transfer_matrix(word);
    benchmark::DoNotOptimize(M);
  }
}
BENCHMARK(BM_TransferMatrix)->Arg(6)->Arg(10)->Arg(14);

static void BM_PositivityWalk(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  ChartPoint p{Rational(1, 4), Rational(1, 4)};
  for (auto _ : state) {
    bool pos = is_positive_to_depth(p, depth);
    benchmark::DoNotOptimize(pos);
  }
}
BENCHMARK(BM_PositivityWalk)->Arg(8)->Arg(12)->Arg(15);

static void BM_WitnessSearch(benchmark::State& state) {
  ChartPoint p{1, Rational(9, 10)};
  for (auto _ : state) {
    auto w = find_witness(p, 10);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessSearch);

static void BM_Halfplanes(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto planes = halfplanes_to_depth(depth);
    benchmark::DoNotOptimize(planes);
  }
}
BENCHMARK(BM_Halfplanes)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
