#include <random>

#include <benchmark/benchmark.h>

#include "vk/complex.hpp"
#include "vk/group_analysis.hpp"
#include "vk/jordan.hpp"
#include "vk/smith.hpp"
#include "vk/words.hpp"

namespace {

void BM_FreeReduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  vk::Letters w;
  for (int k = 0; k < state.range(0); ++k) w.push_back({(rng() & 1) ? "a" : "b", (rng() & 2) ? 1 : -1});
  for (auto _ : state) benchmark::DoNotOptimize(vk::free_reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeReduce)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_SmithDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> entry(-5, 5);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (auto& row : rows) {
    for (auto& v : row) v = entry(rng);
  }
  const auto m = vk::IntegerMatrix::from_dense(rows);
  for (auto _ : state) benchmark::DoNotOptimize(vk::smith_normal_form(m));
}
BENCHMARK(BM_SmithDense)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SpherePi1(benchmark::State& state) {
  const auto x = vk::build_space(vk::Model::grid_sphere, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vk::abelianization(vk::object_group_presentation(x.edge_path_groupoid(), x.vertices().front())));
  }
}
BENCHMARK(BM_SpherePi1)->Arg(8)->Arg(16)->Arg(32);

void BM_ComplementComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = vk::build_space(vk::Model::grid_sphere, n);
  const auto curve = vk::random_simple_cycle(x, 5, {4, 4 * n, 10000});
  for (auto _ : state) benchmark::DoNotOptimize(vk::complement_components(x, curve));
}
BENCHMARK(BM_ComplementComponents)->Arg(8)->Arg(16)->Arg(32);

void BM_JordanPipeline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = vk::build_space(vk::Model::grid_sphere, n);
  const auto curve = vk::random_simple_cycle(x, 9, {4, 4 * n, 10000});
  for (auto _ : state) benchmark::DoNotOptimize(vk::run_vankampen_jordan(x, curve));
}
BENCHMARK(BM_JordanPipeline)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
