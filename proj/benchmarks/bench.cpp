#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "smdedge/canny.hpp"
#include "smdedge/detector.hpp"
#include "smdedge/gaussian.hpp"
#include "smdedge/postprocess.hpp"

namespace {

smdedge::GrayImage random_image(int rows, int cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
  for (auto& v : px) v = static_cast<std::uint8_t>(dist(rng));
  return {rows, cols, std::move(px)};
}

void BM_GaussianBlur512(benchmark::State& state) {
  const auto img = random_image(512, 512, 1u);
  const auto kernel = smdedge::make_kernel(7);
  for (auto _ : state) {
    auto out = smdedge::gaussian_blur(img, kernel);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_GaussianBlur512)->Unit(benchmark::kMillisecond);

void BM_ScanLine(benchmark::State& state) {
  std::mt19937 rng(2u);
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> line(static_cast<std::size_t>(state.range(0)));
  for (auto& v : line) v = static_cast<std::uint8_t>(dist(rng));
  const smdedge::DetectorParams params;
  for (auto _ : state) {
    auto res = smdedge::scan_line(line, params);
    benchmark::DoNotOptimize(res);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanLine)->Arg(512)->Arg(4096);

void BM_Detect512(benchmark::State& state) {
  const auto img = random_image(512, 512, 3u);
  const smdedge::DetectorParams params;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto map = smdedge::detect(img, params, nullptr, threads);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_Detect512)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EliminateIsolated512(benchmark::State& state) {
  std::mt19937 rng(4u);
  std::bernoulli_distribution coin(0.05);
  std::vector<std::uint8_t> values(512 * 512, 0);
  for (auto& v : values)
    if (coin(rng)) v = 255;
  const smdedge::EdgeMap map(512, 512, std::move(values));
  for (auto _ : state) {
    auto out = smdedge::eliminate_isolated(map);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EliminateIsolated512)->Unit(benchmark::kMillisecond);

void BM_Canny512(benchmark::State& state) {
  const auto img = random_image(512, 512, 5u);
  const smdedge::CannyParams params;
  for (auto _ : state) {
    auto map = smdedge::canny(img, params);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_Canny512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
