#include <benchmark/benchmark.h>

#include <numbers>

#include "imfid/imfid.hpp"

using namespace imfid;

namespace {

std::vector<double> roulette() {
  std::vector<double> x;
  for (double d : {43.0, 45.0, 52.0, 61.0, 75.0, 88.0, 88.0, 279.0, 357.0}) x.push_back(d * std::numbers::pi / 180.0);
  return x;
}

void BM_ContourGridVonMises(benchmark::State& state) {
  const auto x = roulette();
  const Model model = Model::von_mises(2.0, x.size());
  const auto grid = make_grid(0.0, kTwoPi - 0.015, 0.01);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contour_grid(model, x, grid, m, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
}
BENCHMARK(BM_ContourGridVonMises)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_FiducialSample(benchmark::State& state) {
  const auto x = roulette();
  const Model model = Model::von_mises(2.0, x.size());
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fiducial_sample(model, x, m, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
}
BENCHMARK(BM_FiducialSample)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_VonMisesSampler(benchmark::State& state) {
  Engine engine = make_engine(3);
  const double kappa = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_von_mises(engine, kappa));
}
BENCHMARK(BM_VonMisesSampler)->Arg(3)->Arg(14)->Arg(128);

void BM_NormalBatch(benchmark::State& state) {
  Engine engine = make_engine(4);
  const auto law = PivotLaw::normal(1.0);
  std::vector<double> out(10'000);
  for (auto _ : state) {
    law.sample(engine, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_NormalBatch);

void BM_FalseConfidenceBall(benchmark::State& state) {
  const ProductModel model{Model::gaussian_location(2.0, 1), 2};
  const std::vector<std::vector<double>> thetas{{0.999, 0.0}};
  const std::vector<double> alphas{0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fc_sweep(model, ball_hypothesis(2, 1.0), thetas, alphas, {1'000, 1'000, 5, 1}));
  }
}
BENCHMARK(BM_FalseConfidenceBall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
