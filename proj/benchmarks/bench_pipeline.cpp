#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "entgraph/count_table.hpp"
#include "entgraph/eval.hpp"
#include "entgraph/similarity.hpp"
#include "entgraph/subgraph.hpp"

using namespace entgraph;

namespace {

CountTable random_table(int preds, int feats, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CountTable t;
  t.key = {"organization", "organization"};
  for (int i = 0; i < preds; ++i) {
    const std::string pred = "p" + std::to_string(i);
    for (int j = 0; j < feats; ++j) {
      if (rng() % 4 == 0) continue;
      t.add(pred, "a" + std::to_string(j) + "\tb" + std::to_string(j),
            1 + static_cast<std::int64_t>(rng() % 8));
    }
  }
  return t;
}

void BM_ComputeWeights(benchmark::State& state) {
  const CountTable t = random_table(static_cast<int>(state.range(0)), 200, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_weights(t));
  }
}
BENCHMARK(BM_ComputeWeights)->Arg(50)->Arg(200);

void BM_BuildSubgraph(benchmark::State& state) {
  const CountTable t = random_table(static_cast<int>(state.range(0)), 120, 2);
  const WeightTable w = compute_weights(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_subgraph(w, 0.01, {}, &t));
  }
}
BENCHMARK(BM_BuildSubgraph)->Arg(50)->Arg(150);

void BM_BincPair(benchmark::State& state) {
  const CountTable t = random_table(2, 400, 3);
  const WeightTable w = compute_weights(t);
  const WeightRow& p = w.rows.at("p0");
  const WeightRow& q = w.rows.at("p1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(binc(p, q));
  }
}
BENCHMARK(BM_BincPair);

void BM_PrSweep(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<double> scores;
  std::vector<bool> labels;
  for (int i = 0; i < state.range(0); ++i) {
    scores.push_back((rng() % 1000) / 1000.0);
    labels.push_back(rng() % 3 == 0);
  }
  labels[0] = true;
  for (auto _ : state) {
    const PRCurve c = pr_sweep(scores, labels);
    benchmark::DoNotOptimize(auc_range(c, 0.5));
  }
}
BENCHMARK(BM_PrSweep)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
