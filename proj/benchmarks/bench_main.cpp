#include <benchmark/benchmark.h>

#include "pseudoloc/closed_form.hpp"
#include "pseudoloc/corpus.hpp"
#include "pseudoloc/resolvers.hpp"
#include "pseudoloc/solvers.hpp"
#include "pseudoloc/structure.hpp"
#include "pseudoloc/verify.hpp"

using namespace pseudoloc;

namespace {

std::vector<Graph> sample(Family f, int n, int count) {
  CorpusSpec spec;
  spec.family = f;
  spec.max_n = n;
  spec.seed = 42;
  spec.count = count;
  return random_pseudotrees(spec);
}

void BM_Profile(benchmark::State& state) {
  const auto graphs = sample(Family::Unicyclic, static_cast<int>(state.range(0)), 64);
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(profile(g));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_Profile)->Arg(16)->Arg(32)->Arg(64);

void BM_ClosedForm(benchmark::State& state) {
  const auto param = static_cast<Parameter>(state.range(0));
  const auto graphs = sample(Family::Unicyclic, 40, 32);
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(compute(g, param, 0, ComputeMode::Closed));
  state.SetLabel(std::string(to_string(param)));
}
BENCHMARK(BM_ClosedForm)
    ->Arg(static_cast<int>(Parameter::Dmd))
    ->Arg(static_cast<int>(Parameter::Dim))
    ->Arg(static_cast<int>(Parameter::Sdim))
    ->Arg(static_cast<int>(Parameter::Ddim))
    ->Arg(static_cast<int>(Parameter::Mdim));

void BM_BruteForceMetric(benchmark::State& state) {
  const auto graphs = sample(Family::Unicyclic, static_cast<int>(state.range(0)), 8);
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(brute_force_dimension(g, Variant::metric()));
}
BENCHMARK(BM_BruteForceMetric)->Arg(8)->Arg(12)->Arg(16);

void BM_IndependenceNumber(benchmark::State& state) {
  const auto graphs = sample(Family::Unicyclic, static_cast<int>(state.range(0)), 16);
  std::vector<MaskGraph> srs;
  for (const auto& g : graphs) srs.push_back(sr_mask_graph(boundary_and_sr_graph(g)));
  for (auto _ : state)
    for (const auto& h : srs) benchmark::DoNotOptimize(independence_number(h));
}
BENCHMARK(BM_IndependenceNumber)->Arg(24)->Arg(48)->Arg(64);

void BM_VerifyTrees(benchmark::State& state) {
  CorpusSpec spec;
  spec.max_n = static_cast<int>(state.range(0));
  VerifyOptions opts;
  opts.parameters = {std::begin(kAllParameters), std::end(kAllParameters)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(spec, opts));
}
BENCHMARK(BM_VerifyTrees)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
