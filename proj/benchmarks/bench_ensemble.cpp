#include <benchmark/benchmark.h>

#include "monogamy/experiments.hpp"

using namespace monogamy;

static void BM_HaarEnsemble(benchmark::State& state) {
    EnsembleConfig cfg;
    cfg.family = EnsembleFamily::Haar;
    cfg.count = 1000;
    cfg.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.count));
}
BENCHMARK(BM_HaarEnsemble)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
