#include <benchmark/benchmark.h>

#include "monogamy/inequalities.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/rng.hpp"

using namespace monogamy;

static void BM_HermitianEigen4(benchmark::State& state) {
    Rng rng(1);
    const CMatrix rho = sample_haar(rng).reduced(QubitPair{Qubit::A, Qubit::B});
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(rho));
}
BENCHMARK(BM_HermitianEigen4);

static void BM_ConcurrenceMixed(benchmark::State& state) {
    Rng rng(2);
    const CMatrix rho = sample_haar(rng).reduced(QubitPair{Qubit::A, Qubit::C});
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_mixed(rho));
}
BENCHMARK(BM_ConcurrenceMixed);

static void BM_BuildReport(benchmark::State& state) {
    Rng rng(3);
    const PureState3Q psi = sample_haar(rng);
    for (auto _ : state) benchmark::DoNotOptimize(build_report(psi, Qubit::A));
}
BENCHMARK(BM_BuildReport);
