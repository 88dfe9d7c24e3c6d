#include <benchmark/benchmark.h>

#include "qecc/builder.hpp"
#include "qecc/decoder.hpp"
#include "qecc/gadgets.hpp"
#include "qecc/montecarlo.hpp"

using namespace qecc;

namespace {

void BM_CodeCapacityShot(benchmark::State& state) {
    auto code = steane_code();
    auto table = DecoderTable::build(code, 1);
    uint64_t shot = 0;
    for (auto _ : state) {
        Rng rng = Rng::shot_stream(7, 0, shot++);
        benchmark::DoNotOptimize(sample_code_capacity(code, table, 0.01, rng));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_CircuitShorShot(benchmark::State& state) {
    auto code = five_qubit_code();
    auto circuit = shor_ec_round(code, 3, 2);
    NoiseModel nm = NoiseModel::uniform(1e-3);
    uint64_t shot = 0;
    for (auto _ : state) {
        Rng rng = Rng::shot_stream(9, 0, shot++);
        benchmark::DoNotOptimize(sample_run(circuit, code, nm, rng));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_SteaneSweepPoint(benchmark::State& state) {
    SweepProtocol proto(SweepMode::CodeCapacity, steane_code());
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_logical_rate(proto, {0.01}, state.range(0), 7, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CodeCapacityShot);
BENCHMARK(BM_CircuitShorShot);
BENCHMARK(BM_SteaneSweepPoint)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
