#include <benchmark/benchmark.h>

#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"
#include "qecc/tableau.hpp"

using namespace qecc;

namespace {

void BM_TableauGates(benchmark::State& state) {
    size_t n = state.range(0);
    Tableau t(n);
    Rng rng(11);
    for (auto _ : state) {
        size_t q = rng.next_below(n);
        size_t r = (q + 1 + rng.next_below(n - 1)) % n;
        switch (rng.next_below(3)) {
            case 0: t.apply_h(q); break;
            case 1: t.apply_s(q); break;
            default: t.apply_cx(q, r); break;
        }
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_TableauMeasureZ(benchmark::State& state) {
    size_t n = state.range(0);
    Tableau t(n);
    Rng rng(12);
    for (size_t q = 0; q < n; ++q) t.apply_h(q);
    for (auto _ : state) {
        size_t q = rng.next_below(n);
        t.apply_h(q);  // keep measurements from going fully deterministic
        benchmark::DoNotOptimize(t.measure_z(q, rng));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_TableauMeasureWideStabilizer(benchmark::State& state) {
    size_t n = state.range(0);
    Tableau t(n);
    Rng rng(13);
    BitVector x(n), z(n);
    for (size_t q = 0; q < n; ++q) x.set(q, true);
    PauliOperator wide(n, std::move(x), std::move(z), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.measure_pauli(wide, rng));
    }
    state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_TableauGates)->Arg(16)->Arg(128)->Arg(1024);
BENCHMARK(BM_TableauMeasureZ)->Arg(16)->Arg(128)->Arg(1024);
BENCHMARK(BM_TableauMeasureWideStabilizer)->Arg(128)->Arg(1024);
