#include <benchmark/benchmark.h>

#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"

using namespace qecc;

namespace {

PauliOperator random_pauli(size_t n, Rng& rng) {
    BitVector x(n), z(n);
    for (size_t w = 0; w < x.words().size(); ++w) {
        x.words()[w] = rng.next_u64();
        z.words()[w] = rng.next_u64();
    }
    if (n % 64) {
        uint64_t mask = (uint64_t{1} << (n % 64)) - 1;
        x.words().back() &= mask;
        z.words().back() &= mask;
    }
    return PauliOperator(n, std::move(x), std::move(z), 0);
}

void BM_PauliMultiply(benchmark::State& state) {
    size_t n = state.range(0);
    Rng rng(1);
    auto a = random_pauli(n, rng);
    auto b = random_pauli(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_PauliCommutes(benchmark::State& state) {
    size_t n = state.range(0);
    Rng rng(2);
    auto a = random_pauli(n, rng);
    auto b = random_pauli(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.commutes_with(b));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_PauliWeight(benchmark::State& state) {
    size_t n = state.range(0);
    Rng rng(3);
    auto a = random_pauli(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.weight());
    }
}

}  // namespace

BENCHMARK(BM_PauliMultiply)->Arg(7)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK(BM_PauliCommutes)->Arg(7)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK(BM_PauliWeight)->Arg(64)->Arg(4096);
