#include <benchmark/benchmark.h>

#include "sll/generator.hpp"
#include "sll/matrix.hpp"
#include "sll/subspace.hpp"

namespace {

using namespace sll;

FieldSpec field_of(int kind) {
    switch (kind) {
        case 0: return FieldSpec::prime(3);
        case 1: return FieldSpec::prime(5);
        default: return FieldSpec::rationals();
    }
}

void BM_rref(benchmark::State& state) {
    FieldSpec field = field_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    Rng rng(1);
    Matrix m = random_matrix(rng, field, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rref());
    }
}
BENCHMARK(BM_rref)->Args({0, 4})->Args({0, 8})->Args({1, 8})->Args({2, 4})->Args({2, 8});

void BM_kernel(benchmark::State& state) {
    FieldSpec field = field_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    Rng rng(2);
    Matrix m = random_matrix(rng, field, n / 2, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.kernel());
    }
}
BENCHMARK(BM_kernel)->Args({0, 8})->Args({1, 8})->Args({2, 8});

void BM_subspace_sum(benchmark::State& state) {
    FieldSpec field = field_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    Rng rng(3);
    Subspace a = random_subspace(rng, field, n, n / 2);
    Subspace b = random_subspace(rng, field, n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum(a, b));
    }
}
BENCHMARK(BM_subspace_sum)->Args({0, 8})->Args({1, 8});

void BM_subspace_intersect(benchmark::State& state) {
    FieldSpec field = field_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    Rng rng(4);
    Subspace a = random_subspace(rng, field, n, n / 2);
    Subspace b = random_subspace(rng, field, n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect(a, b));
    }
}
BENCHMARK(BM_subspace_intersect)->Args({0, 8})->Args({1, 8});

}  // namespace

BENCHMARK_MAIN();
