#include <benchmark/benchmark.h>

#include "sll/curvature.hpp"
#include "sll/errors.hpp"
#include "sll/generator.hpp"
#include "sll/lattice.hpp"
#include "sll/two_sum.hpp"

namespace {

using namespace sll;

void BM_chains(benchmark::State& state) {
    FieldSpec field = FieldSpec::prime(5);
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    Rng rng(10);
    GeneratedTwoSum gen = random_two_sum(rng, field, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen.dec.chains());
    }
}
BENCHMARK(BM_chains)->Arg(4)->Arg(6)->Arg(8);

void BM_chain_identity_bundle(benchmark::State& state) {
    FieldSpec field = FieldSpec::prime(3);
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    Rng rng(11);
    GeneratedTwoSum gen = random_two_sum(rng, field, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen.dec.verify_chain_identities());
    }
}
BENCHMARK(BM_chain_identity_bundle)->Arg(4)->Arg(6);

void BM_lattice_closure(benchmark::State& state) {
    FieldSpec field = FieldSpec::prime(3);
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    Rng rng(12);
    GeneratedTwoSum gen = random_two_sum(rng, field, dim);
    std::vector<Subspace> seeds{gen.dec.v1(), gen.dec.v2(), gen.dec.w1(), gen.dec.w2()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(seeds, 4096));
    }
}
BENCHMARK(BM_lattice_closure)->Arg(4)->Arg(6);

void BM_curvature_solution_space(benchmark::State& state) {
    FieldSpec field = FieldSpec::prime(5);
    Rng rng(13);
    GeneratedReflexive gen = random_reflexive(rng, field, 4);
    std::vector<Subspace> parts{gen.dec.v1(), gen.dec.v2()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(curvature_solution_space(field, 4, parts, &gen.form));
    }
}
BENCHMARK(BM_curvature_solution_space);

void BM_five_sum_invariant(benchmark::State& state) {
    FieldSpec field = FieldSpec::prime(5);
    Rng rng(14);
    // Retry until all four pairwise sums hold.
    for (;;) {
        GeneratedTwoSum gen = random_two_sum(rng, field, 6);
        try {
            five_sum_invariant(gen.dec);
            for (auto _ : state) {
                benchmark::DoNotOptimize(five_sum_invariant(gen.dec));
            }
            return;
        } catch (const FourSumViolatedError&) {
            continue;
        }
    }
}
BENCHMARK(BM_five_sum_invariant);

}  // namespace

BENCHMARK_MAIN();
