// Serial against OpenMP-parallel kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "explograph/affine.hpp"
#include "explograph/gluing.hpp"

using namespace explograph;

namespace {

const CountingProblem& problem(std::size_t degree, std::size_t genus) {
    static std::map<std::pair<std::size_t, std::size_t>, CountingProblem> cache;
    auto key = std::make_pair(degree, genus);
    if (!cache.count(key)) cache.emplace(key, random_generic_problem(degree, genus, 1));
    return cache.at(key);
}

void enumerate(benchmark::State& state, Execution ex) {
    const auto& p = problem(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_rigid_curves(p, ex));
    state.counters["threads"] = ex == Execution::serial ? 1 : omp_get_max_threads();
}

void BM_EnumerateSerial(benchmark::State& state) { enumerate(state, Execution::serial); }
void BM_EnumerateParallel(benchmark::State& state) { enumerate(state, Execution::parallel); }

// A 3-cube cut by the planes |x|+|y|+|z| <= 2: 14 facets.
Polytope cut_cube() {
    std::vector<AffineConstraint> cs;
    for (std::size_t i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            IVec a(3, 0);
            a[i] = -s;
            cs.emplace_back(a, Rational(1));
        }
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) cs.emplace_back(IVec{-sx, -sy, -sz}, Rational(2));
    return Polytope(3, std::move(cs));
}

void BM_PolytopeFaces(benchmark::State& state) {
    const auto p = cut_cube();
    const int threads = state.range(0) ? static_cast<int>(state.range(0)) : omp_get_max_threads();
    const int saved = omp_get_max_threads();
    omp_set_num_threads(threads);
    for (auto _ : state) benchmark::DoNotOptimize(polytope_faces(p));
    omp_set_num_threads(saved);
    state.counters["threads"] = threads;
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({2, 0})->Args({3, 0})->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_EnumerateParallel)->Args({2, 0})->Args({3, 0})->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_PolytopeFaces)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
