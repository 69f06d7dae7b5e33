#include <benchmark/benchmark.h>

#include "plumb/cycles.hpp"
#include "plumb/graph.hpp"
#include "plumb/graph_io.hpp"
#include "plumb/lattice.hpp"
#include "plumb/verdicts.hpp"

namespace {

void BM_fundamental_cycle_yp(benchmark::State& state) {
    plumb::PlumbingGraph g = plumb::make_yp(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::fundamental_cycle(g));
    }
}
BENCHMARK(BM_fundamental_cycle_yp)->Arg(5)->Arg(20)->Arg(50);

void BM_brute_force_oracle(benchmark::State& state) {
    plumb::PlumbingGraph g = plumb::make_yp(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::brute_force_min_cycle(g, 8));
    }
}
BENCHMARK(BM_brute_force_oracle)->Arg(2)->Arg(4);

void BM_negative_definite(benchmark::State& state) {
    plumb::IntMatrix m = plumb::intersection_matrix(plumb::make_yp(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::is_negative_definite(m));
    }
}
BENCHMARK(BM_negative_definite)->Arg(5)->Arg(20)->Arg(50);

void BM_smith_normal_form(benchmark::State& state) {
    plumb::IntMatrix m = plumb::intersection_matrix(plumb::make_yp(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::smith_normal_form(m));
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(5)->Arg(10)->Arg(20);

void BM_parse_roundtrip(benchmark::State& state) {
    std::string doc = plumb::emit_graph(plumb::make_yp(20), plumb::GraphFormat::dsl);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::parse_graph(doc));
    }
}
BENCHMARK(BM_parse_roundtrip);

void BM_analyze_yp(benchmark::State& state) {
    plumb::PlumbingGraph g = plumb::make_yp(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::analyze(g));
    }
}
BENCHMARK(BM_analyze_yp)->Arg(2)->Arg(10);

void BM_enumerate_small_stars(benchmark::State& state) {
    plumb::SearchSpec spec;
    spec.max_vertices = 5;
    spec.euler_min = -3;
    spec.euler_max = -1;
    spec.predicate = "rational";
    spec.cap = 100'000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(plumb::enumerate(spec));
    }
}
BENCHMARK(BM_enumerate_small_stars);

} // namespace

BENCHMARK_MAIN();
