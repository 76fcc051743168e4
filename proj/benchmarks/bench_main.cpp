#include <benchmark/benchmark.h>

#include "dlgbn/analysis.hpp"
#include "dlgbn/boolean_network.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/semantics.hpp"

namespace {

dlgbn::GroundProgram program_of_size(int atoms) {
    dlgbn::GeneratorConfig cfg;
    cfg.atoms = atoms;
    cfg.min_rules = atoms;
    cfg.max_rules = 2 * atoms;
    return dlgbn::generate_program(cfg, 12345);
}

void StablePartialModels(benchmark::State& state) {
    dlgbn::GroundProgram g = program_of_size(static_cast<int>(state.range(0)));
    dlgbn::Caps caps;
    for (auto _ : state) {
        auto models = dlgbn::stable_partial_models(g, caps);
        benchmark::DoNotOptimize(models);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(StablePartialModels)->DenseRange(4, 10, 2)->Complexity();

void TrapSpaces(benchmark::State& state) {
    dlgbn::BooleanNetwork f = dlgbn::encode(program_of_size(static_cast<int>(state.range(0))));
    dlgbn::Caps caps;
    for (auto _ : state) {
        auto spaces = dlgbn::trap_spaces(f, caps);
        benchmark::DoNotOptimize(spaces);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TrapSpaces)->DenseRange(4, 10, 2)->Complexity();

void StableTransitionGraph(benchmark::State& state) {
    dlgbn::GroundProgram g = program_of_size(static_cast<int>(state.range(0)));
    dlgbn::Caps caps;
    for (auto _ : state) {
        auto tg = dlgbn::stable_tg(g, caps);
        benchmark::DoNotOptimize(tg);
    }
}
BENCHMARK(StableTransitionGraph)->DenseRange(4, 12, 2);

void SimpleCycles(benchmark::State& state) {
    dlgbn::GroundProgram g = program_of_size(static_cast<int>(state.range(0)));
    dlgbn::SignedDigraph adg = dlgbn::atom_dependency_graph(g);
    for (auto _ : state) {
        auto cycles = dlgbn::enumerate_simple_cycles(adg);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(SimpleCycles)->DenseRange(4, 12, 2);

void TheoremSuite(benchmark::State& state) {
    dlgbn::GroundProgram g = program_of_size(static_cast<int>(state.range(0)));
    dlgbn::Caps caps;
    for (auto _ : state) {
        auto results = dlgbn::verify_theorems(g, caps);
        benchmark::DoNotOptimize(results);
    }
}
BENCHMARK(TheoremSuite)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
