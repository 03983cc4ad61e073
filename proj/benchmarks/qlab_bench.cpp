#include <benchmark/benchmark.h>

#include "qlab/builders.hpp"
#include "qlab/completion.hpp"
#include "qlab/qset.hpp"
#include "qlab/sqleq.hpp"
#include "qlab/suite.hpp"
#include "qlab/topos.hpp"

using namespace qlab;

namespace {

void bm_quantale_create(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lukasiewicz_chain(n));
}
BENCHMARK(bm_quantale_create)->Arg(4)->Arg(8)->Arg(16);

void bm_refinement_build(benchmark::State& state) {
    Quantale q = boolean_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(SqleqPoset::build(q));
}
BENCHMARK(bm_refinement_build)->Arg(2)->Arg(3)->Arg(4);

void bm_arrow_quantaloid(benchmark::State& state) {
    Quantale q = lukasiewicz_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(DQ::build(q));
}
BENCHMARK(bm_arrow_quantaloid)->Arg(3)->Arg(5)->Arg(7);

void bm_singleton_enumeration(benchmark::State& state) {
    auto dq = DQ::build(lukasiewicz_chain(static_cast<int>(state.range(0))));
    const Quantale& q = dq->base();
    // a three-element table that stays valid on every chain: pairwise meets
    Elem h = 1, t = q.top();
    QSet x = QSet::create(dq, "probe", {"a", "b", "c"},
                          {h, h, 0, h, t, h, 0, h, t});
    for (auto _ : state) benchmark::DoNotOptimize(singletons_by_conditions(x));
}
BENCHMARK(bm_singleton_enumeration)->Arg(3)->Arg(4)->Arg(6);

void bm_adjoint_route(benchmark::State& state) {
    auto dq = DQ::build(lukasiewicz_chain(static_cast<int>(state.range(0))));
    const Quantale& q = dq->base();
    Elem h = 1, t = q.top();
    QSet x = QSet::create(dq, "probe", {"a", "b", "c"},
                          {h, h, 0, h, t, h, 0, h, t});
    for (auto _ : state) benchmark::DoNotOptimize(singletons_by_adjoint(x));
}
BENCHMARK(bm_adjoint_route)->Arg(3)->Arg(4);

void bm_completion(benchmark::State& state) {
    auto dq = DQ::build(lukasiewicz_chain(static_cast<int>(state.range(0))));
    QSet z = qset_meet(dq);
    for (auto _ : state) benchmark::DoNotOptimize(cauchy_completion(z));
}
BENCHMARK(bm_completion)->Arg(3)->Arg(4)->Arg(5);

void bm_witness_chain(benchmark::State& state) {
    auto dq = DQ::build(lukasiewicz_chain(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(topos_witness(dq));
}
BENCHMARK(bm_witness_chain)->Arg(3)->Arg(4);

void bm_full_suite(benchmark::State& state) {
    SuiteConfig cfg;
    cfg.corpus = {"lukasiewicz(3)"};
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(bm_full_suite);

}  // namespace

BENCHMARK_MAIN();
