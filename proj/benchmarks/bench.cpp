#include <benchmark/benchmark.h>

#include "lamlab/beta.hpp"
#include "lamlab/explicit_subst.hpp"
#include "lamlab/syntax.hpp"

using namespace lamlab;

namespace {

// Church numeral exponentiation gives a compact term with heavy reduction work.
TermPtr church_power() {
    return parse_named("(\\x y z. x (y z)) ((\\x.\\y.\\z. x y z) (\\x y. x (x (x y))))");
}

void BM_Normalize(benchmark::State& state) {
    TermPtr t = church_power();
    RelationId rel = static_cast<RelationId>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize(t, rel, Strategy::LeftmostOutermost, 500));
}
BENCHMARK(BM_Normalize)->DenseRange(0, 4);

void BM_SNormalize(benchmark::State& state) {
    ESTermPtr t = parse_es("(\\ \\ 5 2 1)(\\ 3 1)");
    ESTermPtr start = es_apply(t, {}, RuleId::SigmaGen);
    for (auto _ : state) benchmark::DoNotOptimize(s_normalize(start, 100000));
}
BENCHMARK(BM_SNormalize);

void BM_AlphaEq(benchmark::State& state) {
    TermPtr a = parse_named("\\x y z. x (y (z (x y z))) (\\x'. x' x y)");
    TermPtr b = parse_named("\\y z x. y (z (x (y z x))) (\\x'. x' y z)");
    for (auto _ : state) benchmark::DoNotOptimize(alpha_eq(a, b));
}
BENCHMARK(BM_AlphaEq);

void BM_ParsePrint(benchmark::State& state) {
    std::string s = print_named(church_power());
    for (auto _ : state) benchmark::DoNotOptimize(print_named(parse_named(s)));
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
