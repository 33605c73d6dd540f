// Microbenchmarks for the hot paths: series multiplication, multisum
// enumeration, cyclotomic evaluation, and full strange checks.

#include <benchmark/benchmark.h>

#include "qstrange/identities.hpp"
#include "qstrange/strange.hpp"

using namespace qstrange;

namespace {

static void BM_QSeriesMul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    QSeries a = poch(Monomial(Rational(1), 1, 1), 10, 1, order);
    QSeries b = poch_inv(Monomial(Rational(1), 2, 1), 12, 1, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QSeriesMul)->Arg(20)->Arg(40);

static void BM_InvertUnit(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    QSeries f = poch(Monomial(Rational(-1), 1, 1), 15, 1, order);
    for (auto _ : state) benchmark::DoNotOptimize(f.invert_unit());
}
BENCHMARK(BM_InvertUnit)->Arg(20)->Arg(40);

static void BM_ClosedBeta(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_beta(Family::Hikami, 3, 1, 4, 20));
}
BENCHMARK(BM_ClosedBeta);

static void BM_VerifyPairBase(benchmark::State& state) {
    for (auto _ : state) {
        BaileyPair p = base_pair(BasePair::Zagier);
        benchmark::DoNotOptimize(verify_pair(p, 6, 25));
    }
}
BENCHMARK(BM_VerifyPairBase);

static void BM_EvalTerminatingSum(benchmark::State& state) {
    MultisumSpec spec = strange_lhs_spec(Family::Hikami, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eval_terminating_sum(spec, 3, 4));
}
BENCHMARK(BM_EvalTerminatingSum);

static void BM_StrangeCheck(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(strange_check(Family::Zagier, 1, 0, 3, 4));
}
BENCHMARK(BM_StrangeCheck);

static void BM_AndrewsGordon(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identity("andrews_gordon", 3, 2, 30));
}
BENCHMARK(BM_AndrewsGordon);

} // namespace

BENCHMARK_MAIN();
