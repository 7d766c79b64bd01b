// bench.cpp - timings for the hot paths: gcd, word action, H data, ansatz, classify
#include "a5/classifier.hpp"

#include <benchmark/benchmark.h>

using namespace a5;

namespace {

Poly product_poly(int n)
{
    Poly p(Rational(1));
    for (int k = 1; k <= n; ++k) p = p * Poly({make_rational(-k, k + 1), Rational(1)});
    return p;
}

const Solution& long_image()
{
    static const Solution s =
        act_solution_word(seed(SeedKind::B, make_rational(3, 11)), parse_word("s0 s1 s3 s2 pi s4 s0 s5"));
    return s;
}

} // namespace

static void BM_PolyGcd(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Poly a = product_poly(n) * Poly({Rational(5), Rational(0), Rational(1)});
    const Poly b = product_poly(n) * Poly({Rational(-7), Rational(1)});
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(16);

static void BM_ActSolutionWord(benchmark::State& state)
{
    const Solution s = seed(SeedKind::A1, make_rational(2, 7));
    const TransformWord w = parse_word("s0 s1 s2 pi s3 s4 s5 T2");
    for (auto _ : state) benchmark::DoNotOptimize(act_solution_word(s, w));
}
BENCHMARK(BM_ActSolutionWord);

static void BM_HamiltonianData(benchmark::State& state)
{
    const Solution& s = long_image();
    for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_data(s));
}
BENCHMARK(BM_HamiltonianData);

static void BM_Ansatz(benchmark::State& state)
{
    const Params p = long_image().params;
    const InfinityType ty = infinity_type(long_image());
    for (auto _ : state) benchmark::DoNotOptimize(expand_solution_ansatz(p, ty, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Ansatz)->Arg(4)->Arg(10);

static void BM_Classify(benchmark::State& state)
{
    const Params p = long_image().params;
    for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_ClassifyNone(benchmark::State& state)
{
    const Params p({make_rational(1, 5), make_rational(1, 5), make_rational(1, 5), make_rational(1, 5),
                    make_rational(1, 5), Rational(0)});
    for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyNone)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
