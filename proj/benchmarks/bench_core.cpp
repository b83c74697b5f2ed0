// Microbenchmarks for the layers that dominate end-to-end runtime: field
// arithmetic, sparse polynomial products, component restriction, the
// constraint solver, rank computation, pullback factorization and Groebner
// bases.  Run manually (not wired into ctest):
//   build/benchmarks/bench_core [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "vsch/ellp.hpp"
#include "vsch/gb.hpp"
#include "vsch/surfaces.hpp"
#include "vsch/synth.hpp"
#include "vsch/theta.hpp"
#include "vsch/verify.hpp"

using namespace vsch;

namespace {

KummerSurface sample_surface(uint32_t p, int ext, uint64_t seed) {
    const FieldDescriptor* f = FieldDescriptor::extension(p, ext);
    Rng rng(seed);
    std::optional<KummerSurface> s = random_kummer(f, rng);
    return *s;  // seeded draws on these fields always succeed
}

void BM_FieldMul(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(7, 4);
    Rng rng(1);
    std::vector<FieldElem> xs;
    for (int i = 0; i < 256; ++i) xs.push_back(f->random_element(rng));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i & 255] * xs[(i + 1) & 255]);
        ++i;
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(7, 4);
    Rng rng(2);
    std::vector<FieldElem> xs;
    while (xs.size() < 256) {
        FieldElem x = f->random_element(rng);
        if (!x.is_zero()) xs.push_back(x);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i & 255].inverse());
        ++i;
    }
}
BENCHMARK(BM_FieldInverse);

void BM_GenericFieldMul(benchmark::State& state) {
    const KummerSurface s = generic_kummer(5);
    const FieldElem a = s.k00 + s.k01 * s.k10;
    const FieldElem b = s.k11 * s.k00 - s.k01;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GenericFieldMul);

void BM_QuarticProduct(benchmark::State& state) {
    const KummerSurface s = sample_surface(5, 2, 11);
    const MPoly k = kummer_equation(s);
    for (auto _ : state) benchmark::DoNotOptimize(k * k);
}
BENCHMARK(BM_QuarticProduct);

void BM_EigenRestrictQuartic(benchmark::State& state) {
    const KummerSurface s = sample_surface(7, 2, 12);
    const MPoly k = kummer_equation(s);
    const std::vector<TauLift> lifts = all_components(2);
    for (auto _ : state)
        for (const TauLift& lift : lifts)
            benchmark::DoNotOptimize(eigen_restrict(k, 2, lift));
}
BENCHMARK(BM_EigenRestrictQuartic);

void BM_InvariantBasisG3P7(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(3, 7, f));
}
BENCHMARK(BM_InvariantBasisG3P7);

template <uint32_t P>
void BM_SynthFinite(benchmark::State& state) {
    const KummerSurface s = sample_surface(P, 2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(synth_verschiebung(s));
}
BENCHMARK(BM_SynthFinite<3>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SynthFinite<5>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SynthFinite<7>)->Unit(benchmark::kMillisecond);

void BM_SynthGenericP3(benchmark::State& state) {
    const KummerSurface s = generic_kummer(3);
    for (auto _ : state) benchmark::DoNotOptimize(synth_verschiebung(s));
}
BENCHMARK(BM_SynthGenericP3)->Unit(benchmark::kMillisecond);

void BM_RhatRankG2P7(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rhat_rank(2, 7, f));
}
BENCHMARK(BM_RhatRankG2P7)->Unit(benchmark::kMillisecond);

void BM_RhatRankG3P5(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rhat_rank(3, 5, f));
}
BENCHMARK(BM_RhatRankG3P5)->Unit(benchmark::kMillisecond);

void BM_PullbackFactorizationP3(benchmark::State& state) {
    const KummerSurface s = sample_surface(3, 4, 14);
    const VerschiebungMap m = synth_verschiebung(s);
    for (auto _ : state) {
        Rng rng(15);
        benchmark::DoNotOptimize(pullback_factorization(m, s, rng));
    }
}
BENCHMARK(BM_PullbackFactorizationP3)->Unit(benchmark::kMillisecond);

void BM_GroebnerNodeIdeal(benchmark::State& state) {
    const KummerSurface s = sample_surface(3, 2, 16);
    const std::vector<MPoly> gens = singular_locus_ideal(kummer_equation(s));
    for (auto _ : state) {
        benchmark::DoNotOptimize(groebner_basis(saturate_irrelevant(gens)));
    }
}
BENCHMARK(BM_GroebnerNodeIdeal)->Unit(benchmark::kMillisecond);

void BM_MulByPOracle(benchmark::State& state) {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 2);
    EllipticModel e{f, f->element_at(7)};
    for (auto _ : state) benchmark::DoNotOptimize(verify_mul_by_p(e));
}
BENCHMARK(BM_MulByPOracle)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
