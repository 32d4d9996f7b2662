#include <benchmark/benchmark.h>

#include "hzsums/direct_sums.hpp"
#include "hzsums/special.hpp"
#include "hzsums/transforms.hpp"

namespace {

hzs::SumSpec lattice_spec(double a) {
    hzs::SumSpec spec;
    spec.family = hzs::Family::GENERAL_AB;
    spec.s = 4.0;
    spec.a = a;
    spec.b = 1.0;
    spec.tol = hzs::Tolerance{1e-8};
    return spec;
}

// a is passed as 1/a in the benchmark argument.
void BM_DirectLattice(benchmark::State& state) {
    const auto spec = lattice_spec(1.0 / static_cast<double>(state.range(0)));
    std::int64_t terms = 0;
    for (auto _ : state) {
        const auto r = hzs::eval_direct(spec);
        benchmark::DoNotOptimize(r.value);
        terms = r.terms_used;
    }
    state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_DirectLattice)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_TransformedLattice(benchmark::State& state) {
    const auto spec = lattice_spec(1.0 / static_cast<double>(state.range(0)));
    std::int64_t terms = 0;
    for (auto _ : state) {
        const auto r = hzs::eval_transformed(spec);
        benchmark::DoNotOptimize(r.value);
        terms = r.terms_used;
    }
    state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_TransformedLattice)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_HurwitzZeta(benchmark::State& state) {
    double alpha = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hzs::hurwitz_zeta(3.5, alpha));
        alpha = alpha < 100.0 ? alpha * 1.1 : 0.5;
    }
}
BENCHMARK(BM_HurwitzZeta);

void BM_LerchPhi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hzs::lerch_phi(0.5, 3.0, 2.0));
}
BENCHMARK(BM_LerchPhi);

}  // namespace

BENCHMARK_MAIN();
