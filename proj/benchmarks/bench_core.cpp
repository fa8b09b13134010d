#include <benchmark/benchmark.h>

#include "absorblab/classifier.hpp"
#include "absorblab/theorems.hpp"

using namespace absorblab;

namespace {

FiniteRing make_ring(int kind) {
    switch (kind) {
        case 0: return build_ring(RingSpec::zn(24));
        case 1: return build_ring(RingSpec::product({RingSpec::zn(8), RingSpec::zn(8)}));
        default:
            return build_ring(
                RingSpec::product({RingSpec::zn(2), RingSpec::zn(4), RingSpec::zn(8)}));
    }
}

}  // namespace

static void BM_BuildRing(benchmark::State& state) {
    for (auto _ : state) {
        FiniteRing R = make_ring(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(R.order());
    }
}
BENCHMARK(BM_BuildRing)->Arg(0)->Arg(1)->Arg(2);

static void BM_EnumerateIdeals(benchmark::State& state) {
    FiniteRing R = make_ring(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto lat = enumerate_ideals(R);
        benchmark::DoNotOptimize(lat.size());
    }
}
BENCHMARK(BM_EnumerateIdeals)->Arg(0)->Arg(1)->Arg(2);

static void BM_Radical(benchmark::State& state) {
    FiniteRing R = make_ring(static_cast<int>(state.range(0)));
    std::vector<Ideal> lat = enumerate_ideals(R);
    for (auto _ : state) {
        for (const Ideal& I : lat) benchmark::DoNotOptimize(radical(R, I).size());
    }
}
BENCHMARK(BM_Radical)->Arg(0)->Arg(1)->Arg(2);

static void BM_TwoAbsorbingQuasiPrimary(benchmark::State& state) {
    FiniteRing R = make_ring(static_cast<int>(state.range(0)));
    std::vector<Ideal> lat = enumerate_ideals(R);
    for (auto _ : state) {
        for (const Ideal& I : lat) {
            if (!I.proper(R)) continue;
            benchmark::DoNotOptimize(is_phi_2aqp(R, I, PhiSpec::empty()).holds);
        }
    }
}
BENCHMARK(BM_TwoAbsorbingQuasiPrimary)->Arg(0)->Arg(1)->Arg(2);

static void BM_Localize(benchmark::State& state) {
    FiniteRing R = build_ring(RingSpec::zn(24));
    for (auto _ : state) {
        auto [loc, hom] = localize(R, {4});
        benchmark::DoNotOptimize(loc.order() + hom.size());
    }
}
BENCHMARK(BM_Localize);

static void BM_VerifyT2SmallCorpus(benchmark::State& state) {
    std::vector<FiniteRing> corpus = {
        build_ring(RingSpec::zn(12)),
        build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(6)})),
        build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(2)}))};
    VerifyOptions opts;
    opts.n_max = 3;
    for (auto _ : state) {
        VerificationReport rep = verify("T-T2", corpus, opts);
        benchmark::DoNotOptimize(rep.instances_checked);
    }
}
BENCHMARK(BM_VerifyT2SmallCorpus);

BENCHMARK_MAIN();
