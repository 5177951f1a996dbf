#include <benchmark/benchmark.h>

#include <random>

#include "crwb/cr_algebra.hpp"
#include "crwb/model_verify.hpp"

namespace {

crwb::Matrix random_matrix(std::size_t n) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> val(-6, 6);
    crwb::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = crwb::GaussianRational(crwb::Rational(val(rng)), crwb::Rational(val(rng)));
    return m;
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
    crwb::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = crwb::rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildFamily(benchmark::State& state) {
    long k = state.range(0);
    for (auto _ : state) {
        crwb::FamilyInstance fam = crwb::build_family(k);
        benchmark::DoNotOptimize(fam.g.dim());
    }
}
BENCHMARK(BM_BuildFamily)->Arg(1)->Arg(4)->Arg(8);

static void BM_FreemanSequence(benchmark::State& state) {
    crwb::CRAlgebra a = crwb::to_cr_algebra(crwb::build_family(state.range(0)));
    for (auto _ : state) {
        crwb::FreemanSequence seq = crwb::freeman_sequence(a);
        benchmark::DoNotOptimize(seq.order);
    }
}
BENCHMARK(BM_FreemanSequence)->Arg(2)->Arg(4)->Arg(8);

static void BM_LeviOrderOne(benchmark::State& state) {
    crwb::CRAlgebra a = crwb::to_cr_algebra(crwb::build_family(state.range(0)));
    for (auto _ : state) {
        crwb::LeviMatrix lm = crwb::levi_matrix(a, 1);
        benchmark::DoNotOptimize(lm.rank());
    }
}
BENCHMARK(BM_LeviOrderOne)->Arg(2)->Arg(4)->Arg(8);

static void BM_PartialComplexStructure(benchmark::State& state) {
    crwb::CRAlgebra a = crwb::to_cr_algebra(crwb::build_family(state.range(0)));
    for (auto _ : state) {
        crwb::PartialComplexStructure pcs = crwb::partial_complex_structure(a);
        benchmark::DoNotOptimize(pcs.basis.size());
    }
}
BENCHMARK(BM_PartialComplexStructure)->Arg(2)->Arg(4)->Arg(6);

static void BM_VerifySuite(benchmark::State& state) {
    long k = state.range(0);
    for (auto _ : state) {
        crwb::SuiteReport rep = crwb::verify_abelian(k);
        benchmark::DoNotOptimize(rep.items.size());
    }
}
BENCHMARK(BM_VerifySuite)->Arg(1)->Arg(3)->Arg(5);

static void BM_IsoCertificate(benchmark::State& state) {
    long k = state.range(0);
    for (auto _ : state) {
        crwb::SuiteReport rep = crwb::iso_certificate(k);
        benchmark::DoNotOptimize(rep.items.size());
    }
}
BENCHMARK(BM_IsoCertificate)->Arg(1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
