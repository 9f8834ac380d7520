#include <benchmark/benchmark.h>

#include <charrel/dold.hpp>
#include <charrel/gf2.hpp>
#include <charrel/obstruct.hpp>
#include <charrel/parity.hpp>

#include <random>

// Microbenchmarks for the hot paths: bit-level parity, packed row
// reduction, the closed-form relation engine at sweep-sized inputs, and a
// full verdict. Run with --benchmark_min_time=... as needed; none of these
// allocate per iteration beyond what the measured call itself does.

namespace {

using namespace charrel;

void bm_binom_parity(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uint64_t acc = 0;
    for (auto _ : state) {
        const std::uint64_t b = rng() & 0xffff, a = rng() & 0xffff;
        acc += std::uint64_t(binom_parity(b, std::int64_t(a)));
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_binom_parity);

void bm_bitvec_xor_shifted(benchmark::State& state) {
    const std::size_t bits = std::size_t(state.range(0));
    BitVec a(bits), b(bits);
    for (std::size_t i = 0; i < bits; i += 3) b.set(i);
    std::size_t shift = 1;
    for (auto _ : state) {
        a.xor_in_shifted(b, shift % 61 + 1);
        ++shift;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bm_bitvec_xor_shifted)->Arg(256)->Arg(4096);

void bm_matrix_insert(benchmark::State& state) {
    const std::size_t cols = std::size_t(state.range(0));
    std::mt19937_64 rng(11);
    for (auto _ : state) {
        Gf2Matrix m(cols);
        for (std::size_t r = 0; r < cols; ++r) {
            BitVec row(cols);
            for (std::size_t w = 0; w < cols; w += 64)
                for (std::size_t i = w; i < std::min(w + 64, cols); ++i)
                    if (rng() & 1) row.set(i);
            m.insert(std::move(row));
        }
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(bm_matrix_insert)->Arg(64)->Arg(512);

void bm_relation_image(benchmark::State& state) {
    const unsigned k = unsigned(state.range(0));
    for (auto _ : state) {
        const QuotientResult q = relation_image(256, k, {});
        benchmark::DoNotOptimize(q.rank_with_unit);
    }
}
BENCHMARK(bm_relation_image)->Arg(1)->Arg(3);

void bm_rp_verdict(benchmark::State& state) {
    for (auto _ : state) {
        const VerdictSet v = rp_verdict(13, 12);
        benchmark::DoNotOptimize(v.verdicts.size());
    }
}
BENCHMARK(bm_rp_verdict);

void bm_minimal_threshold(benchmark::State& state) {
    const OneGenRing ring = OneGenRing::rp(unsigned(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_threshold(ring));
}
BENCHMARK(bm_minimal_threshold)->Arg(64)->Arg(255);

void bm_sweep_column(benchmark::State& state) {
    for (auto _ : state) {
        SweepOptions opts;
        opts.n_max = unsigned(state.range(0));
        opts.ks = {7};
        const SweepResult res = run_sweep(opts);
        benchmark::DoNotOptimize(res.records.size());
    }
}
BENCHMARK(bm_sweep_column)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
