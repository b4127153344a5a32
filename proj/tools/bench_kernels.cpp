#include <benchmark/benchmark.h>

#include "twosq/progressions.hpp"
#include "twosq/sieve.hpp"
#include "twosq/singular.hpp"

using namespace twosq;

static void BM_sieve_segment(benchmark::State& st) {
    const std::uint64_t lo = 1'000'000'000, hi = lo + (std::uint64_t(1) << 24) - 1;
    for (auto _ : st) benchmark::DoNotOptimize(sieve_segment(lo, hi).words.data());
    st.SetItemsProcessed(st.iterations() * (hi - lo + 1));
}
static void BM_sieve_segment_serial(benchmark::State& st) {
    const std::uint64_t lo = 1'000'000'000, hi = lo + (std::uint64_t(1) << 24) - 1;
    for (auto _ : st) benchmark::DoNotOptimize(sieve_segment_serial(lo, hi).words.data());
    st.SetItemsProcessed(st.iterations() * (hi - lo + 1));
}

static void BM_count(benchmark::State& st) {
    SieveOptions o;
    o.segment_bits = std::uint64_t(1) << 22;
    for (auto _ : st) benchmark::DoNotOptimize(count_up_to(100'000'000, o));
}
static void BM_count_serial(benchmark::State& st) {
    SieveOptions o;
    o.segment_bits = std::uint64_t(1) << 22;
    for (auto _ : st) benchmark::DoNotOptimize(count_up_to_serial(100'000'000, o));
}

static void BM_tuples(benchmark::State& st) {
    SieveOptions o;
    o.segment_bits = std::uint64_t(1) << 22;
    for (auto _ : st) benchmark::DoNotOptimize(count_consecutive_tuples(50'000'000, 5, 3, o).total());
}
static void BM_tuples_serial(benchmark::State& st) {
    SieveOptions o;
    o.segment_bits = std::uint64_t(1) << 22;
    for (auto _ : st) benchmark::DoNotOptimize(count_consecutive_tuples_serial(50'000'000, 5, 3, o).total());
}

static void BM_weighted_sum(benchmark::State& st) {
    WeightedSumSpec s;
    s.q = 5;
    s.H = 1e4;
    for (auto _ : st) benchmark::DoNotOptimize(weighted_sum(s));
}
static void BM_weighted_sum_serial(benchmark::State& st) {
    WeightedSumSpec s;
    s.q = 5;
    s.H = 1e4;
    for (auto _ : st) benchmark::DoNotOptimize(weighted_sum_serial(s));
}

static void BM_local_density(benchmark::State& st) {
    TupleConfig D({0, 2, 6});
    for (auto _ : st) benchmark::DoNotOptimize(local_density(3, D, 12));
}
static void BM_local_density_serial(benchmark::State& st) {
    TupleConfig D({0, 2, 6});
    for (auto _ : st) benchmark::DoNotOptimize(local_density_serial(3, D, 12));
}

BENCHMARK(BM_sieve_segment)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_segment_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tuples)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tuples_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weighted_sum)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weighted_sum_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_local_density)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_local_density_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
