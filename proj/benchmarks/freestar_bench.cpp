#include <benchmark/benchmark.h>

#include <random>

#include "freestar/growth.hpp"
#include "freestar/homology.hpp"
#include "freestar/resolution.hpp"
#include "freestar/rewrite.hpp"

namespace {

freestar::Word random_binary(std::mt19937& rng, std::size_t len) {
    freestar::Word w;
    for (std::size_t i = 0; i < len; ++i) w = w.appended(freestar::Letter(0, rng() & 1));
    return w;
}

void BM_normal_form(benchmark::State& state) {
    const auto sys = freestar::RewritingSystem::r1();
    std::mt19937 rng(1);
    std::vector<freestar::Word> words;
    for (int i = 0; i < 256; ++i) {
        const freestar::Word w = random_binary(rng, state.range(0));
        words.push_back(w + w.star() + w);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        // fresh system per batch so the cache does not absorb the work
        const auto fresh = freestar::RewritingSystem::r1();
        benchmark::DoNotOptimize(fresh.normal_form(words[i++ % words.size()]));
    }
}
BENCHMARK(BM_normal_form)->Arg(8)->Arg(16)->Arg(32);

void BM_sphere_count_enumerate(benchmark::State& state) {
    const auto star = freestar::AvoidFamily::star(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            freestar::sphere_count_enumerate(star, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_sphere_count_enumerate)->Arg(14)->Arg(18)->Arg(22);

void BM_sphere_count_dp(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    freestar::DistinctPartTable table(n);
    for (auto _ : state) benchmark::DoNotOptimize(freestar::sphere_count_dp(n, table));
}
BENCHMARK(BM_sphere_count_dp)->Arg(100)->Arg(300)->Arg(900);

void BM_homology_report(benchmark::State& state) {
    const unsigned n_trunc = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(freestar::homology_report(n_trunc));
}
BENCHMARK(BM_homology_report)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    const std::size_t n = state.range(0);
    freestar::IntegerMatrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) m.set(i, j, entry(rng));
    for (auto _ : state) benchmark::DoNotOptimize(freestar::smith_normal_form(m));
}
BENCHMARK(BM_smith_normal_form)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
