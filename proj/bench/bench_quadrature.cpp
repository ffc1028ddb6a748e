#include "gl3/whittaker.hpp"

#include <benchmark/benchmark.h>

using namespace gl3;

namespace {

SpectralParameter bench_mu(int d) { return d >= 2 ? minimal_line_mu(d, 0.3) : SpectralParameter({2.0, 0.1}, {0.4, 0.0}, {-2.4, -0.1}); }

void BM_WStarSerial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const SpectralParameter mu = bench_mu(d);
    const ContourSpec c = default_contour(d, mu);
    for (auto _ : state) benchmark::DoNotOptimize(w_star_serial(d, 1.0, 1.0, mu, c));
}

void BM_WStarOpenMP(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const SpectralParameter mu = bench_mu(d);
    const ContourSpec c = default_contour(d, mu);
    for (auto _ : state) benchmark::DoNotOptimize(w_star(d, 1.0, 1.0, mu, c));
}

std::vector<std::array<double, 2>> grid() {
    std::vector<std::array<double, 2>> ys;
    for (double y1 : {0.5, 1.0, 1.5, 2.0})
        for (double y2 : {0.5, 1.0}) ys.push_back({y1, y2});
    return ys;
}

void BM_GridSerial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const SpectralParameter mu = bench_mu(d);
    const ContourSpec c = default_contour(d, mu);
    const auto ys = grid();
    for (auto _ : state) benchmark::DoNotOptimize(w_star_grid(d, ys, mu, c, false));
}

void BM_GridOpenMP(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const SpectralParameter mu = bench_mu(d);
    const ContourSpec c = default_contour(d, mu);
    const auto ys = grid();
    for (auto _ : state) benchmark::DoNotOptimize(w_star_grid(d, ys, mu, c, true));
}

}  // namespace

BENCHMARK(BM_WStarSerial)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WStarOpenMP)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOpenMP)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
