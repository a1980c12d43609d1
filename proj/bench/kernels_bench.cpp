// Serial reference kernels vs. the OpenMP kernels on desk- and VGG-sized
// layer shapes.

#include <benchmark/benchmark.h>

#include <vector>

#include "coughlab/nn/kernels.hpp"
#include "coughlab/rng.hpp"

using namespace coughlab;
using namespace coughlab::nn::kernels;

namespace {

std::vector<float> random_vec(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<float> v(n);
    for (auto& x : v) x = static_cast<float>(rng.uniform(-1.0, 1.0));
    return v;
}

ConvGeom geom(const benchmark::State& state) {
    ConvGeom g;
    g.in_c = static_cast<std::size_t>(state.range(0));
    g.in_h = g.in_w = static_cast<std::size_t>(state.range(1));
    g.out_c = static_cast<std::size_t>(state.range(2));
    g.k_h = g.k_w = 3;
    g.stride = 1;
    g.pad = 1;
    g.out_h = g.in_h;
    g.out_w = g.in_w;
    return g;
}

constexpr std::size_t kBatch = 16;

template <bool Parallel>
void BM_ConvForward(benchmark::State& state) {
    const auto g = geom(state);
    const auto x = random_vec(kBatch * g.in_c * g.in_plane(), 1);
    const auto w = random_vec(g.out_c * g.patch(), 2);
    const auto b = random_vec(g.out_c, 3);
    std::vector<float> y(kBatch * g.out_c * g.out_plane());
    for (auto _ : state) {
        if constexpr (Parallel) parallel::conv2d_forward(g, kBatch, x.data(), w.data(), b.data(), y.data());
        else serial::conv2d_forward(g, kBatch, x.data(), w.data(), b.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kBatch));
}

template <bool Parallel>
void BM_ConvBackward(benchmark::State& state) {
    const auto g = geom(state);
    const auto x = random_vec(kBatch * g.in_c * g.in_plane(), 1);
    const auto w = random_vec(g.out_c * g.patch(), 2);
    const auto dy = random_vec(kBatch * g.out_c * g.out_plane(), 3);
    std::vector<float> dw(w.size()), db(g.out_c), dx(x.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            parallel::conv2d_backward(g, kBatch, x.data(), w.data(), dy.data(), dw.data(), db.data(), dx.data());
        } else {
            serial::conv2d_backward(g, kBatch, x.data(), w.data(), dy.data(), dw.data(), db.data(), dx.data());
        }
        benchmark::DoNotOptimize(dx.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kBatch));
}

template <bool Parallel>
void BM_Dense(benchmark::State& state) {
    const auto in = static_cast<std::size_t>(state.range(0));
    const auto out = static_cast<std::size_t>(state.range(1));
    const auto x = random_vec(kBatch * in, 1);
    const auto w = random_vec(in * out, 2);
    const auto b = random_vec(out, 3);
    std::vector<float> y(kBatch * out);
    for (auto _ : state) {
        if constexpr (Parallel) parallel::dense_forward(kBatch, in, out, x.data(), w.data(), b.data(), y.data());
        else serial::dense_forward(kBatch, in, out, x.data(), w.data(), b.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * kBatch));
}

}  // namespace

// {in_c, size, out_c}
#define CONV_SHAPES Args({1, 16, 8})->Args({8, 8, 16})->Args({16, 32, 16})->Args({64, 56, 64})
BENCHMARK(BM_ConvForward<false>)->CONV_SHAPES->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConvForward<true>)->CONV_SHAPES->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConvBackward<false>)->CONV_SHAPES->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConvBackward<true>)->CONV_SHAPES->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Dense<false>)->Args({256, 64})->Args({4096, 512})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Dense<true>)->Args({256, 64})->Args({4096, 512})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
