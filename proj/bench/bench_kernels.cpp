#include <benchmark/benchmark.h>

#include "mcc/grassmannian.hpp"
#include "mcc/tilting.hpp"

using namespace mcc;

namespace {

const std::pair<Dynkin, int> kCases[] = {{Dynkin::E6, 2}, {Dynkin::E7, 2}, {Dynkin::E8, 1}};

void BM_compat(benchmark::State& st) {
    auto [t, m] = kCases[st.range(0)];
    auto spec = make_category(t, m);
    bool parallel = st.range(1);
    for (auto _ : st) {
        auto cm = parallel ? compat_matrix_parallel(spec) : compat_matrix_serial(spec);
        benchmark::DoNotOptimize(cm);
    }
    st.SetLabel(to_string(t) + " m=" + std::to_string(m) + (parallel ? " parallel" : " serial"));
}

void BM_enumerate(benchmark::State& st) {
    auto [t, m] = kCases[st.range(0)];
    auto ctx = make_context(t, m);
    Exec exec = st.range(1) ? Exec::Parallel : Exec::Serial;
    std::uint64_t n = 0;
    for (auto _ : st) n = enumerate_clusters(ctx.graph, ctx.rank, nullptr, exec);
    st.counters["clusters"] = static_cast<double>(n);
    st.SetLabel(to_string(t) + " m=" + std::to_string(m) + (st.range(1) ? " parallel" : " serial"));
}

void BM_closure(benchmark::State& st) {
    Dynkin t = st.range(0) ? Dynkin::E8 : Dynkin::E7;
    auto seed = initial_seed(t, generic_matrices(3, 8, 2, 1));
    for (auto _ : st) {
        auto cl = exchange_closure(seed, st.range(1));
        benchmark::DoNotOptimize(cl);
    }
    st.SetLabel(to_string(t) + (st.range(1) ? " parallel" : " serial"));
}

}  // namespace

BENCHMARK(BM_compat)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
