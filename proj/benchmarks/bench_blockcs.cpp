#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "blockcs/analysis.hpp"
#include "blockcs/compose.hpp"
#include "blockcs/devore.hpp"
#include "blockcs/planner.hpp"
#include "blockcs/ternary.hpp"

namespace {

void BM_DevoreMatrix(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto m = bcs::devore_matrix({p, 2});
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_DevoreMatrix)->Arg(5)->Arg(7)->Arg(13);

void BM_Compose(benchmark::State& state) {
    const auto a = bcs::devore_matrix({5, 1});
    const auto b = bcs::devore_matrix({7, 1});
    for (auto _ : state) {
        auto c = bcs::compose(a, b, {5});
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Compose);

void BM_OverlapScan(benchmark::State& state) {
    const auto c = bcs::compose(bcs::devore_matrix({5, 1}), bcs::devore_matrix({7, 1}), {5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bcs::max_overlap(c));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(c.column_count() *
                                                      (c.column_count() - 1) / 2));
}
BENCHMARK(BM_OverlapScan);

void BM_SignFlip(benchmark::State& state) {
    const auto m = bcs::execute_plan(bcs::plan_row_size(60));
    for (auto _ : state) {
        auto t = bcs::sign_flip(m);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SignFlip);

void BM_OmpRecover2Sparse(benchmark::State& state) {
    const auto m = bcs::compose(bcs::devore_matrix({5, 1}), bcs::devore_matrix({7, 1}), {5});
    const auto dense = bcs::to_dense_columns(m);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, dense.cols - 1);
    for (auto _ : state) {
        state.PauseTiming();
        std::size_t j1 = pick(rng), j2 = pick(rng);
        while (j2 == j1) j2 = pick(rng);
        std::vector<double> y(dense.rows, 0.0);
        for (std::size_t row = 0; row < dense.rows; ++row)
            y[row] = dense.data[j1 * dense.rows + row] - dense.data[j2 * dense.rows + row];
        state.ResumeTiming();
        benchmark::DoNotOptimize(bcs::omp_recover(dense, y, 2));
    }
}
BENCHMARK(BM_OmpRecover2Sparse);

} // namespace

BENCHMARK_MAIN();
