#include <benchmark/benchmark.h>

#include "holoiso/domains.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "holoiso/kernels.hpp"

using namespace holoiso;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_VerifyGrid(benchmark::State& state) {
    const DiskIsometry iso = solve_germ(build_hessenberg_unitary(static_cast<int>(state.range(1)), 1));
    const auto grid = disk_grid(200, 0.95);
    for (auto _ : state) benchmark::DoNotOptimize(verify_grid(iso, grid, exec_of(state)).max_residual());
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_Sweep(benchmark::State& state) {
    const auto zetas = sweep_parameters(32, 1);
    const auto grid = disk_grid(50, 0.95);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(zetas, 2, grid, exec_of(state)).size());
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(zetas.size()));
}

void BM_Composite(benchmark::State& state) {
    const DiskIsometry iso = family_map(0.3, 2);
    const auto grid = disk_grid(200, 0.95);
    for (auto _ : state) {
        benchmark::DoNotOptimize(composite_residual(DomainSpec::type_II(5), &iso, grid, exec_of(state)));
    }
}

}  // namespace

// range(0): 0 serial, 1 OpenMP.
BENCHMARK(BM_VerifyGrid)->ArgsProduct({{0, 1}, {2, 4, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Composite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
