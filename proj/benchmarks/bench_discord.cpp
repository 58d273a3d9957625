#include <benchmark/benchmark.h>

#include "xgd/fano_bloch.hpp"
#include "xgd/geodiscord.hpp"
#include "xgd/monogamy.hpp"
#include "xgd/oracle.hpp"
#include "xgd/xstate.hpp"

namespace {

const xgd::DensityMatrix& class1_state() {
    static const xgd::DensityMatrix rho = xgd::random_x_state(xgd::XClass::Class1, 7);
    return rho;
}

const xgd::DensityMatrix& class2_state() {
    static const xgd::DensityMatrix rho = xgd::random_x_state(xgd::XClass::Class2, 7);
    return rho;
}

void bm_bloch3(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::bloch3(rho));
}
BENCHMARK(bm_bloch3);

void bm_kmatrix_tensor(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::kmatrix_tensor(rho));
}
BENCHMARK(bm_kmatrix_tensor);

void bm_kmatrix_class1(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::kmatrix_class1(rho));
}
BENCHMARK(bm_kmatrix_class1);

void bm_kmatrix_class2(benchmark::State& state) {
    const auto& rho = class2_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::kmatrix_class2(rho));
}
BENCHMARK(bm_kmatrix_class2);

void bm_discord3_class1(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::discord3(rho));
}
BENCHMARK(bm_discord3_class1);

void bm_discord3_class2(benchmark::State& state) {
    const auto& rho = class2_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::discord3(rho));
}
BENCHMARK(bm_discord3_class2);

void bm_discord2(benchmark::State& state) {
    const xgd::DensityMatrix rho = xgd::random_x_state(xgd::XClass::TwoQubitX, 7);
    for (auto _ : state) benchmark::DoNotOptimize(xgd::discord2(rho));
}
BENCHMARK(bm_discord2);

void bm_closest_classical3(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::closest_classical3(rho));
}
BENCHMARK(bm_closest_classical3);

void bm_monogamy_report(benchmark::State& state) {
    const auto& rho = class1_state();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::monogamy_report(rho));
}
BENCHMARK(bm_monogamy_report);

void bm_hermitian_eigenvalues8(benchmark::State& state) {
    const xgd::ComplexMatrix m = xgd::random_density(8, 11).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(xgd::hermitian_eigenvalues(m));
}
BENCHMARK(bm_hermitian_eigenvalues8);

void bm_oracle_sphere(benchmark::State& state) {
    const auto& rho = class1_state();
    xgd::SphereGrid grid;
    grid.n_theta = static_cast<int>(state.range(0));
    grid.n_phi = 2 * grid.n_theta;
    for (auto _ : state) benchmark::DoNotOptimize(xgd::oracle_discord_sphere(rho, grid));
}
BENCHMARK(bm_oracle_sphere)->Arg(16)->Arg(32)->Arg(64);

void bm_oracle_measurement(benchmark::State& state) {
    const auto& rho = class1_state();
    xgd::SphereGrid grid;
    grid.n_theta = static_cast<int>(state.range(0));
    grid.n_phi = 2 * grid.n_theta;
    for (auto _ : state) benchmark::DoNotOptimize(xgd::oracle_discord_measurement(rho, grid));
}
BENCHMARK(bm_oracle_measurement)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
