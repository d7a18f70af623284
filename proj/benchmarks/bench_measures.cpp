#include <benchmark/benchmark.h>

#include "qdm/estimate.hpp"
#include "qdm/measures.hpp"
#include "qdm/optimize.hpp"
#include "qdm/random.hpp"

using namespace qdm;

namespace {

Matrix embed_a(const Matrix& k) { return tensor_product(k, Matrix::Identity(2, 2)); }

void BM_SqrtPsd(benchmark::State& state) {
    Rng rng(1);
    const Matrix rho = rng.density({2, 2}).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_psd(rho));
}
BENCHMARK(BM_SqrtPsd);

void BM_SkewInformation(benchmark::State& state) {
    Rng rng(2);
    const DensityMatrix rho = rng.density({2, 2});
    const Matrix k = embed_a(pauli::direction(rng.unit_vector()));
    for (auto _ : state) benchmark::DoNotOptimize(skew_information(rho, k));
}
BENCHMARK(BM_SkewInformation);

void BM_Qfi(benchmark::State& state) {
    Rng rng(3);
    const DensityMatrix rho = rng.density({2, 2});
    const Matrix h = embed_a(pauli::direction(rng.unit_vector()));
    for (auto _ : state) benchmark::DoNotOptimize(qfi(rho, h));
}
BENCHMARK(BM_Qfi);

void BM_LquClosedForm(benchmark::State& state) {
    Rng rng(4);
    const DensityMatrix rho = rng.density({2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(lqu(rho, Subsystem::A).value);
}
BENCHMARK(BM_LquClosedForm);

void BM_QipClosedForm(benchmark::State& state) {
    Rng rng(5);
    const DensityMatrix rho = rng.density({2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(qip(rho, Subsystem::A).value);
}
BENCHMARK(BM_QipClosedForm);

void BM_SphereGridMinimize(benchmark::State& state) {
    Rng rng(6);
    const OrbitProblem problem{rng.density({2, 2}), Subsystem::A,
                               SpectrumSpec::qubit_default(), Objective::SkewInformation};
    const GridSpec grid{static_cast<int>(state.range(0)), 2};
    for (auto _ : state) benchmark::DoNotOptimize(sphere_grid_minimize(problem, grid).value);
}
BENCHMARK(BM_SphereGridMinimize)->Arg(256)->Arg(2048);

void BM_MultistartMinimize(benchmark::State& state) {
    Rng rng(7);
    const OrbitProblem problem{rng.density({2, 2}), Subsystem::A,
                               SpectrumSpec::qubit_default(), Objective::Qfi};
    for (auto _ : state) benchmark::DoNotOptimize(multistart_minimize(problem, 8, 1).value);
}
BENCHMARK(BM_MultistartMinimize);

void BM_EntropicDiscord(benchmark::State& state) {
    Rng rng(8);
    const DensityMatrix rho = rng.density({2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(entropic_discord(rho).value);
}
BENCHMARK(BM_EntropicDiscord);

void BM_SimulateEstimation(benchmark::State& state) {
    EstimationConfig config{make_rho_q(0.9), embed_a(pauli::z()), 0.3,
                            state.range(0), 1};
    config.batches = 10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_estimation(config).variance_empirical);
    }
}
BENCHMARK(BM_SimulateEstimation)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
