#include <benchmark/benchmark.h>

#include <numbers>

#include "bigeo/entanglement.hpp"
#include "bigeo/geophase.hpp"

using namespace bigeo;
using boson_env::BosonBathSpec;
using boson_env::Spectral;
using spin_env::SpinBathSpec;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const SystemParams kSys{0.5, 0.5, 0.0};

void BM_eigensystem(benchmark::State& state) {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    const auto rho = evolution::rho_boson_werner({1.0, 0.3, Branch::Theta}, kSys, bath, 1.7);
    for (auto _ : state) benchmark::DoNotOptimize(eigensystem(rho));
}
BENCHMARK(BM_eigensystem);

void BM_boson_factors(benchmark::State& state) {
    const BosonBathSpec bath{Spectral::Supraohmic, 0.01, 0.02, 0.012, 100.0};
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-4;
        benchmark::DoNotOptimize(boson_env::boson_factors(bath, t));
    }
}
BENCHMARK(BM_boson_factors);

void BM_q_factor(benchmark::State& state) {
    const auto bath = SpinBathSpec::homogeneous(static_cast<std::size_t>(state.range(0)), 1.0,
                                                0.05, 0.05);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(spin_env::q_factor(bath, t));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_q_factor)->Arg(10)->Arg(100)->Arg(1000);

void BM_reduced_phase_boson(benchmark::State& state) {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    const WernerSpec w{1.0, 0.25, Branch::Theta};
    for (auto _ : state)
        benchmark::DoNotOptimize(geophase::reduced_phase_boson(w, kSys, bath));
}
BENCHMARK(BM_reduced_phase_boson);

void BM_kinematic_phase(benchmark::State& state) {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    const WernerSpec w{1.0, 0.25, Branch::Theta};
    const auto samples = static_cast<std::size_t>(state.range(0));
    const auto traj = evolution::trajectory(evolution::InitialState{w}, kSys,
                                            evolution::EnvironmentSpec{bath}, kTwoPi, samples);
    for (auto _ : state) benchmark::DoNotOptimize(geophase::kinematic_phase(traj, w));
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_kinematic_phase)->Arg(501)->Arg(2001);

void BM_concurrence_wootters(benchmark::State& state) {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.02, 100.0);
    const auto rho = evolution::rho_boson_werner({1.0, 0.3, Branch::Theta}, kSys, bath, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(entanglement::concurrence_wootters(rho));
}
BENCHMARK(BM_concurrence_wootters);

} // namespace

BENCHMARK_MAIN();
