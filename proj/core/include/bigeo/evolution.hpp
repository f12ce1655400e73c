// evolution.hpp — exact reduced density matrices rho_r(t) for both environments
//
// Pure-dephasing couplings ([H_S, H_I] = 0) make the populations static and
// the evolution a closed-form dressing of the initial coherences; there is no
// ODE integration anywhere, the master equation is represented by its
// solutions.

#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "bigeo/boson_env.hpp"
#include "bigeo/density_matrix.hpp"
#include "bigeo/spin_env.hpp"

namespace bigeo::evolution {

struct Closed {};

using EnvironmentSpec = std::variant<Closed, boson_env::BosonBathSpec, spin_env::SpinBathSpec>;
using InitialState = std::variant<WernerSpec, GeneralInitialState>;

// General initial state against the bosonic bath: all sixteen entries, with
// the displayed phase pattern e^{-i(2 gamma + Omega_2)t} etc. and factor
// combinations (Gamma_2 Lambda_12, ..., Gamma_1 Gamma_2 GammaTilde_12^2).
DensityMatrix4 rho_boson_general(const GeneralInitialState& psi0, const SystemParams& params,
                                 const boson_env::BosonBathSpec& bath, double t);

// Same matrix built from explicitly supplied factors. Exists so tests can
// inject corrupted factors and watch the cross-checks fail.
DensityMatrix4 rho_boson_general_from_factors(const GeneralInitialState& psi0,
                                              const SystemParams& params,
                                              const boson_env::BosonFactors& f, double t);

// Werner initial state: only one coherence survives. Theta keeps (|00><11|)
// with phase e^{-i(Omega_1+Omega_2)t} damped by Gamma_1 Gamma_2 Gamma_12^2;
// Mu keeps (|01><10|) with phase e^{-i(Omega_1-Omega_2)t} damped by
// Gamma_1 Gamma_2 GammaTilde_12^2.
DensityMatrix4 rho_boson_werner(const WernerSpec& spec, const SystemParams& params,
                                const boson_env::BosonBathSpec& bath, double t);

// Spin bath: the Theta coherence carries Q(t), the Mu coherence P(t). The Mu
// phase uses Omega_1 - Omega_2, consistent with the geometric-phase cycle for
// that branch.
DensityMatrix4 rho_spin_werner(const WernerSpec& spec, const SystemParams& params,
                               const spin_env::SpinBathSpec& bath, double t);

// Werner matrix with a caller-supplied real damping factor on the surviving
// coherence (1 = closed system; Q(t) may be negative).
DensityMatrix4 rho_werner_from_damping(const WernerSpec& spec, const SystemParams& params,
                                       double damping, double t);

// Dispatch over the environment variant. GeneralInitialState with a spin bath
// is unsupported (the general-state factors are out of scope) -> regime_error.
DensityMatrix4 rho_at(const InitialState& initial, const SystemParams& params,
                      const EnvironmentSpec& env, double t);

using Sampler = std::function<DensityMatrix4(double)>;
Sampler make_sampler(InitialState initial, SystemParams params, EnvironmentSpec env);

struct Trajectory {
    std::vector<double> times; // strictly increasing, times[0] = 0
    std::vector<DensityMatrix4> states;
    SystemParams params;
    EnvironmentSpec env;
    InitialState initial;

    std::size_t size() const { return times.size(); }
    double t_end() const { return times.back(); }
};

// Uniform grid of `steps` samples of the closed-form constructor on [0, t_end].
Trajectory trajectory(const InitialState& initial, const SystemParams& params,
                      const EnvironmentSpec& env, double t_end, std::size_t steps);

} // namespace bigeo::evolution
