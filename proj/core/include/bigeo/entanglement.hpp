// entanglement.hpp — concurrence and spectral entropy along trajectories

#pragma once

#include <vector>

#include "bigeo/density_matrix.hpp"
#include "bigeo/evolution.hpp"

namespace bigeo::entanglement {

struct EntanglementSample {
    double t{0.0};
    double concurrence{0.0}; // in [0, 1]
    double entropy{0.0};     // bits, in [0, 2]
};

// Wootters concurrence max(0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)) with l_i the
// eigenvalues of rho* (sy x sy) rho (sy x sy). Implemented through the
// singular values of B = E^(1/2) V^T (sy x sy) V E^(1/2) (rho = V E V†), which
// equal sqrt(l_i) directly: the structural zero eigenvalues then come out
// exactly zero instead of as sqrt(rounding noise).
double concurrence_wootters(const DensityMatrix4& rho);

// Closed-form concurrences of the r = 1 Werner branches.
// Boson: 2 sqrt(p(1-p)) * D(t), D the damping of the surviving coherence
// (Gamma1 Gamma2 Gamma12^2 for Theta, Gamma1 Gamma2 GammaTilde12^2 for Mu;
// at equal couplings this is the single factor raised to the 4th power).
double concurrence_closed_boson(const WernerSpec& spec, const boson_env::BosonBathSpec& bath,
                                double t);

// Spin: literally sqrt(p(1-p)(Q+1)^2) - sqrt(p(1-p)(Q-1)^2) (Theta; P for Mu),
// which reduces to 2 sqrt(p(1-p)) Q for |Q| <= 1. Note this is signed: it
// matches Wootters only where the factor is >= 0.
double concurrence_closed_spin(const WernerSpec& spec, const spin_env::SpinBathSpec& bath,
                               double t);

// Nested-radical variant of the mu-branch C_B at equal couplings,
// sqrt(1-p + 2 sqrt(p(1-p)^3)) - sqrt(1-p - 2 sqrt(p(1-p)^3)). Algebraically
// this is 2 sqrt(p(1-p)) for p <= 1/2 but 2(1-p) beyond, so it disagrees with
// Wootters for p > 1/2; the validation report surfaces that instead of the
// library silently preferring one side.
double concurrence_mu_radical(double p);

// Spectral (von Neumann) entropy -sum eps log2 eps in bits, 0 log 0 := 0.
double linear_entropy(const DensityMatrix4& rho);

// Unitary-case ratio phi_G^U / C_A = pi sqrt((1-p)/p). Diverges at p = 0.
double phase_concurrence_ratio(double p);

// Concurrence and entropy at every sample of a trajectory.
std::vector<EntanglementSample> sample_trajectory(const evolution::Trajectory& traj);

} // namespace bigeo::entanglement
