// states.hpp — system parameters, initial states, Werner family

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "bigeo/errors.hpp"

namespace bigeo {

using complexd = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

// Basis order is fixed project-wide: (|00>, |01>, |10>, |11>).
inline constexpr int kDim = 4;

// Free bipartite parameters, hbar = 1 throughout.
struct SystemParams {
    double omega1{1.0};   // level splitting of qubit 1 (rad/time)
    double omega2{0.0};   // level splitting of qubit 2
    double gamma_qq{0.0}; // sigma_z x sigma_z inter-qubit coupling

    // Cycle frequency of the coherence that survives in each Werner branch.
    double omega_theta() const { return omega1 + omega2; }
    double omega_mu() const { return omega1 - omega2; }

    void validate() const {
        if (!(omega1 > 0.0)) throw domain_error("SystemParams: omega1 must be > 0");
        if (omega2 < 0.0) throw domain_error("SystemParams: omega2 must be >= 0");
    }
};

enum class Branch { Theta, Mu };

inline const char* to_string(Branch b) { return b == Branch::Theta ? "theta" : "mu"; }

// Werner family (1-r)/4 I + r |phi><phi| with |phi> one of the two
// p-parameterized entangled kets.
struct WernerSpec {
    double r{1.0};               // mixing: 1 = pure, ->0 = white noise
    double p{0.5};               // degree of entanglement, p = 1/2 is the Bell point
    Branch branch{Branch::Theta};

    void validate() const {
        if (!(r > 0.0) || r > 1.0) throw domain_error("WernerSpec: r must be in (0, 1]");
        if (p < 0.0 || p > 1.0) throw domain_error("WernerSpec: p must be in [0, 1]");
    }
};

// Arbitrary pure two-qubit state alpha|00> + beta|01> + zeta|10> + delta|11>.
struct GeneralInitialState {
    complexd alpha{1.0, 0.0};
    complexd beta{0.0, 0.0};
    complexd zeta{0.0, 0.0};
    complexd delta{0.0, 0.0};

    double norm_sq() const {
        return std::norm(alpha) + std::norm(beta) + std::norm(zeta) + std::norm(delta);
    }

    void validate() const {
        if (std::abs(norm_sq() - 1.0) > 1e-12)
            throw domain_error("GeneralInitialState: amplitudes must be normalized to 1 within 1e-12");
    }

    Vector4c ket() const { return Vector4c(alpha, beta, zeta, delta); }
};

// The branch ket as a GeneralInitialState: Theta -> sqrt(1-p)|00> + sqrt(p)|11>,
// Mu -> sqrt(1-p)|01> + sqrt(p)|10>.
GeneralInitialState branch_ket(Branch branch, double p);

} // namespace bigeo
