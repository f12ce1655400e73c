// geophase.hpp — mixed-state kinematic geometric phase and its reductions
//
// Three routes to the same quantity:
//  * kinematic_phase: the general sum over eigenbranches of rho_r(t), with
//    continuity pairing and a discrete Pancharatnam transport chain. Works for
//    any trajectory, including r < 1 (where no reference value exists to check
//    against; treat those results as unvalidated).
//  * reduced_phase_*: the scalar integrand obtained after the r = 1
//    simplification (only one branch survives), evaluated by adaptive
//    quadrature to 1e-9 rad.
//  * perturbative_phase: leading-order series in the coupling.

#pragma once

#include <functional>
#include <optional>

#include "bigeo/evolution.hpp"
#include "bigeo/states.hpp"

namespace bigeo::geophase {

enum class Method { GeneralKinematic, ReducedIntegrand, Perturbative };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::GeneralKinematic: return "kinematic";
        case Method::ReducedIntegrand: return "reduced";
        default: return "perturbative";
    }
}

struct GeoPhaseResult {
    double phi_total{0.0};   // unwrapped accumulated phase, radians
    double phi_unitary{0.0}; // 2 pi n (1 - p), the closed-system value
    double delta_phi{0.0};   // phi_total - phi_unitary wrapped to (-pi, pi]
    int winding{1};          // number of cycles n
    Method method{Method::ReducedIntegrand};

    // delta before wrapping; what multi-cycle comparisons should use.
    double delta_unwrapped() const { return phi_total - phi_unitary; }
};

// Map an angle to (-pi, pi].
double wrap_angle(double a);

// p(1-p)(1-2p), the entanglement shape of every leading-order correction.
// Evaluated in this exact factored order so that delta(p) = -delta(1-p) holds
// bit-for-bit on symmetric grids.
inline double correction_shape(double p) { return p * (1.0 - p) * (1.0 - 2.0 * p); }

struct KinematicOptions {
    double eps_floor{1e-12};       // drop branches with eps_k(0) below this
    std::optional<double> lift_reference; // unwrap target; default phi_unitary
    double pairing_quality{0.5};   // min |<prev|cur>|^2 before refining
    double degenerate_gap{1e-12};  // eigenvalue gap treated as exact degeneracy
    int max_refine_depth{24};      // local bisection depth (needs a resampler)
    evolution::Sampler resampler;  // optional closed-form resampler for bisection
};

// Kinematic geometric phase over a trajectory spanning exactly n branch cycles
// (t_end = n 2pi/Omega, >= 500 samples per cycle). Throws precondition_error
// for non-cyclic spans or coarse grids, degeneracy_error if eigenbranches stay
// unresolvable over a finite interval.
GeoPhaseResult kinematic_phase(const evolution::Trajectory& traj, const WernerSpec& spec,
                               const KinematicOptions& opts = {});

// Reduced integrand with a caller-supplied coherence damping d(t) (the r = 1
// closed form); omega is the branch cycle frequency, quadrature absolute
// tolerance is on the returned phase.
GeoPhaseResult reduced_phase_from_damping(const WernerSpec& spec, double omega,
                                          const std::function<double(double)>& damping,
                                          int cycles, double abs_tol = 1e-9);

// Branch-dispatching reduced phases. Require r = 1 (regime_error otherwise);
// the Mu branch requires omega1 > omega2 (precondition_error).
GeoPhaseResult reduced_phase_boson(const WernerSpec& spec, const SystemParams& params,
                                   const boson_env::BosonBathSpec& bath, int cycles = 1);
GeoPhaseResult reduced_phase_spin(const WernerSpec& spec, const SystemParams& params,
                                  const spin_env::SpinBathSpec& bath, int cycles = 1);

enum class SeriesKind { OhmicFull, OhmicApprox, SupraohmicFull, SupraohmicApprox, SpinBath };

struct SeriesArgs {
    double p{0.5};
    double gamma0{0.0};           // boson kinds
    double lambda_over_omega{100.0}; // boson kinds: cutoff in units of the cycle frequency
    double lambda_over_h{0.0};    // spin kind: per-spin coupling (eps = lam = lambda)
    std::size_t n_spins{0};       // spin kind
    double h_over_omega{1.0};     // spin kind: tunneling element in cycle-frequency units
    int cycles{1};
};

// Leading-order environmental correction delta_phi for one of the five series.
// Multi-cycle values are literally cycles * (single-cycle value).
double perturbative_delta_phi(SeriesKind kind, const SeriesArgs& args);

GeoPhaseResult perturbative_phase(SeriesKind kind, const SeriesArgs& args);

} // namespace bigeo::geophase
