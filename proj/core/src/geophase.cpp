#include "bigeo/geophase.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bigeo/quadrature.hpp"

namespace bigeo::geophase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cycle_omega(const SystemParams& params, Branch branch) {
    params.validate();
    const double omega = branch == Branch::Theta ? params.omega_theta() : params.omega_mu();
    if (!(omega > 0.0))
        throw precondition_error(
            "geophase: branch cycle frequency must be positive (Mu needs omega1 > omega2)");
    return omega;
}

// ---- kinematic path -------------------------------------------------------

struct BranchChain {
    std::array<double, 4> eps0{};
    Matrix4c v0;
    std::array<bool, 4> active{};
    std::array<double, 4> transport{}; // sum of Pancharatnam overlap args per branch
    std::array<double, 4> eps_prev{};
    Matrix4c vprev;
};

// Re-basis (near-)degenerate eigenvalue groups so they continue the target
// columns: project targets into the group subspace and orthonormalize. Any
// unitary mix inside an exactly degenerate group is an equally valid
// eigenbasis, so this changes nothing the decomposition promises while making
// the chain of vectors smooth through static degeneracies.
void align_degenerate_groups(EigenSystem4& es, const Matrix4c& targets, double gap_tol) {
    int k = 0;
    while (k < kDim) {
        int g = k + 1;
        while (g < kDim && std::abs(es.eigenvalues[g - 1] - es.eigenvalues[g]) <= gap_tol) ++g;
        const int size = g - k;
        if (size >= 2) {
            Matrix4c proj = Matrix4c::Zero();
            for (int i = k; i < g; ++i)
                proj += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();

            // Pick the `size` target columns living mostly inside the subspace.
            std::array<double, 4> norms{};
            for (int c = 0; c < kDim; ++c) norms[c] = (proj * targets.col(c)).norm();
            std::array<int, 4> order{0, 1, 2, 3};
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return norms[a] > norms[b]; });
            std::array<int, 4> picked{};
            for (int i = 0; i < size; ++i) picked[i] = order[i];
            std::sort(picked.begin(), picked.begin() + size);

            if (norms[picked[size - 1]] > 0.3) {
                // Modified Gram-Schmidt of the projected targets.
                std::array<Vector4c, 4> basis;
                bool ok = true;
                for (int i = 0; i < size && ok; ++i) {
                    Vector4c v = proj * targets.col(picked[i]);
                    for (int jj = 0; jj < i; ++jj) v -= basis[jj].dot(v) * basis[jj];
                    const double n = v.norm();
                    if (n < 1e-6) {
                        ok = false;
                        break;
                    }
                    basis[i] = v / n;
                }
                if (ok)
                    for (int i = 0; i < size; ++i)
                        es.eigenvectors.col(k + i) = gauge_fix(basis[i]);
            }
        }
        k = g;
    }
}

struct Pairing {
    std::array<int, 4> perm{0, 1, 2, 3}; // branch k continues in column perm[k]
    double quality{1.0};                 // min |<prev_k|cur_perm(k)>|^2 over active k
};

Pairing best_pairing(const Matrix4c& vprev, const EigenSystem4& es,
                     const std::array<bool, 4>& active) {
    double ovl2[4][4];
    for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
            ovl2[k][i] = std::norm(vprev.col(k).dot(es.eigenvectors.col(i)));

    std::array<int, 4> idx{0, 1, 2, 3};
    Pairing best;
    double best_score = -1.0;
    do {
        double score = 0.0;
        for (int k = 0; k < kDim; ++k) score += ovl2[k][idx[k]];
        if (score > best_score) {
            best_score = score;
            best.perm = idx;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));

    best.quality = 1.0;
    for (int k = 0; k < kDim; ++k)
        if (active[k]) best.quality = std::min(best.quality, ovl2[k][best.perm[k]]);
    return best;
}

void accept_step(BranchChain& chain, const EigenSystem4& es, const Pairing& pairing) {
    Matrix4c vcur;
    std::array<double, 4> eps_cur{};
    for (int k = 0; k < kDim; ++k) {
        vcur.col(k) = es.eigenvectors.col(pairing.perm[k]);
        eps_cur[k] = es.eigenvalues[pairing.perm[k]];
    }
    for (int k = 0; k < kDim; ++k) {
        if (!chain.active[k]) continue;
        const complexd ovl = chain.vprev.col(k).dot(vcur.col(k));
        if (std::abs(ovl) < 1e-12)
            throw degeneracy_error("kinematic_phase: vanishing overlap along an active branch");
        chain.transport[k] += std::arg(ovl);
    }
    chain.vprev = vcur;
    chain.eps_prev = eps_cur;
}

void advance(BranchChain& chain, double t_prev, double t_cur, const DensityMatrix4& rho_cur,
             int depth, const KinematicOptions& opts) {
    EigenSystem4 es = eigensystem(rho_cur);
    align_degenerate_groups(es, chain.vprev, opts.degenerate_gap);
    const Pairing pairing = best_pairing(chain.vprev, es, chain.active);
    if (pairing.quality < opts.pairing_quality) {
        if (opts.resampler && depth < opts.max_refine_depth && t_cur - t_prev > 1e-14) {
            const double t_mid = 0.5 * (t_prev + t_cur);
            advance(chain, t_prev, t_mid, opts.resampler(t_mid), depth + 1, opts);
            advance(chain, t_mid, t_cur, rho_cur, depth + 1, opts);
            return;
        }
        throw degeneracy_error(
            "kinematic_phase: eigenbranches stay unresolvable through a degeneracy near t = " +
            std::to_string(t_cur));
    }
    accept_step(chain, es, pairing);
}

} // namespace

double wrap_angle(double a) {
    double r = std::fmod(a + kPi, kTwoPi);
    if (r <= 0.0) r += kTwoPi;
    return r - kPi;
}

GeoPhaseResult kinematic_phase(const evolution::Trajectory& traj, const WernerSpec& spec,
                               const KinematicOptions& opts) {
    spec.validate();
    if (traj.size() < 2) throw precondition_error("kinematic_phase: trajectory too short");
    const double omega = cycle_omega(traj.params, spec.branch);
    const double t_end = traj.t_end();
    const double cycles = t_end * omega / kTwoPi;
    const int n = static_cast<int>(std::lround(cycles));
    if (n < 1 || std::abs(cycles - n) > 1e-9 * std::max(1.0, cycles))
        throw precondition_error("kinematic_phase: t_end must be an integer number of cycles");
    if ((traj.size() - 1) < static_cast<std::size_t>(500 * n))
        throw precondition_error("kinematic_phase: need at least 500 samples per cycle");

    BranchChain chain;
    {
        EigenSystem4 es = eigensystem(traj.states.front());
        align_degenerate_groups(es, Matrix4c::Identity(), opts.degenerate_gap);
        chain.v0 = es.eigenvectors;
        chain.eps0 = es.eigenvalues;
        chain.vprev = es.eigenvectors;
        chain.eps_prev = es.eigenvalues;
        for (int k = 0; k < kDim; ++k) chain.active[k] = es.eigenvalues[k] >= opts.eps_floor;
    }

    for (std::size_t j = 1; j < traj.size(); ++j)
        advance(chain, traj.times[j - 1], traj.times[j], traj.states[j], 0, opts);

    // Contributing branches that are degenerate at both endpoints never split,
    // so the phase assigned to each of them depends on the basis chosen inside
    // the degenerate subspace. That is harmless for branches that did not move
    // at all (a static subspace contributes its plain weight in any basis) but
    // ill-defined as soon as one member accumulated transport or failed to
    // close on itself; the single-branch formula does not cover that case.
    const auto moved = [&](int k) {
        const complexd closure = chain.v0.col(k).dot(chain.vprev.col(k));
        return std::abs(closure - 1.0) > 1e-6 || std::abs(chain.transport[k]) > 1e-6;
    };
    for (int k = 0; k < kDim; ++k) {
        for (int j = k + 1; j < kDim; ++j) {
            if (!chain.active[k] || !chain.active[j]) continue;
            if (std::abs(chain.eps0[k] - chain.eps0[j]) <= opts.degenerate_gap &&
                std::abs(chain.eps_prev[k] - chain.eps_prev[j]) <= opts.degenerate_gap &&
                (moved(k) || moved(j)))
                throw degeneracy_error(
                    "kinematic_phase: contributing eigenbranches stay degenerate along the "
                    "whole path; the phase of a single branch is not defined there");
        }
    }

    complexd sum = 0.0;
    for (int k = 0; k < kDim; ++k) {
        if (!chain.active[k]) continue;
        const double weight = std::sqrt(chain.eps0[k] * std::max(chain.eps_prev[k], 0.0));
        const complexd closure = chain.v0.col(k).dot(chain.vprev.col(k));
        sum += weight * closure * std::polar(1.0, -chain.transport[k]);
    }
    if (std::abs(sum) < 1e-300)
        throw degeneracy_error("kinematic_phase: phase sum vanished; phase undefined");

    const double phi_unitary = kTwoPi * n * (1.0 - spec.p);
    const double phi_raw = std::arg(sum);
    const double ref = opts.lift_reference.value_or(phi_unitary);
    const double phi = phi_raw + kTwoPi * std::round((ref - phi_raw) / kTwoPi);

    GeoPhaseResult out;
    out.phi_total = phi;
    out.phi_unitary = phi_unitary;
    out.delta_phi = wrap_angle(phi - phi_unitary);
    out.winding = n;
    out.method = Method::GeneralKinematic;
    return out;
}

// ---- reduced integrand path ------------------------------------------------

GeoPhaseResult reduced_phase_from_damping(const WernerSpec& spec, double omega,
                                          const std::function<double(double)>& damping,
                                          int cycles, double abs_tol) {
    spec.validate();
    if (spec.r != 1.0)
        throw regime_error("reduced_phase: the reduced integrand is the r = 1 closed form");
    if (!(omega > 0.0)) throw precondition_error("reduced_phase: cycle frequency must be > 0");
    if (cycles < 1) throw precondition_error("reduced_phase: cycles must be >= 1");

    const double p = spec.p;
    const double phi_unitary = kTwoPi * cycles * (1.0 - p);

    GeoPhaseResult out;
    out.phi_unitary = phi_unitary;
    out.winding = cycles;
    out.method = Method::ReducedIntegrand;

    if (p == 0.0 || p == 1.0) {
        // Coherence vanishes; the integrand is the constant 1-p.
        out.phi_total = phi_unitary;
        out.delta_phi = 0.0;
        return out;
    }

    const double A = p * (1.0 - p);
    const double q = 1.0 - 2.0 * p;
    const auto integrand = [&](double t) {
        const double d = damping(t);
        const double d2 = d * d;
        if (d2 == 0.0) return p < 0.5 ? 1.0 : (p > 0.5 ? 0.0 : 0.5);
        const double s = std::sqrt(q * q + 4.0 * A * d2);
        // eps_plus - (1-p) = (s - q)/2, rationalized for q > 0 to avoid
        // cancellation when the coherence is strongly damped.
        const double b = q >= 0.0 ? 2.0 * A * d2 / (s + q) : 0.5 * (s - q);
        return A * d2 / (A * d2 + b * b);
    };

    const double t_end = cycles * kTwoPi / omega;
    const auto quad = integrate_adaptive(integrand, 0.0, t_end, abs_tol / omega);
    out.phi_total = omega * quad.value;
    out.delta_phi = wrap_angle(out.phi_total - phi_unitary);
    return out;
}

GeoPhaseResult reduced_phase_boson(const WernerSpec& spec, const SystemParams& params,
                                   const boson_env::BosonBathSpec& bath, int cycles) {
    bath.validate();
    const double omega = cycle_omega(params, spec.branch);
    return reduced_phase_from_damping(
        spec, omega,
        [&](double t) { return boson_env::coherence_damping(bath, spec.branch, t); }, cycles);
}

GeoPhaseResult reduced_phase_spin(const WernerSpec& spec, const SystemParams& params,
                                  const spin_env::SpinBathSpec& bath, int cycles) {
    bath.validate();
    const double omega = cycle_omega(params, spec.branch);
    const auto damping = spec.branch == Branch::Theta
                             ? std::function<double(double)>(
                                   [&](double t) { return spin_env::q_factor(bath, t); })
                             : std::function<double(double)>(
                                   [&](double t) { return spin_env::p_factor(bath, t); });
    return reduced_phase_from_damping(spec, omega, damping, cycles);
}

// ---- perturbative path -----------------------------------------------------

double perturbative_delta_phi(SeriesKind kind, const SeriesArgs& args) {
    if (args.p < 0.0 || args.p > 1.0)
        throw domain_error("perturbative_delta_phi: p must be in [0, 1]");
    if (args.cycles < 1) throw domain_error("perturbative_delta_phi: cycles must be >= 1");

    const double shape = correction_shape(args.p);
    double single = 0.0;
    switch (kind) {
        case SeriesKind::OhmicFull: {
            const double y = args.lambda_over_omega;
            if (!(y > 0.0)) throw domain_error("perturbative: lambda_over_omega must be > 0");
            single = 32.0 * args.gamma0 * shape / y *
                     (std::atan(kTwoPi * y) +
                      kPi * y * (-2.0 + std::log1p(4.0 * kPi * kPi * y * y)));
            break;
        }
        case SeriesKind::OhmicApprox: {
            const double y = args.lambda_over_omega;
            if (!(y > 0.0)) throw domain_error("perturbative: lambda_over_omega must be > 0");
            single = 64.0 * kPi * args.gamma0 * shape * (std::log(kTwoPi * y) - 1.0);
            break;
        }
        case SeriesKind::SupraohmicFull: {
            const double y = args.lambda_over_omega;
            if (!(y > 0.0)) throw domain_error("perturbative: lambda_over_omega must be > 0");
            single = 8.0 * args.gamma0 * shape / y *
                     (kPi * y * (4.0 + 2.0 / (1.0 + 4.0 * kPi * kPi * y * y)) -
                      3.0 * std::atan(kTwoPi * y));
            break;
        }
        case SeriesKind::SupraohmicApprox:
            single = 32.0 * kPi * args.gamma0 * shape;
            break;
        case SeriesKind::SpinBath: {
            if (args.n_spins == 0) throw domain_error("perturbative: n_spins must be >= 1");
            if (!(args.h_over_omega > 0.0))
                throw domain_error("perturbative: h_over_omega must be > 0");
            const double eta = args.h_over_omega; // h / Omega
            const double ratio = args.lambda_over_h;
            // Leading order of the exact integrand in (lambda/h)^2 for a
            // homogeneous eps = lam bath:
            //   16 N (lambda/h)^2 p(1-p)(1-2p) [pi - (Omega/4h) sin(4 pi h/Omega)].
            single = 16.0 * static_cast<double>(args.n_spins) * ratio * ratio * shape *
                     (kPi - std::sin(4.0 * kPi * eta) / (4.0 * eta));
            break;
        }
    }
    return static_cast<double>(args.cycles) * single;
}

GeoPhaseResult perturbative_phase(SeriesKind kind, const SeriesArgs& args) {
    GeoPhaseResult out;
    out.winding = args.cycles;
    out.method = Method::Perturbative;
    out.phi_unitary = kTwoPi * args.cycles * (1.0 - args.p);
    const double delta = perturbative_delta_phi(kind, args);
    out.phi_total = out.phi_unitary + delta;
    out.delta_phi = wrap_angle(delta);
    return out;
}

} // namespace bigeo::geophase
