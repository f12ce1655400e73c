#include "bigeo/evolution.hpp"

#include <cmath>

namespace bigeo::evolution {

namespace {

complexd phase(double angle) { return std::polar(1.0, angle); }

void require_time(double t) {
    if (t < 0.0) throw domain_error("evolution: time must be >= 0");
}

} // namespace

DensityMatrix4 rho_boson_general_from_factors(const GeneralInitialState& psi0,
                                              const SystemParams& params,
                                              const boson_env::BosonFactors& f, double t) {
    psi0.validate();
    params.validate();
    require_time(t);

    const complexd a = psi0.alpha, b = psi0.beta, z = psi0.zeta, d = psi0.delta;
    const double w1 = params.omega1, w2 = params.omega2, g = params.gamma_qq;
    const complexd L = phase(f.lambda12_phase);
    const double d_theta = f.damping_theta();
    const double d_mu = f.damping_mu();

    Matrix4c m;
    m(0, 0) = std::norm(a);
    m(1, 1) = std::norm(b);
    m(2, 2) = std::norm(z);
    m(3, 3) = std::norm(d);

    m(0, 1) = a * std::conj(b) * phase(-(2.0 * g + w2) * t) * f.gamma2 * L;
    m(0, 2) = a * std::conj(z) * phase(-(2.0 * g + w1) * t) * f.gamma1 * L;
    m(0, 3) = a * std::conj(d) * phase(-(w1 + w2) * t) * d_theta;
    m(1, 2) = b * std::conj(z) * phase(-(w1 - w2) * t) * d_mu;
    m(1, 3) = b * std::conj(d) * phase(-(w1 - 2.0 * g) * t) * f.gamma1 * std::conj(L);
    m(2, 3) = z * std::conj(d) * phase(-(w2 - 2.0 * g) * t) * f.gamma2 * std::conj(L);

    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));

    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 rho_boson_general(const GeneralInitialState& psi0, const SystemParams& params,
                                 const boson_env::BosonBathSpec& bath, double t) {
    return rho_boson_general_from_factors(psi0, params, boson_env::boson_factors(bath, t), t);
}

DensityMatrix4 rho_werner_from_damping(const WernerSpec& spec, const SystemParams& params,
                                       double damping, double t) {
    spec.validate();
    params.validate();
    require_time(t);

    const double bg = (1.0 - spec.r) / 4.0;
    const double coh = spec.r * std::sqrt(spec.p * (1.0 - spec.p)) * damping;

    Matrix4c m = Matrix4c::Zero();
    if (spec.branch == Branch::Theta) {
        m(0, 0) = bg + spec.r * (1.0 - spec.p);
        m(1, 1) = bg;
        m(2, 2) = bg;
        m(3, 3) = bg + spec.r * spec.p;
        m(0, 3) = coh * phase(-params.omega_theta() * t);
        m(3, 0) = std::conj(m(0, 3));
    } else {
        m(0, 0) = bg;
        m(1, 1) = bg + spec.r * (1.0 - spec.p);
        m(2, 2) = bg + spec.r * spec.p;
        m(3, 3) = bg;
        m(1, 2) = coh * phase(-params.omega_mu() * t);
        m(2, 1) = std::conj(m(1, 2));
    }
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 rho_boson_werner(const WernerSpec& spec, const SystemParams& params,
                                const boson_env::BosonBathSpec& bath, double t) {
    return rho_werner_from_damping(spec, params,
                                   boson_env::coherence_damping(bath, spec.branch, t), t);
}

DensityMatrix4 rho_spin_werner(const WernerSpec& spec, const SystemParams& params,
                               const spin_env::SpinBathSpec& bath, double t) {
    const double damping = spec.branch == Branch::Theta ? spin_env::q_factor(bath, t)
                                                        : spin_env::p_factor(bath, t);
    return rho_werner_from_damping(spec, params, damping, t);
}

DensityMatrix4 rho_at(const InitialState& initial, const SystemParams& params,
                      const EnvironmentSpec& env, double t) {
    return std::visit(
        [&](const auto& e) -> DensityMatrix4 {
            using E = std::decay_t<decltype(e)>;
            return std::visit(
                [&](const auto& st) -> DensityMatrix4 {
                    using S = std::decay_t<decltype(st)>;
                    if constexpr (std::is_same_v<E, Closed>) {
                        if constexpr (std::is_same_v<S, WernerSpec>)
                            return rho_werner_from_damping(st, params, 1.0, t);
                        else
                            return rho_boson_general_from_factors(st, params,
                                                                  boson_env::BosonFactors{}, t);
                    } else if constexpr (std::is_same_v<E, boson_env::BosonBathSpec>) {
                        if constexpr (std::is_same_v<S, WernerSpec>)
                            return rho_boson_werner(st, params, e, t);
                        else
                            return rho_boson_general(st, params, e, t);
                    } else {
                        if constexpr (std::is_same_v<S, WernerSpec>)
                            return rho_spin_werner(st, params, e, t);
                        else
                            throw regime_error(
                                "rho_at: general initial states are not supported for spin baths");
                    }
                },
                initial);
        },
        env);
}

Sampler make_sampler(InitialState initial, SystemParams params, EnvironmentSpec env) {
    return [initial = std::move(initial), params, env = std::move(env)](double t) {
        return rho_at(initial, params, env, t);
    };
}

Trajectory trajectory(const InitialState& initial, const SystemParams& params,
                      const EnvironmentSpec& env, double t_end, std::size_t steps) {
    if (steps < 2) throw precondition_error("trajectory: steps must be >= 2");
    if (!(t_end > 0.0)) throw precondition_error("trajectory: t_end must be > 0");

    Trajectory traj;
    traj.params = params;
    traj.env = env;
    traj.initial = initial;
    traj.times.reserve(steps);
    traj.states.reserve(steps);

    const auto sample = make_sampler(initial, params, env);
    for (std::size_t j = 0; j < steps; ++j) {
        const double t = t_end * static_cast<double>(j) / static_cast<double>(steps - 1);
        traj.times.push_back(t);
        traj.states.push_back(sample(t));
    }
    return traj;
}

} // namespace bigeo::evolution
