#include "bigeo/sweep.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "bigeo/entanglement.hpp"
#include "bigeo/geophase.hpp"
#include "bigeo/rng.hpp"

namespace bigeo::sweep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct AxisValues {
    double p;
    double r;
    double gamma0;
    double lambda_over_h;
    std::size_t n_spins;
    bool has_gamma0{false};
    bool has_lambda{false};
};

struct ResolvedPoint {
    SystemParams system;
    evolution::EnvironmentSpec env{evolution::Closed{}};
    evolution::InitialState initial;
    WernerSpec werner;
    bool general{false};
    double omega{1.0};
    // series inputs; nan marks "not available for this point"
    double series_gamma0{std::numeric_limits<double>::quiet_NaN()};
    double series_lambda_over_omega{0.0};
    double series_lambda_over_h{std::numeric_limits<double>::quiet_NaN()};
    std::size_t series_n_spins{0};
    double series_h_over_omega{1.0};
};

AxisValues axis_values_at(const ExperimentConfig& cfg, std::size_t point) {
    AxisValues v{};
    v.p = cfg.state.p;
    v.r = cfg.state.r;
    v.gamma0 = cfg.boson.gamma0.value_or(0.0);
    v.has_gamma0 = cfg.boson.gamma0.has_value();
    v.lambda_over_h = cfg.spin.lambda_over_h.value_or(0.0);
    v.has_lambda = cfg.spin.lambda_over_h.has_value();
    v.n_spins = cfg.spin.n_spins;

    std::size_t rem = point;
    for (auto it = cfg.axes.rbegin(); it != cfg.axes.rend(); ++it) {
        const std::size_t n = it->values.size();
        const double val = it->values[rem % n];
        rem /= n;
        if (it->name == "p")
            v.p = val;
        else if (it->name == "r")
            v.r = val;
        else if (it->name == "gamma0") {
            v.gamma0 = val;
            v.has_gamma0 = true;
        } else if (it->name == "lambda_over_h") {
            v.lambda_over_h = val;
            v.has_lambda = true;
        } else if (it->name == "n_spins")
            v.n_spins = static_cast<std::size_t>(val);
    }
    return v;
}

ResolvedPoint resolve_point(const ExperimentConfig& cfg, const AxisValues& ax,
                            std::size_t point_index) {
    ResolvedPoint rp;
    rp.system = cfg.system;
    rp.general = cfg.state.general;
    const Branch branch = cfg.state.branch;
    rp.omega = branch == Branch::Theta ? rp.system.omega_theta() : rp.system.omega_mu();
    if (!(rp.omega > 0.0))
        throw precondition_error("sweep: branch cycle frequency must be positive");

    if (rp.general) {
        rp.initial = cfg.state.amplitudes;
    } else {
        rp.werner = WernerSpec{ax.r, ax.p, branch};
        rp.werner.validate();
        rp.initial = rp.werner;
    }

    switch (cfg.env_kind) {
        case EnvKind::Closed: rp.env = evolution::Closed{}; break;
        case EnvKind::Boson: {
            boson_env::BosonBathSpec bath;
            bath.spectral = cfg.boson.spectral;
            bath.convention = cfg.boson.convention;
            if (ax.has_gamma0) {
                bath.gamma01 = bath.gamma02 = bath.gamma012 = ax.gamma0;
            } else {
                bath.gamma01 = cfg.boson.gamma01;
                bath.gamma02 = cfg.boson.gamma02;
                bath.gamma012 = cfg.boson.gamma012;
            }
            bath.cutoff_lambda = cfg.boson.cutoff_lambda
                                     ? *cfg.boson.cutoff_lambda
                                     : cfg.boson.cutoff_lambda_over_omega * rp.omega;
            bath.validate();
            rp.series_lambda_over_omega = bath.cutoff_lambda / rp.omega;
            if (bath.gamma01 == bath.gamma02 && bath.gamma02 == bath.gamma012)
                rp.series_gamma0 = bath.gamma01;
            rp.env = bath;
            break;
        }
        case EnvKind::Spin: {
            spin_env::SpinBathSpec bath;
            if (cfg.spin.random) {
                bath = spin_env::SpinBathSpec::random(
                    ax.n_spins, cfg.spin.h, cfg.spin.coupling_min * cfg.spin.h,
                    cfg.spin.coupling_max * cfg.spin.h, cfg.spin.coupling_min * cfg.spin.h,
                    cfg.spin.coupling_max * cfg.spin.h,
                    Rng::for_task(cfg.run.seed, point_index).next_u64());
            } else {
                const double lam = cfg.spin.lam ? *cfg.spin.lam
                                   : ax.has_lambda ? ax.lambda_over_h * cfg.spin.h
                                                   : 0.0;
                const double eps = cfg.spin.eps          ? *cfg.spin.eps
                                   : cfg.spin.eps_over_h ? *cfg.spin.eps_over_h * cfg.spin.h
                                                         : lam;
                bath = spin_env::SpinBathSpec::homogeneous(ax.n_spins, cfg.spin.h, eps, lam);
                if (eps == lam && ax.has_lambda) rp.series_lambda_over_h = ax.lambda_over_h;
            }
            bath.validate();
            rp.series_n_spins = ax.n_spins;
            if (rp.system.omega_theta() > 0.0 || rp.system.omega_mu() > 0.0)
                rp.series_h_over_omega = cfg.spin.h / rp.omega;
            rp.env = bath;
            break;
        }
    }
    return rp;
}

geophase::GeoPhaseResult compute_phase(const ExperimentConfig& cfg, const ResolvedPoint& rp) {
    if (cfg.run.method == PhaseMethod::Reduced) {
        if (std::holds_alternative<boson_env::BosonBathSpec>(rp.env))
            return geophase::reduced_phase_boson(
                rp.werner, rp.system, std::get<boson_env::BosonBathSpec>(rp.env), cfg.run.cycles);
        if (std::holds_alternative<spin_env::SpinBathSpec>(rp.env))
            return geophase::reduced_phase_spin(
                rp.werner, rp.system, std::get<spin_env::SpinBathSpec>(rp.env), cfg.run.cycles);
        return geophase::reduced_phase_from_damping(
            rp.werner, rp.omega, [](double) { return 1.0; }, cfg.run.cycles);
    }
    const std::size_t steps =
        static_cast<std::size_t>(cfg.run.cycles) * (cfg.run.samples_per_cycle - 1) + 1;
    const double t_end = cfg.run.cycles * kTwoPi / rp.omega;
    auto traj = evolution::trajectory(rp.initial, rp.system, rp.env, t_end, steps);
    geophase::KinematicOptions opts;
    opts.resampler = evolution::make_sampler(rp.initial, rp.system, rp.env);
    return geophase::kinematic_phase(traj, rp.werner, opts);
}

double compute_perturbative_delta(const ExperimentConfig& cfg, const ResolvedPoint& rp,
                                  const AxisValues& ax) {
    geophase::SeriesArgs args;
    args.p = ax.p;
    args.cycles = cfg.run.cycles;
    if (std::holds_alternative<boson_env::BosonBathSpec>(rp.env)) {
        if (!(rp.series_gamma0 == rp.series_gamma0))
            throw regime_error("perturbative output needs equal boson couplings (set gamma0)");
        args.gamma0 = rp.series_gamma0;
        args.lambda_over_omega = rp.series_lambda_over_omega;
        const auto kind = std::get<boson_env::BosonBathSpec>(rp.env).spectral ==
                                  boson_env::Spectral::Ohmic
                              ? geophase::SeriesKind::OhmicFull
                              : geophase::SeriesKind::SupraohmicFull;
        return geophase::perturbative_delta_phi(kind, args);
    }
    if (std::holds_alternative<spin_env::SpinBathSpec>(rp.env)) {
        if (!(rp.series_lambda_over_h == rp.series_lambda_over_h))
            throw regime_error(
                "perturbative output needs a homogeneous eps = lam bath via lambda_over_h");
        args.lambda_over_h = rp.series_lambda_over_h;
        args.n_spins = rp.series_n_spins;
        args.h_over_omega = rp.series_h_over_omega;
        return geophase::perturbative_delta_phi(geophase::SeriesKind::SpinBath, args);
    }
    return 0.0; // closed system: no correction
}

struct ColumnPlan {
    std::vector<std::string> names;
    bool phase{false};
    bool delta{false};
    bool perturbative{false};
    bool time_series{false};
    bool concurrence{false};
    bool entropy{false};
    bool factors{false};
    bool boson_factors{false};
};

ColumnPlan plan_columns(const ExperimentConfig& cfg) {
    ColumnPlan plan;
    for (const auto& axis : cfg.axes) plan.names.push_back(axis.name);
    plan.phase = cfg.has_output(OutputKind::GeoPhase);
    plan.delta = cfg.has_output(OutputKind::DeltaPhi);
    plan.perturbative = cfg.has_output(OutputKind::Perturbative);
    plan.concurrence = cfg.has_output(OutputKind::Concurrence);
    plan.entropy = cfg.has_output(OutputKind::Entropy);
    plan.factors = cfg.has_output(OutputKind::Factors);
    plan.time_series = cfg.wants_time_series();

    if ((plan.phase || plan.delta || plan.perturbative) && cfg.state.general)
        throw config_error("config: geometric-phase outputs require a Werner state");
    if (plan.factors && cfg.env_kind == EnvKind::Closed)
        throw config_error("config: 'factors' output requires a boson or spin environment");
    plan.boson_factors = cfg.env_kind == EnvKind::Boson;

    if (plan.phase) {
        plan.names.push_back("phi_total");
        plan.names.push_back("phi_unitary");
    }
    if (plan.delta) plan.names.push_back("delta_phi");
    if (plan.perturbative) {
        plan.names.push_back("phi_perturbative");
        plan.names.push_back("delta_phi_perturbative");
    }
    if (plan.time_series) plan.names.push_back("t");
    if (plan.concurrence) plan.names.push_back("concurrence");
    if (plan.entropy) plan.names.push_back("entropy");
    if (plan.factors) {
        if (plan.boson_factors)
            for (const char* n :
                 {"gamma1", "gamma2", "gamma12", "gamma12_tilde_sq", "lambda12_phase"})
                plan.names.push_back(n);
        else
            for (const char* n : {"q_factor", "p_factor"}) plan.names.push_back(n);
    }
    plan.names.push_back("status");
    return plan;
}

void eval_point(const ExperimentConfig& cfg, const ColumnPlan& plan, std::size_t point_index,
                std::vector<std::vector<Cell>>& rows, std::size_t row_base,
                std::size_t rows_per_point) {
    const AxisValues ax = axis_values_at(cfg, point_index);
    std::vector<Cell> prefix;
    for (const auto& axis : cfg.axes) {
        if (axis.name == "p")
            prefix.emplace_back(ax.p);
        else if (axis.name == "r")
            prefix.emplace_back(ax.r);
        else if (axis.name == "gamma0")
            prefix.emplace_back(ax.gamma0);
        else if (axis.name == "lambda_over_h")
            prefix.emplace_back(ax.lambda_over_h);
        else
            prefix.emplace_back(static_cast<double>(ax.n_spins));
    }

    auto fill_rows = [&](const std::vector<std::vector<Cell>>& bodies, const std::string& status) {
        for (std::size_t i = 0; i < rows_per_point; ++i) {
            std::vector<Cell> row = prefix;
            if (i < bodies.size())
                row.insert(row.end(), bodies[i].begin(), bodies[i].end());
            else
                row.resize(plan.names.size() - 1);
            row.resize(plan.names.size() - 1);
            row.emplace_back(status);
            rows[row_base + i] = std::move(row);
        }
    };

    try {
        const ResolvedPoint rp = resolve_point(cfg, ax, point_index);

        std::vector<Cell> scalars;
        if (plan.phase || plan.delta) {
            const auto res = compute_phase(cfg, rp);
            if (plan.phase) {
                scalars.emplace_back(res.phi_total);
                scalars.emplace_back(res.phi_unitary);
            }
            if (plan.delta) scalars.emplace_back(res.delta_phi);
        }
        if (plan.perturbative) {
            const double d = compute_perturbative_delta(cfg, rp, ax);
            scalars.emplace_back(kTwoPi * cfg.run.cycles * (1.0 - ax.p) + d);
            scalars.emplace_back(d);
        }

        std::vector<std::vector<Cell>> bodies;
        if (plan.time_series) {
            const double t_end = cfg.time.cycles * kTwoPi / rp.omega;
            const auto traj =
                evolution::trajectory(rp.initial, rp.system, rp.env, t_end, cfg.time.samples);
            bodies.resize(cfg.time.samples);
            for (std::size_t j = 0; j < cfg.time.samples; ++j) {
                auto& body = bodies[j];
                body = scalars;
                body.emplace_back(traj.times[j] * rp.omega); // t in units of 1/Omega
                if (plan.concurrence)
                    body.emplace_back(entanglement::concurrence_wootters(traj.states[j]));
                if (plan.entropy) body.emplace_back(entanglement::linear_entropy(traj.states[j]));
                if (plan.factors) {
                    if (plan.boson_factors) {
                        const auto f = boson_env::boson_factors(
                            std::get<boson_env::BosonBathSpec>(rp.env), traj.times[j]);
                        body.emplace_back(f.gamma1);
                        body.emplace_back(f.gamma2);
                        body.emplace_back(f.gamma12);
                        body.emplace_back(f.gamma12_tilde_sq);
                        body.emplace_back(f.lambda12_phase);
                    } else {
                        const auto& bath = std::get<spin_env::SpinBathSpec>(rp.env);
                        body.emplace_back(spin_env::q_factor(bath, traj.times[j]));
                        body.emplace_back(spin_env::p_factor(bath, traj.times[j]));
                    }
                }
            }
        } else {
            bodies.push_back(scalars);
        }
        fill_rows(bodies, "ok");
    } catch (const std::exception& e) {
        fill_rows({}, e.what());
    }
}

} // namespace

Table run_sweep(const ExperimentConfig& cfg, unsigned workers_override) {
    const ColumnPlan plan = plan_columns(cfg);

    std::size_t points = 1;
    for (const auto& axis : cfg.axes) points *= axis.values.size();
    const std::size_t rows_per_point = plan.time_series ? cfg.time.samples : 1;

    Table table;
    table.columns = plan.names;
    table.rows.resize(points * rows_per_point);

    unsigned workers = workers_override ? workers_override : cfg.run.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(points, 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t point = next.fetch_add(1);
            if (point >= points) return;
            eval_point(cfg, plan, point, table.rows, point * rows_per_point, rows_per_point);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return table;
}

} // namespace bigeo::sweep
