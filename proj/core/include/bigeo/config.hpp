// config.hpp — experiment configuration: schema, parser, sweep axes
//
// The config format is a flat INI/TOML-like text: [section.sub] headers,
// key = value entries, '#' comments. Values are numbers, booleans, quoted
// strings, bare words, or [comma, separated, lists]. Unknown keys are errors
// (fail loud), reported with their full path.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigeo/boson_env.hpp"
#include "bigeo/spin_env.hpp"
#include "bigeo/states.hpp"

namespace bigeo::sweep {

enum class EnvKind { Closed, Boson, Spin };
enum class PhaseMethod { Reduced, Kinematic };
enum class OutputKind { GeoPhase, DeltaPhi, Perturbative, Concurrence, Entropy, Factors };

struct BosonEnvConfig {
    boson_env::Spectral spectral{boson_env::Spectral::Ohmic};
    std::optional<double> gamma0; // sets all three couplings when present
    double gamma01{0.0};
    double gamma02{0.0};
    double gamma012{0.0};
    std::optional<double> cutoff_lambda;   // absolute frequency; wins over the ratio
    double cutoff_lambda_over_omega{100.0}; // in units of the branch cycle frequency
    boson_env::PrefactorConvention convention{boson_env::PrefactorConvention::MainText};
};

struct SpinEnvConfig {
    std::size_t n_spins{1};
    double h{1.0};
    std::optional<double> lambda_over_h; // homogeneous couplings in units of h
    std::optional<double> eps_over_h;    // defaults to lambda_over_h
    std::optional<double> eps;           // absolute couplings (alternative to the ratios)
    std::optional<double> lam;
    bool random{false};          // draw couplings from [coupling_min, coupling_max] * h
    double coupling_min{0.0};
    double coupling_max{0.0};
};

struct StateConfig {
    bool general{false};
    Branch branch{Branch::Theta};
    double r{1.0};
    double p{0.5};
    GeneralInitialState amplitudes; // used when general = true
};

struct SweepAxis {
    std::string name; // p | gamma0 | lambda_over_h | n_spins | r
    std::vector<double> values;
};

struct RunConfig {
    int cycles{1};
    std::vector<OutputKind> outputs{OutputKind::GeoPhase, OutputKind::DeltaPhi};
    PhaseMethod method{PhaseMethod::Reduced};
    std::size_t samples_per_cycle{2001};
    std::uint64_t seed{0};
    unsigned workers{0}; // 0 = hardware concurrency
};

struct TimeConfig {
    double cycles{1.0}; // time-series span in branch cycles (may be fractional)
    std::size_t samples{501};
};

struct ExperimentConfig {
    SystemParams system{0.5, 0.5, 0.0};
    EnvKind env_kind{EnvKind::Closed};
    BosonEnvConfig boson;
    SpinEnvConfig spin;
    StateConfig state;
    std::vector<SweepAxis> axes; // fixed order: p, gamma0, lambda_over_h, n_spins, r
    RunConfig run;
    TimeConfig time;

    bool has_output(OutputKind k) const {
        for (auto o : run.outputs)
            if (o == k) return true;
        return false;
    }
    bool wants_time_series() const {
        return has_output(OutputKind::Concurrence) || has_output(OutputKind::Entropy) ||
               has_output(OutputKind::Factors);
    }
};

// Parse config text. Throws config_error with the offending key path / line.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

} // namespace bigeo::sweep
