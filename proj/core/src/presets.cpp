#include "bigeo/presets.hpp"

namespace bigeo::presets {

namespace {

constexpr const char* kCommon = R"cfg(
[system]
omega1 = 0.5
omega2 = 0.5
)cfg";

std::string boson_surface(const char* spectral, const char* outputs) {
    return std::string(kCommon) + R"cfg(
[env]
kind = "boson"
[env.boson]
spectral = ")cfg" + spectral +
           R"cfg("
cutoff_lambda_over_omega = 100.0
[state]
branch = "theta"
r = 1.0
[sweep.p]
from = 0.0
to = 1.0
steps = 101
[sweep.gamma0]
values = [0.0001, 0.0005, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1]
[run]
outputs = )cfg" + outputs +
           "\n";
}

std::string boson_overlay(const char* spectral) {
    return std::string(kCommon) + R"cfg(
[env]
kind = "boson"
[env.boson]
spectral = ")cfg" + spectral +
           R"cfg("
cutoff_lambda_over_omega = 100.0
[state]
branch = "theta"
r = 1.0
[sweep.p]
from = 0.0
to = 1.0
steps = 101
[sweep.gamma0]
values = [0.002, 0.005, 0.01, 0.02]
[run]
outputs = ["geophase", "delta_phi", "perturbative"]
)cfg";
}

std::string boson_timeseries(const char* spectral, const char* gamma0) {
    return std::string(kCommon) + R"cfg(
[env]
kind = "boson"
[env.boson]
spectral = ")cfg" + spectral +
           R"cfg("
gamma0 = )cfg" + gamma0 +
           R"cfg(
cutoff_lambda_over_omega = 100.0
[state]
branch = "theta"
r = 1.0
[sweep.p]
values = [0.01, 0.2, 0.5]
[run]
outputs = ["concurrence", "entropy"]
[time]
cycles = 1.0
samples = 1001
)cfg";
}

std::string spin_sweep(const char* outputs) {
    return std::string(kCommon) + R"cfg(
[env]
kind = "spin"
[env.spin]
n_spins = 100
h = 1.0
[state]
branch = "theta"
r = 1.0
[sweep.p]
from = 0.0
to = 1.0
steps = 101
[sweep.lambda_over_h]
values = [0.01, 0.02, 0.05, 0.1]
[run]
outputs = )cfg" + outputs +
           "\n";
}

std::string spin_timeseries(const char* n_spins, const char* lambdas, const char* ps,
                            const char* outputs) {
    return std::string(kCommon) + R"cfg(
[env]
kind = "spin"
[env.spin]
n_spins = )cfg" + n_spins +
           R"cfg(
h = 1.0
[state]
branch = "theta"
r = 1.0
[sweep.p]
values = )cfg" + ps +
           R"cfg(
[sweep.lambda_over_h]
values = )cfg" + lambdas +
           R"cfg(
[run]
outputs = )cfg" + outputs +
           R"cfg(
[time]
cycles = 8.0
samples = 2001
)cfg";
}

std::vector<Preset> build() {
    std::vector<Preset> p;
    p.push_back({"fig2", "ohmic bath: geometric phase vs (p, gamma0) surface",
                 boson_surface("ohmic", "[\"geophase\", \"delta_phi\"]")});
    p.push_back({"fig3", "ohmic bath: exact vs perturbative delta_phi overlay",
                 boson_overlay("ohmic")});
    p.push_back({"fig4", "supraohmic bath: geometric phase vs (p, gamma0) surface",
                 boson_surface("supraohmic", "[\"geophase\", \"delta_phi\"]")});
    p.push_back({"fig5", "supraohmic bath: exact vs perturbative delta_phi overlay",
                 boson_overlay("supraohmic")});
    p.push_back({"fig6", "ohmic gamma0 = 0.002: concurrence and entropy vs time",
                 boson_timeseries("ohmic", "0.002")});
    p.push_back({"fig6_supra", "supraohmic gamma0 = 0.002: concurrence and entropy vs time",
                 boson_timeseries("supraohmic", "0.002")});
    p.push_back({"fig7", "ohmic gamma0 = 0.1: concurrence and entropy vs time",
                 boson_timeseries("ohmic", "0.1")});
    p.push_back({"fig7_supra", "supraohmic gamma0 = 0.1: concurrence and entropy vs time",
                 boson_timeseries("supraohmic", "0.1")});
    p.push_back({"fig8", "spin bath N = 100: geometric phase vs (p, lambda/h)",
                 spin_sweep("[\"geophase\", \"delta_phi\"]")});
    p.push_back({"fig9", "spin bath N = 100: exact vs perturbative delta_phi overlay",
                 spin_sweep("[\"geophase\", \"delta_phi\", \"perturbative\"]")});
    p.push_back({"fig10", "spin bath N = 10: concurrence vs time across couplings",
                 spin_timeseries("10", "[0.01, 0.05, 0.1]", "[0.01, 0.2, 0.45]",
                                 "[\"concurrence\"]")});
    p.push_back({"fig10_n100", "spin bath N = 100: concurrence vs time (dotted reference)",
                 spin_timeseries("100", "[0.1]", "[0.01]", "[\"concurrence\"]")});
    p.push_back({"fig11", "spin bath N = 10, lambda/h = 0.1: concurrence and entropy vs time",
                 spin_timeseries("10", "[0.1]", "[0.1, 0.45]",
                                 "[\"concurrence\", \"entropy\"]")});
    p.push_back({"fig11_n100", "spin bath N = 100, lambda/h = 0.1: concurrence and entropy vs time",
                 spin_timeseries("100", "[0.1]", "[0.1, 0.45]",
                                 "[\"concurrence\", \"entropy\"]")});
    return p;
}

} // namespace

const std::vector<Preset>& all() {
    static const std::vector<Preset> presets = build();
    return presets;
}

const Preset& by_name(const std::string& name) {
    for (const auto& p : all())
        if (p.name == name) return p;
    throw config_error("presets: unknown preset '" + name + "' (try 'presets list')");
}

} // namespace bigeo::presets
