#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bigeo/evolution.hpp"
#include "bigeo/rng.hpp"

using namespace bigeo;
using namespace bigeo::evolution;
using boson_env::BosonBathSpec;
using boson_env::Spectral;
using spin_env::SpinBathSpec;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const SystemParams kSys{0.5, 0.5, 0.0};

GeneralInitialState random_state(Rng& rng) {
    Vector4c psi;
    for (int i = 0; i < 4; ++i) psi(i) = complexd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    psi.normalize();
    return GeneralInitialState{psi(0), psi(1), psi(2), psi(3)};
}

} // namespace

TEST_SUITE("evolution") {

TEST_CASE("general state at t=0 is the initial projector") {
    Rng rng(7);
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi0 = random_state(rng);
        const auto rho = rho_boson_general(psi0, kSys, bath, 0.0);
        const Matrix4c expected = psi0.ket() * psi0.ket().adjoint();
        CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("GHZ-style amplitudes: the (0,3) coherence carries the full damping") {
    GeneralInitialState psi0;
    psi0.alpha = 1.0 / std::sqrt(2.0);
    psi0.beta = psi0.zeta = 0.0;
    psi0.delta = 1.0 / std::sqrt(2.0);
    const double g0 = 0.004;
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, g0, 100.0);
    for (double t : {0.1, 1.0, 4.0}) {
        const auto rho = rho_boson_general(psi0, kSys, bath, t);
        const double x = 100.0 * t;
        const complexd expected =
            0.5 * std::polar(std::pow(1.0 + x * x, -8.0 * g0), -(kSys.omega_theta()) * t);
        CHECK(std::abs(rho(0, 3) - expected) < 1e-12);
    }
}

TEST_CASE("closed system: pure unitary phases") {
    GeneralInitialState psi0;
    psi0.alpha = 0.5;
    psi0.beta = complexd(0.0, 0.5);
    psi0.zeta = 0.5;
    psi0.delta = complexd(-0.5, 0.0);
    const SystemParams sys{0.7, 0.4, 0.15}; // gamma_qq exercised
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.0, 100.0);
    const double t = 1.234;
    const auto rho = rho_boson_general(psi0, sys, bath, t);
    const complexd a = psi0.alpha, d = psi0.delta;
    CHECK(std::abs(rho(0, 3) - a * std::conj(d) *
                                   std::polar(1.0, -(sys.omega1 + sys.omega2) * t)) < 1e-14);
    // single-qubit coherence: phase (2 gamma + Omega_2) t
    const complexd b = psi0.beta;
    CHECK(std::abs(rho(0, 1) - a * std::conj(b) *
                                   std::polar(1.0, -(2.0 * sys.gamma_qq + sys.omega2) * t)) <
          1e-14);
}

TEST_CASE("lambda12 phase pattern on single-qubit coherences") {
    GeneralInitialState psi0;
    psi0.alpha = 0.5;
    psi0.beta = 0.5;
    psi0.zeta = 0.5;
    psi0.delta = 0.5;
    const SystemParams sys{0.6, 0.4, 0.1};
    const BosonBathSpec bath{Spectral::Ohmic, 0.003, 0.002, 0.0024, 100.0};
    const double t = 0.6;
    const auto f = boson_env::boson_factors(bath, t);
    const auto rho = rho_boson_general(psi0, sys, bath, t);

    CHECK(std::abs(rho(0, 1)) == doctest::Approx(0.25 * f.gamma2).epsilon(1e-12));
    const double expected_arg = -(2.0 * sys.gamma_qq + sys.omega2) * t + f.lambda12_phase;
    const double arg_diff =
        std::remainder(std::arg(rho(0, 1)) - expected_arg, kTwoPi);
    CHECK(std::abs(arg_diff) < 1e-12);

    // (1,3) carries the conjugate dissipation phase
    const double expected_arg_24 = -(sys.omega1 - 2.0 * sys.gamma_qq) * t - f.lambda12_phase;
    CHECK(std::abs(std::remainder(std::arg(rho(1, 3)) - expected_arg_24, kTwoPi)) < 1e-12);
}

TEST_CASE("closed Bell state: projector with a rotating coherence phase") {
    const WernerSpec mes{1.0, 0.5, Branch::Theta};
    for (double t : {0.0, 0.7, 3.9}) {
        const auto rho = rho_werner_from_damping(mes, kSys, 1.0, t);
        CHECK(rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rho(3, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(rho(0, 3) - 0.5 * std::polar(1.0, -kSys.omega_theta() * t)) < 1e-14);
        CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("theta coherence magnitude after one cycle: sqrt(3)/4 times the damping") {
    const WernerSpec w{1.0, 0.25, Branch::Theta};
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.002, 100.0);
    const auto rho = rho_boson_werner(w, kSys, bath, kTwoPi);
    const double expected = std::sqrt(3.0) / 4.0 *
                            boson_env::coherence_damping(bath, Branch::Theta, kTwoPi);
    CHECK(std::abs(rho(0, 3)) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("werner-general consistency at r = 1") {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.006, 100.0);
    for (Branch b : {Branch::Theta, Branch::Mu}) {
        for (double p : {0.0, 0.3, 0.5, 0.85, 1.0}) {
            const WernerSpec w{1.0, p, b};
            for (double t : {0.0, 0.4, 2.9}) {
                const auto via_werner = rho_boson_werner(w, kSys, bath, t);
                const auto via_general =
                    rho_boson_general(branch_ket(b, p), kSys, bath, t);
                CHECK((via_werner.matrix() - via_general.matrix()).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("mixing oracle at r < 1") {
    // rho(t) is linear in rho(0) and the white-noise part is a fixed point, so
    // the Werner constructor must equal (1-r)/4 I + r * (pure-state evolution).
    const BosonBathSpec bath{Spectral::Supraohmic, 0.02, 0.01, 0.012, 100.0};
    for (double r : {0.4, 0.8}) {
        for (double p : {0.2, 0.5, 0.7}) {
            const WernerSpec w{r, p, Branch::Mu};
            for (double t : {0.15, 1.1}) {
                const auto direct = rho_boson_werner(w, kSys, bath, t);
                const auto pure = rho_boson_general(branch_ket(Branch::Mu, p), kSys, bath, t);
                const Matrix4c mixed =
                    ((1.0 - r) / 4.0) * Matrix4c::Identity() + r * pure.matrix();
                CHECK((direct.matrix() - mixed).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("spin werner: t=0 and decoherence-free cases") {
    const auto bath = SpinBathSpec::homogeneous(10, 1.0, 0.2, 0.2);
    const WernerSpec w{0.9, 0.3, Branch::Theta};
    const auto rho0 = rho_spin_werner(w, kSys, bath, 0.0);
    CHECK((rho0.matrix() - werner_density(w).matrix()).cwiseAbs().maxCoeff() < 1e-14);

    // decoupled bath: coherence magnitude constant
    const auto off = SpinBathSpec::homogeneous(10, 1.0, 0.0, 0.0);
    const WernerSpec pure{1.0, 0.3, Branch::Theta};
    const double expected = std::sqrt(0.3 * 0.7);
    for (double t : {0.5, 2.0, 5.5})
        CHECK(std::abs(rho_spin_werner(pure, kSys, off, t)(0, 3)) ==
              doctest::Approx(expected).epsilon(1e-13));

    // eps = lam: the mu coherence is protected
    const WernerSpec mes{1.0, 0.5, Branch::Mu};
    const SystemParams sysMu{1.5, 0.5, 0.0};
    for (double t : {0.5, 2.0, 5.5})
        CHECK(std::abs(rho_spin_werner(mes, sysMu, bath, t)(1, 2)) ==
              doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("trajectory: grid, trace, purity endpoints") {
    const WernerSpec w{1.0, 0.25, Branch::Theta};
    const auto traj = trajectory(InitialState{w}, kSys, Closed{}, kTwoPi, 2);
    CHECK(traj.size() == 2);
    CHECK(traj.times[0] == 0.0);
    CHECK(traj.times[1] == doctest::Approx(kTwoPi));
    for (const auto& s : traj.states) CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-12));

    const auto fine = trajectory(InitialState{w}, kSys, Closed{}, kTwoPi, 1001);
    CHECK(fine.times[1] - fine.times[0] == doctest::Approx(kTwoPi / 1000.0).epsilon(1e-14));
    for (std::size_t j = 0; j < fine.size(); j += 100)
        CHECK(fine.states[j].matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(trajectory(InitialState{w}, kSys, Closed{}, kTwoPi, 1), precondition_error);
    CHECK_THROWS_AS(trajectory(InitialState{w}, kSys, Closed{}, 0.0, 10), precondition_error);
}

TEST_CASE("diagonal invariance along trajectories") {
    Rng rng(31);
    const auto boson = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.05, 100.0);
    const auto spin = SpinBathSpec::homogeneous(6, 1.0, 0.4, 0.1);
    const auto psi0 = random_state(rng);
    const WernerSpec w{0.8, 0.35, Branch::Mu};

    for (const auto& env : {EnvironmentSpec{boson}, EnvironmentSpec{spin}}) {
        const InitialState init =
            std::holds_alternative<BosonBathSpec>(env) ? InitialState{psi0} : InitialState{w};
        const auto traj = trajectory(init, kSys, env, kTwoPi, 41);
        const auto d0 = traj.states.front().diagonal();
        for (const auto& s : traj.states) {
            const auto d = s.diagonal();
            for (int i = 0; i < 4; ++i) CHECK(d[i] == doctest::Approx(d0[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("positivity along trajectories with physical couplings") {
    Rng rng(63);
    for (int trial = 0; trial < 8; ++trial) {
        const double g1 = rng.uniform(0.0, 0.1);
        const double g2 = rng.uniform(0.0, 0.1);
        const BosonBathSpec bath{trial % 2 ? Spectral::Ohmic : Spectral::Supraohmic, g1, g2,
                                 std::sqrt(g1 * g2) * rng.uniform(0.0, 1.0), 100.0};
        const auto psi0 = random_state(rng);
        const auto traj = trajectory(InitialState{psi0}, kSys, EnvironmentSpec{bath}, kTwoPi, 51);
        for (const auto& s : traj.states) {
            const auto es = eigensystem(s); // throws below -1e-10
            CHECK(es.eigenvalues[3] > -1e-10);
        }
    }
}

TEST_CASE("purity decreases monotonically for theta/ohmic/r=1") {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.02, 100.0);
    const WernerSpec w{1.0, 0.3, Branch::Theta};
    const auto traj = trajectory(InitialState{w}, kSys, EnvironmentSpec{bath}, kTwoPi, 101);
    double prev = 2.0;
    for (const auto& s : traj.states) {
        const double pur = s.purity();
        CHECK(pur <= prev + 1e-13);
        prev = pur;
    }
}

TEST_CASE("general states with spin baths are unsupported") {
    GeneralInitialState psi0;
    const auto bath = SpinBathSpec::homogeneous(4, 1.0, 0.2, 0.1);
    CHECK_THROWS_AS(rho_at(InitialState{psi0}, kSys, EnvironmentSpec{bath}, 0.5), regime_error);
}

} // TEST_SUITE
