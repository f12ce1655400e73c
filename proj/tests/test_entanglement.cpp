#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bigeo/entanglement.hpp"
#include "bigeo/rng.hpp"

using namespace bigeo;
using namespace bigeo::entanglement;
using boson_env::BosonBathSpec;
using boson_env::Spectral;
using spin_env::SpinBathSpec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const SystemParams kSys{0.5, 0.5, 0.0};

Vector4c random_ket(Rng& rng) {
    Vector4c psi;
    for (int i = 0; i < 4; ++i) psi(i) = complexd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    psi.normalize();
    return psi;
}

// Random X-shaped density matrix with controlled coherences.
DensityMatrix4 random_x_state(Rng& rng) {
    double d[4];
    double sum = 0.0;
    for (double& v : d) {
        v = rng.uniform(0.05, 1.0);
        sum += v;
    }
    for (double& v : d) v /= sum;
    const double c14 = rng.uniform(0.0, std::sqrt(d[0] * d[3]));
    const double c23 = rng.uniform(0.0, std::sqrt(d[1] * d[2]));
    Matrix4c m = Matrix4c::Zero();
    for (int i = 0; i < 4; ++i) m(i, i) = d[i];
    m(0, 3) = std::polar(c14, rng.uniform(0.0, kTwoPi));
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = std::polar(c23, rng.uniform(0.0, kTwoPi));
    m(2, 1) = std::conj(m(1, 2));
    return DensityMatrix4::from_matrix(m);
}

// Independent X-state concurrence formula.
double x_state_concurrence(const DensityMatrix4& rho) {
    const double a = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
    const double b = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
    return 2.0 * std::max({0.0, a, b});
}

} // namespace

TEST_SUITE("entanglement") {

TEST_CASE("wootters: Bell state, product state, maximally mixed") {
    CHECK(concurrence_wootters(werner_density({1.0, 0.5, Branch::Theta})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_wootters(werner_density({1.0, 0.0, Branch::Theta})) < 1e-12);
    CHECK(concurrence_wootters(DensityMatrix4::from_matrix(0.25 * Matrix4c::Identity())) < 1e-12);
}

TEST_CASE("wootters equals 2|alpha delta - beta zeta| on random pure states") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector4c psi = random_ket(rng);
        const double expected = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
        const double got = concurrence_wootters(DensityMatrix4::pure(psi));
        CHECK(got == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("wootters equals the X-state closed formula on random X states") {
    Rng rng(515);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random_x_state(rng);
        CHECK(concurrence_wootters(rho) ==
              doctest::Approx(x_state_concurrence(rho)).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("boson closed form: values and supra/ohmic ordering") {
    const auto closed = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.0, 100.0);
    CHECK(concurrence_closed_boson({1.0, 0.5, Branch::Theta}, closed, 3.0) ==
          doctest::Approx(1.0).epsilon(1e-13));

    const auto ohm = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    const auto sup = BosonBathSpec::equal_couplings(Spectral::Supraohmic, 0.01, 100.0);
    for (double t : {0.1, 1.0, 5.0}) {
        CHECK(concurrence_closed_boson({1.0, 0.3, Branch::Theta}, sup, t) >
              concurrence_closed_boson({1.0, 0.3, Branch::Theta}, ohm, t));
    }

    // Mu with equal couplings: C_B = 2 sqrt(p(1-p)) at all times
    CHECK(concurrence_closed_boson({1.0, 0.5, Branch::Mu}, ohm, 2.2) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(concurrence_closed_boson({0.7, 0.5, Branch::Theta}, ohm, 1.0), regime_error);
}

TEST_CASE("spin closed form: zero crossing of Q kills the concurrence") {
    // N = 1, h = 0: Q = cos(2 c t); at t = pi/(4c) the coherence vanishes.
    const double c = 0.6;
    const auto bath = SpinBathSpec::homogeneous(1, 0.0, 0.7 * c, 0.3 * c);
    const WernerSpec w{1.0, 0.3, Branch::Theta};
    const double t0 = kPi / (4.0 * c);
    CHECK(std::abs(concurrence_closed_spin(w, bath, t0)) < 1e-13);
    CHECK(std::abs(concurrence_wootters(evolution::rho_spin_werner(w, kSys, bath, t0))) < 1e-13);
    // Past the crossing Q < 0: the literal form goes negative, Wootters is |Q|.
    const double t1 = kPi / (2.0 * c);
    CHECK(concurrence_closed_spin(w, bath, t1) < 0.0);
    CHECK(concurrence_wootters(evolution::rho_spin_werner(w, kSys, bath, t1)) ==
          doctest::Approx(-concurrence_closed_spin(w, bath, t1)).epsilon(1e-12));
}

TEST_CASE("radical C_B variant: reduction and disagreement beyond p = 1/2") {
    CHECK(concurrence_mu_radical(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_mu_radical(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(concurrence_mu_radical(0.3) == doctest::Approx(2.0 * std::sqrt(0.21)).epsilon(1e-12));
    // p > 1/2: the printed expression collapses to 2(1-p)
    CHECK(concurrence_mu_radical(0.85) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(concurrence_mu_radical(0.85) !=
          doctest::Approx(2.0 * std::sqrt(0.85 * 0.15)).epsilon(1e-3));
}

TEST_CASE("entropy: pure, maximally mixed, half-half") {
    CHECK(linear_entropy(werner_density({1.0, 0.37, Branch::Theta})) < 1e-10);
    CHECK(linear_entropy(DensityMatrix4::from_matrix(0.25 * Matrix4c::Identity())) ==
          doctest::Approx(2.0).epsilon(1e-12));
    Matrix4c half = Matrix4c::Zero();
    half(0, 0) = 0.5;
    half(3, 3) = 0.5;
    CHECK(linear_entropy(DensityMatrix4::from_matrix(half)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy reduces to the two-branch expression at r = 1") {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.01, 100.0);
    const WernerSpec w{1.0, 0.3, Branch::Theta};
    for (double t : {0.2, 1.0, 4.0}) {
        const double d = boson_env::coherence_damping(bath, Branch::Theta, t);
        const double disc = std::sqrt(1.0 + 4.0 * 0.3 * 0.7 * (d * d - 1.0));
        const double ep = 0.5 * (1.0 + disc), em = 0.5 * (1.0 - disc);
        const double expected = -ep * std::log2(ep) - em * std::log2(em);
        CHECK(linear_entropy(evolution::rho_boson_werner(w, kSys, bath, t)) ==
              doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("entropy bounds on random states") {
    Rng rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = random_x_state(rng);
        const double s = linear_entropy(rho);
        CHECK(s >= 0.0);
        CHECK(s <= 2.0 + 1e-12);
    }
}

TEST_CASE("entropy rises while concurrence falls along a damped trajectory") {
    const auto bath = BosonBathSpec::equal_couplings(Spectral::Ohmic, 0.02, 100.0);
    const WernerSpec w{1.0, 0.3, Branch::Theta};
    const auto traj = evolution::trajectory(evolution::InitialState{w}, kSys,
                                            evolution::EnvironmentSpec{bath}, kTwoPi, 101);
    const auto samples = sample_trajectory(traj);
    for (std::size_t j = 1; j < samples.size(); ++j) {
        CHECK(samples[j].entropy >= samples[j - 1].entropy - 1e-12);
        CHECK(samples[j].concurrence <= samples[j - 1].concurrence + 1e-12);
        CHECK(samples[j].concurrence >= 0.0);
        CHECK(samples[j].concurrence <= 1.0 + 1e-12);
        CHECK(samples[j].entropy <= 2.0);
    }
    CHECK(samples.front().t == 0.0);
}

TEST_CASE("phase/concurrence ratio") {
    CHECK(phase_concurrence_ratio(0.5) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(phase_concurrence_ratio(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(phase_concurrence_ratio(0.2) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    CHECK_THROWS_AS(phase_concurrence_ratio(0.0), domain_error);
    // consistency with phi_U = 2 pi (1-p) and C_A = 2 sqrt(p(1-p))
    for (double p : {0.1, 0.25, 0.5, 0.8}) {
        CHECK(phase_concurrence_ratio(p) * 2.0 * std::sqrt(p * (1.0 - p)) ==
              doctest::Approx(kTwoPi * (1.0 - p)).epsilon(1e-12));
    }
}

} // TEST_SUITE
