// boson_env.hpp — zero-temperature bosonic-bath decoherence and dissipation factors
//
// Two analytic families exist on purpose. The MainText convention carries the
// standard closed forms, Gamma_ohmic = (1+L^2 t^2)^(-2 g0) and the supraohmic
// exponential; it is the default and drives every shipped preset. The
// Appendix convention keeps the raw kernel pipeline J -> nu -> F -> Gamma
// (antiderivatives precomputed symbolically), which yields
// (1+L^2 t^2)^(-g0/2) for the ohmic case — an exponent smaller by exactly 4.
// The two normalizations do not agree; both stay accessible so cross-checks
// can exercise either side.

#pragma once

#include "bigeo/states.hpp"

namespace bigeo::boson_env {

enum class Spectral { Ohmic, Supraohmic };
enum class PrefactorConvention { MainText, Appendix };

inline const char* to_string(Spectral s) {
    return s == Spectral::Ohmic ? "ohmic" : "supraohmic";
}

struct BosonBathSpec {
    Spectral spectral{Spectral::Ohmic};
    double gamma01{0.0};  // dimensionless coupling of qubit 1
    double gamma02{0.0};  // of qubit 2
    double gamma012{0.0}; // cross coupling, ~ sqrt(gamma01*gamma02) physically
    double cutoff_lambda{100.0};
    PrefactorConvention convention{PrefactorConvention::MainText};

    void validate() const {
        if (gamma01 < 0.0 || gamma02 < 0.0 || gamma012 < 0.0)
            throw domain_error("BosonBathSpec: coupling constants must be >= 0");
        if (!(cutoff_lambda > 0.0)) throw domain_error("BosonBathSpec: cutoff_lambda must be > 0");
    }

    static BosonBathSpec equal_couplings(Spectral s, double gamma0, double lambda,
                                         PrefactorConvention c = PrefactorConvention::MainText) {
        return BosonBathSpec{s, gamma0, gamma0, gamma0, lambda, c};
    }

    bool couplings_physical() const { return gamma012 * gamma012 <= gamma01 * gamma02 + 1e-15; }
};

// All five factors at one instant. gamma1/2/12 live in (0,1]; the tilde factor
// has a positive exponent and may exceed 1 in isolation.
struct BosonFactors {
    double gamma1{1.0};
    double gamma2{1.0};
    double gamma12{1.0};
    double gamma12_tilde_sq{1.0};
    double lambda12_phase{0.0}; // exponent of Lambda_12 = e^{i phase}, radians

    double damping_theta() const { return gamma1 * gamma2 * gamma12 * gamma12; }
    double damping_mu() const { return gamma1 * gamma2 * gamma12_tilde_sq; }
};

// Main-text ohmic factor (1 + L^2 t^2)^(-2 g0). Throws for t < 0.
double gamma_ohmic(double gamma0, double lambda, double t);

// Main-text supraohmic factor exp(-4 g0 L^4 t^4 / (1 + L^2 t^2)^2); tends to
// exp(-4 g0) for L t >> 1.
double gamma_supraohmic(double gamma0, double lambda, double t);

// int_0^t F with F the time integral of the noise kernel, in the given
// convention. Gamma_i = exp(-4 * this), tilde-squared = exp(+8 * this).
double integral_noise_F(Spectral s, PrefactorConvention c, double gamma0, double lambda, double t);

// Single decoherence factor in the given convention.
double decoherence_gamma(Spectral s, PrefactorConvention c, double gamma0, double lambda, double t);

// Spectral density J(omega) = (g0/4) omega^n L^(1-n) e^(-omega/L), n = 1 or 3.
double spectral_density(Spectral s, double gamma0, double lambda, double omega);

// Raw Appendix pipeline pieces, used by cross-checks and the phase:
//   nu(t)  = int_0^inf J cos(omega t) domega          (T = 0 noise kernel)
//   F(t)   = int_0^t nu                               (noise_kernel_integral)
//   eta(t) = int_0^inf J sin(omega t) domega          (dissipation kernel)
//   G(t)   = int_0^t eta
double noise_kernel_closed(Spectral s, double gamma0, double lambda, double t);
double noise_kernel_integral(Spectral s, double gamma0, double lambda, double t);
double dissipation_kernel(Spectral s, double gamma0, double lambda, double t);
double dissipation_integral_G(Spectral s, double gamma0, double lambda, double t);

// Noise kernel nu_i of the bath's coupling `which` in {1, 2, 12}.
double noise_kernel(const BosonBathSpec& spec, int which, double t);

// Phase exponent of Lambda_12: 4 int_0^t G_12. Pure phase on the single-qubit
// coherences of the general-state matrix; zero when gamma012 = 0.
double dissipation_phase(const BosonBathSpec& spec, double t);

// Assemble all factors at time t.
BosonFactors boson_factors(const BosonBathSpec& spec, double t);

// Damping of the surviving Werner coherence: Theta -> Gamma1 Gamma2 Gamma12^2,
// Mu -> Gamma1 Gamma2 GammaTilde12^2. Computed through a single exponent sum so
// the equal-couplings cancellation in the Mu branch is exact.
double coherence_damping(const BosonBathSpec& spec, Branch branch, double t);

} // namespace bigeo::boson_env
