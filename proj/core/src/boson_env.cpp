#include "bigeo/boson_env.hpp"

#include <cmath>

namespace bigeo::boson_env {

namespace {

void require_time(double t) {
    if (t < 0.0) throw domain_error("boson_env: time must be >= 0");
}

// x = Lambda * t throughout.

double integral_F_maintext(Spectral s, double gamma0, double x) {
    const double x2 = x * x;
    if (s == Spectral::Ohmic) return 0.5 * gamma0 * std::log1p(x2);
    const double frac = x2 / (1.0 + x2);
    return gamma0 * frac * frac; // gamma0 x^4 / (1+x^2)^2
}

double integral_F_appendix(Spectral s, double gamma0, double x) {
    const double x2 = x * x;
    if (s == Spectral::Ohmic) return 0.125 * gamma0 * std::log1p(x2);
    const double u = 1.0 + x2;
    return 0.25 * gamma0 * x2 * (x2 + 3.0) / (u * u);
}

} // namespace

double integral_noise_F(Spectral s, PrefactorConvention c, double gamma0, double lambda, double t) {
    require_time(t);
    const double x = lambda * t;
    return c == PrefactorConvention::MainText ? integral_F_maintext(s, gamma0, x)
                                              : integral_F_appendix(s, gamma0, x);
}

double decoherence_gamma(Spectral s, PrefactorConvention c, double gamma0, double lambda, double t) {
    return std::exp(-4.0 * integral_noise_F(s, c, gamma0, lambda, t));
}

double gamma_ohmic(double gamma0, double lambda, double t) {
    return decoherence_gamma(Spectral::Ohmic, PrefactorConvention::MainText, gamma0, lambda, t);
}

double gamma_supraohmic(double gamma0, double lambda, double t) {
    return decoherence_gamma(Spectral::Supraohmic, PrefactorConvention::MainText, gamma0, lambda, t);
}

double spectral_density(Spectral s, double gamma0, double lambda, double omega) {
    if (omega < 0.0) throw domain_error("spectral_density: omega must be >= 0");
    const double base = 0.25 * gamma0 * std::exp(-omega / lambda);
    if (s == Spectral::Ohmic) return base * omega;
    return base * omega * omega * omega / (lambda * lambda);
}

double noise_kernel_closed(Spectral s, double gamma0, double lambda, double t) {
    require_time(t);
    const double x = lambda * t;
    const double x2 = x * x;
    const double u = 1.0 + x2;
    if (s == Spectral::Ohmic) return 0.25 * gamma0 * lambda * lambda * (1.0 - x2) / (u * u);
    return 1.5 * gamma0 * lambda * lambda * (1.0 - 6.0 * x2 + x2 * x2) / (u * u * u * u);
}

double noise_kernel_integral(Spectral s, double gamma0, double lambda, double t) {
    require_time(t);
    const double x = lambda * t;
    const double x2 = x * x;
    const double u = 1.0 + x2;
    if (s == Spectral::Ohmic) return 0.25 * gamma0 * lambda * x / u;
    return 0.5 * gamma0 * lambda * x * (3.0 - x2) / (u * u * u);
}

double dissipation_kernel(Spectral s, double gamma0, double lambda, double t) {
    require_time(t);
    const double x = lambda * t;
    const double x2 = x * x;
    const double u = 1.0 + x2;
    if (s == Spectral::Ohmic) return 0.5 * gamma0 * lambda * lambda * x / (u * u);
    return 6.0 * gamma0 * lambda * lambda * x * (1.0 - x2) / (u * u * u * u);
}

double dissipation_integral_G(Spectral s, double gamma0, double lambda, double t) {
    require_time(t);
    const double x = lambda * t;
    const double x2 = x * x;
    const double u = 1.0 + x2;
    if (s == Spectral::Ohmic) return 0.25 * gamma0 * lambda * x2 / u;
    return gamma0 * lambda * (0.5 + 1.5 / (u * u) - 2.0 / (u * u * u));
}

double noise_kernel(const BosonBathSpec& spec, int which, double t) {
    spec.validate();
    double g = 0.0;
    switch (which) {
        case 1: g = spec.gamma01; break;
        case 2: g = spec.gamma02; break;
        case 12: g = spec.gamma012; break;
        default: throw domain_error("noise_kernel: which must be 1, 2 or 12");
    }
    return noise_kernel_closed(spec.spectral, g, spec.cutoff_lambda, t);
}

double dissipation_phase(const BosonBathSpec& spec, double t) {
    spec.validate();
    require_time(t);
    const double x = spec.cutoff_lambda * t;
    if (spec.spectral == Spectral::Ohmic) return spec.gamma012 * (x - std::atan(x));
    const double u = 1.0 + x * x;
    return 2.0 * spec.gamma012 * x * (1.0 - 1.0 / (u * u));
}

BosonFactors boson_factors(const BosonBathSpec& spec, double t) {
    spec.validate();
    require_time(t);
    const auto s = spec.spectral;
    const auto c = spec.convention;
    const double L = spec.cutoff_lambda;

    BosonFactors f;
    f.gamma1 = std::exp(-4.0 * integral_noise_F(s, c, spec.gamma01, L, t));
    f.gamma2 = std::exp(-4.0 * integral_noise_F(s, c, spec.gamma02, L, t));
    const double f12 = integral_noise_F(s, c, spec.gamma012, L, t);
    f.gamma12 = std::exp(-4.0 * f12);
    f.gamma12_tilde_sq = std::exp(8.0 * f12);
    f.lambda12_phase = dissipation_phase(spec, t);
    return f;
}

double coherence_damping(const BosonBathSpec& spec, Branch branch, double t) {
    spec.validate();
    require_time(t);
    const auto s = spec.spectral;
    const auto c = spec.convention;
    const double L = spec.cutoff_lambda;
    const double f1 = integral_noise_F(s, c, spec.gamma01, L, t);
    const double f2 = integral_noise_F(s, c, spec.gamma02, L, t);
    const double f12 = integral_noise_F(s, c, spec.gamma012, L, t);
    // Theta: exp(-4 f1 - 4 f2 - 8 f12); Mu: exp(-4 f1 - 4 f2 + 8 f12).
    // Dyadic coefficients keep the equal-couplings cancellation exact.
    const double sign = (branch == Branch::Theta) ? -8.0 : 8.0;
    return std::exp(-4.0 * f1 - 4.0 * f2 + sign * f12);
}

} // namespace bigeo::boson_env
