// quadrature.hpp — adaptive Gauss–Kronrod 15(7) integration

#pragma once

#include <functional>

#include "bigeo/errors.hpp"

namespace bigeo {

struct QuadratureResult {
    double value{0.0};
    double error_estimate{0.0};
    int evaluations{0};
};

// Integrate f over [a, b] to the requested absolute tolerance by recursive
// interval bisection with a GK15 rule per panel. Throws precondition_error if
// the tolerance cannot be met within max_depth subdivision levels.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-9, int max_depth = 48);

// Single GK15 panel (no adaptivity); also returns the |K15 - G7| error proxy.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b);

} // namespace bigeo
