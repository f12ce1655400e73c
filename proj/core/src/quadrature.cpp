#include "bigeo/quadrature.hpp"

#include <cmath>

namespace bigeo {

namespace {

// Kronrod-15 abscissae on [-1, 1] (symmetric; only the non-negative half kept)
// and the matching Kronrod / embedded Gauss-7 weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

} // namespace

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }

    QuadratureResult r;
    r.value = result_kronrod * half;
    r.error_estimate = std::abs((result_kronrod - result_gauss) * half);
    r.evaluations = 15;
    return r;
}

namespace {

void integrate_recursive(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, int depth, int max_depth, QuadratureResult& acc) {
    QuadratureResult panel = integrate_gk15(f, a, b);
    acc.evaluations += panel.evaluations;
    if (panel.error_estimate <= abs_tol || depth >= max_depth) {
        if (panel.error_estimate > abs_tol)
            throw precondition_error("integrate_adaptive: tolerance not reached at max depth");
        acc.value += panel.value;
        acc.error_estimate += panel.error_estimate;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_recursive(f, a, mid, 0.5 * abs_tol, depth + 1, max_depth, acc);
    integrate_recursive(f, mid, b, 0.5 * abs_tol, depth + 1, max_depth, acc);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) throw domain_error("integrate_adaptive: abs_tol must be > 0");
    if (a == b) return {0.0, 0.0, 0};
    const double sign = (b >= a) ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    QuadratureResult acc;
    integrate_recursive(f, lo, hi, abs_tol, 0, max_depth, acc);
    acc.value *= sign;
    return acc;
}

} // namespace bigeo
