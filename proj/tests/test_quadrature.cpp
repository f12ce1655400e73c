#include "doctest.h"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bigeo/quadrature.hpp"

using namespace bigeo;

TEST_SUITE("quadrature") {

TEST_CASE("single GK15 panel integrates high-degree polynomials exactly") {
    // Kronrod-15 is exact through degree 22.
    const auto f = [](double x) { return 5.0 * std::pow(x, 10) - 3.0 * std::pow(x, 7) + x; };
    const auto r = integrate_gk15(f, -1.0, 2.0);
    const double exact = 5.0 * (std::pow(2.0, 11) + 1.0) / 11.0 -
                         3.0 * (std::pow(2.0, 8) - 1.0) / 8.0 + (4.0 - 1.0) / 2.0;
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("adaptive: narrow Gaussian against the error function") {
    const double a = 1000.0;
    const auto f = [&](double x) { return std::exp(-a * (x - 0.3) * (x - 0.3)); };
    const auto r = integrate_adaptive(f, 0.0, 1.0, 1e-12);
    const double exact = std::sqrt(std::numbers::pi / a) / 2.0 *
                         (std::erf(std::sqrt(a) * 0.7) + std::erf(std::sqrt(a) * 0.3));
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-11));
}

TEST_CASE("adaptive: oscillatory integrand against the boost oracle") {
    const auto f = [](double x) { return std::sin(40.0 * x) / (1.0 + x * x); };
    const auto mine = integrate_adaptive(f, 0.0, 10.0, 1e-11);
    const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, 10.0, 12, 1e-13);
    CHECK(mine.value == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("adaptive: reversed and empty intervals") {
    const auto f = [](double x) { return x * x; };
    CHECK(integrate_adaptive(f, 2.0, 2.0, 1e-10).value == 0.0);
    const auto fwd = integrate_adaptive(f, 0.0, 2.0, 1e-12).value;
    const auto rev = integrate_adaptive(f, 2.0, 0.0, 1e-12).value;
    CHECK(fwd == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    CHECK(rev == doctest::Approx(-fwd).epsilon(1e-13));
}

TEST_CASE("adaptive: invalid tolerance") {
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 0.0), domain_error);
}

} // TEST_SUITE
