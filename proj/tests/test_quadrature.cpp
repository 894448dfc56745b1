#include <doctest.h>

#include <cmath>
#include <limits>

#include "scarf2/quadrature.hpp"
#include "test_helpers.hpp"

using namespace scarf2;
using namespace scarf2::quad;
using scarf2::testing::check_close;
using scarf2::testing::sech_power_integral;

TEST_CASE("controls validation") {
    CHECK_THROWS_AS(QuadratureControls(0.0, 100), EvaluationError);
    CHECK_THROWS_AS(QuadratureControls(1e-10, 0), EvaluationError);
}

TEST_CASE("known line integrals") {
    auto sech2 = integrate_line([](double x) { return Complex(1.0 / std::pow(std::cosh(x), 2), 0); });
    check_close(sech2.value, Complex(2.0, 0.0), 1e-10);
    CHECK(sech2.evaluations > 0);
    CHECK(sech2.abs_error_est >= 0.0);

    auto sech8 = integrate_line([](double x) { return Complex(1.0 / std::pow(std::cosh(x), 8), 0); });
    check_close(sech8.value, Complex(sech_power_integral(4), 0.0), 1e-10, "32/35");

    auto odd = integrate_line(
        [](double x) { return Complex(std::sinh(x) / std::pow(std::cosh(x), 4), 0); });
    check_close(odd.value, Complex(0.0, 0.0), 1e-12, "odd integrand");
}

TEST_CASE("both mappings agree on the closed-form test family") {
    QuadratureControls direct;
    direct.mapping = Mapping::DirectTruncation;
    for (int m = 1; m <= 6; ++m) {
        auto f = [m](double x) { return Complex(std::pow(1.0 / std::cosh(x), 2 * m), 0); };
        auto compact = integrate_line(f);
        auto truncated = integrate_line(f, direct);
        CHECK(std::abs(compact.value - truncated.value) <= 10.0 * 1e-10);
        check_close(truncated.value, Complex(sech_power_integral(m), 0.0), 1e-9);
    }
    // and on an oscillatory complex example
    auto g = [](double x) {
        const Complex is(0.0, std::sinh(x));
        return std::pow(1.0 - is, Complex(-1.3, 0.2)) * std::pow(1.0 + is, Complex(-1.1, -0.4));
    };
    auto c = integrate_line(g);
    auto t = integrate_line(g, direct);
    CHECK(std::abs(c.value - t.value) <= 10.0 * 1e-10);
}

TEST_CASE("error estimates are honest on the sech family") {
    // |value - exact| <= 3 * abs_error_est across tolerances 1e-6..1e-12
    int runs = 0, violations = 0;
    for (int m = 1; m <= 6; ++m) {
        for (double tol = 1e-6; tol >= 0.9e-12; tol *= 0.1) {
            QuadratureControls controls;
            controls.target_abs_tol = tol;
            auto est = integrate_line(
                [m](double x) { return Complex(std::pow(1.0 / std::cosh(x), 2 * m), 0); },
                controls);
            ++runs;
            if (std::abs(est.value - sech_power_integral(m)) > 3.0 * est.abs_error_est)
                ++violations;
        }
    }
    CHECK(runs >= 40);
    CHECK(violations * 100 <= runs); // >= 99% honest
}

TEST_CASE("linearity within combined error estimates") {
    scarf2::testing::ComplexSampler sampler(99);
    auto f = [](double x) { return Complex(1.0 / std::pow(std::cosh(x), 2), 0); };
    auto g = [](double x) {
        return Complex(std::tanh(x) / std::pow(std::cosh(x), 3), 1.0 / std::pow(std::cosh(x), 4));
    };
    for (int trial = 0; trial < 10; ++trial) {
        const Complex a = sampler.in_disc(3.0);
        const Complex b = sampler.in_disc(3.0);
        auto combined = integrate_line([&](double x) { return a * f(x) + b * g(x); });
        auto fi = integrate_line(f);
        auto gi = integrate_line(g);
        const double budget = combined.abs_error_est + std::abs(a) * fi.abs_error_est +
                              std::abs(b) * gi.abs_error_est + 1e-12;
        CHECK(std::abs(combined.value - (a * fi.value + b * gi.value)) <= budget);
    }
}

TEST_CASE("budget exhaustion reports the achieved estimate") {
    QuadratureControls controls;
    controls.target_abs_tol = 1e-300; // unreachable
    controls.max_subdivisions = 12;
    auto est = integrate_line(
        [](double x) { return Complex(1.0 / std::pow(std::cosh(x), 2), 0); }, controls);
    CHECK(est.abs_error_est > 1e-300); // carries what was achieved, no exception
    check_close(est.value, Complex(2.0, 0.0), 1e-6);
}

TEST_CASE("non-finite samples raise an evaluation error") {
    CHECK_THROWS_AS(integrate_line([](double x) {
                        return Complex(1.0 / x, 0.0); // infinite near 0
                    }),
                    EvaluationError);
    CHECK_THROWS_AS(integrate_line([](double) {
                        return Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
                    }),
                    EvaluationError);
}

TEST_CASE("overlap_numeric reproduces elementary overlaps") {
    const model::ScarfParams p{Complex(-1.5, 0), Complex(-1.5, 0)};
    // ground-state product is sech^2: reflected-conjugated overlap = 2
    auto same = overlap_numeric(p, model::StateIndex(0), model::StateIndex(0), true, true);
    check_close(same.value, Complex(2.0, 0.0), 1e-9);

    // orthogonality of different levels under the reflected product
    const model::ScarfParams p2{Complex(-3, 0), Complex(-2, 0)};
    auto cross = overlap_numeric(p2, model::StateIndex(1), model::StateIndex(0), true, true);
    check_close(cross.value, Complex(0.0, 0.0), 1e-9);

    // broken symmetry, same parity: the reflected product vanishes
    const model::ScarfParams broken{Complex(0, 0.5), Complex(-3, 0)};
    auto vanishing =
        overlap_numeric(broken, model::StateIndex(0), model::StateIndex(0), true, true);
    check_close(vanishing.value, Complex(0.0, 0.0), 1e-9);

    // weighted overlap: weight sinh x sech^4 x against the ground state pair
    auto weighted = overlap_numeric(
        p, model::StateIndex(0), model::StateIndex(0), false, true,
        [](double x) { return std::sinh(x) / std::pow(std::cosh(x), 2); });
    check_close(weighted.value, Complex(0.0, 0.0), 1e-11, "odd weight");

    CHECK_THROWS_AS(overlap_numeric(p, model::StateIndex(7), model::StateIndex(0), true, true),
                    RegimeError);
}
