#include <doctest.h>

#include <cmath>
#include <limits>

#include "scarf2/quadrature.hpp"
#include "scarf2/scarf_model.hpp"
#include "test_helpers.hpp"

using namespace scarf2;
using namespace scarf2::model;
using scarf2::testing::check_close;

TEST_CASE("ScarfParams rejects non-finite components") {
    CHECK_THROWS_AS(ScarfParams(Complex(std::numeric_limits<double>::quiet_NaN(), 0),
                                Complex(-3, 0)),
                    EvaluationError);
    CHECK_THROWS_AS(ScarfParams(Complex(0, 0),
                                Complex(std::numeric_limits<double>::infinity(), 0)),
                    EvaluationError);
    CHECK_THROWS_AS(StateIndex(-1, +1), RegimeError);
    CHECK_THROWS_AS(StateIndex(0, 2), RegimeError);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime({Complex(-2.3, 0), Complex(-1.1, 0)}) == Regime::PTUnbroken);
    CHECK(classify_regime({Complex(0, 0.5), Complex(-3, 0)}) == Regime::PTBroken);
    CHECK(classify_regime({Complex(-1.5, -0.7), Complex(-1.5, 0.7)}) == Regime::Hermitian);
    CHECK(classify_regime({Complex(1, 0), Complex(1, 0)}) == Regime::NoBoundStates);
    CHECK(classify_regime({Complex(0, 0.5), Complex(0, 0.3)}) == Regime::NoBoundStates);
    CHECK(classify_regime({Complex(-1.2, 0.4), Complex(-2.0, 1.0)}) == Regime::GeneralComplex);
    // the sweep midpoint alpha = 0 stays in the real-alpha family
    CHECK(classify_regime({Complex(0, 0), Complex(-3, 0)}) == Regime::PTUnbroken);
    // real alpha = beta belongs to both families; the tag follows the real-alpha family
    CHECK(classify_regime({Complex(-1.5, 0), Complex(-1.5, 0)}) == Regime::PTUnbroken);
    CHECK(is_hermitian_family({Complex(-1.5, 0), Complex(-1.5, 0)}));
    CHECK(is_pt_family({Complex(0, 0.5), Complex(-3, 0)}));
    CHECK_FALSE(is_pt_family({Complex(-1.5, -0.7), Complex(-1.5, 0.7)}));
}

TEST_CASE("classification tolerance is configurable") {
    const ScarfParams nearly_real{Complex(-2.0, 1e-12), Complex(-1.5, 0)};
    CHECK(classify_regime(nearly_real) == Regime::GeneralComplex);
    CHECK(classify_regime(nearly_real, 1e-10) == Regime::PTUnbroken);
}

TEST_CASE("bound state counts") {
    CHECK(bound_state_count({Complex(-4.5, 0), Complex(-4.5, 0)}, +1) == 4);
    CHECK(bound_state_count({Complex(0, 0.5), Complex(-3, 0)}, +1) == 1);
    CHECK(bound_state_count({Complex(0, 0.5), Complex(-3, 0)}, -1) == 1);
    CHECK(bound_state_count({Complex(1, 0), Complex(1, 0)}, +1) == 0);
    // integer bound is strict: n < 4
    CHECK(bound_state_count({Complex(-4, 0), Complex(-3, 0)}, +1) == 4);
}

TEST_CASE("energies") {
    check_close(energy({Complex(-3, 0), Complex(-3, 0)}, StateIndex(0)),
                Complex(-6.25, 0.0), 1e-14);
    const ScarfParams broken{Complex(0, 0.5), Complex(-3, 0)};
    const Complex ep = energy(broken, StateIndex(0, +1));
    const Complex em = energy(broken, StateIndex(0, -1));
    CHECK(ep == std::conj(em)); // conjugate pair, exactly as evaluated
    CHECK(ep.imag() == doctest::Approx(0.5).epsilon(1e-14));
    check_close(ep, Complex(-0.9375, 0.5), 1e-14);
    CHECK_THROWS_AS(energy(broken, StateIndex(1, +1)), RegimeError);
}

TEST_CASE("energy reality in the unbroken and Hermitian regimes") {
    const ScarfParams real_params{Complex(-3.7, 0), Complex(-2.5, 0)};
    for (int n = 0; n < bound_state_count(real_params, +1); ++n)
        CHECK(std::abs(energy(real_params, StateIndex(n)).imag()) <= 1e-14);
    const ScarfParams herm{Complex(-3, -0.7), Complex(-3, 0.7)};
    for (int n = 0; n < bound_state_count(herm, +1); ++n)
        CHECK(std::abs(energy(herm, StateIndex(n)).imag()) <= 1e-14);
}

TEST_CASE("potential values") {
    const PotentialValue v0 = potential({Complex(-1.5, 0), Complex(-1.5, 0)}, 0.0);
    CHECK(v0.u == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(v0.w == doctest::Approx(0.0));
    check_close(v0.total, Complex(-2.0, 0.0), 1e-14);

    // odd component against its closed coefficient (beta^2 - alpha^2 = 9.25)
    const PotentialValue v1 = potential({Complex(0, 0.5), Complex(-3, 0)}, 1.0);
    const double want = 9.25 * std::sinh(1.0) / (2.0 * std::cosh(1.0) * std::cosh(1.0));
    CHECK(v1.w == doctest::Approx(want).epsilon(1e-14));
    CHECK(v1.w == doctest::Approx(2.2826888574861505).epsilon(1e-14));
    check_close(v1.total, Complex(v1.u, v1.w), 1e-14);
}

TEST_CASE("PT identity of the potential") {
    // conj(V(-x)) == V(x) on [-10, 10] for unbroken and broken parameters
    for (const ScarfParams& p :
         {ScarfParams{Complex(-3, 0), Complex(-2, 0)}, ScarfParams{Complex(0, 0.5), Complex(-3, 0)}}) {
        for (double x = -10.0; x <= 10.0; x += 0.25) {
            const Complex lhs = std::conj(potential(p, -x).total);
            const Complex rhs = potential(p, x).total;
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("wavefunction elementary values") {
    const ScarfParams p{Complex(-1.5, 0), Complex(-1.5, 0)};
    check_close(wavefunction_unnormalized(p, StateIndex(0), 0.0), Complex(1.0, 0.0), 1e-14);
    for (double x : {-2.0, -0.3, 0.7, 1.9})
        check_close(wavefunction_unnormalized(p, StateIndex(0), x),
                    Complex(1.0 / std::cosh(x), 0.0), 1e-14, "ground state is sech x");
    CHECK_THROWS_AS(wavefunction_unnormalized(p, StateIndex(5), 0.0), RegimeError);
}

TEST_CASE("wavefunction parity transfer") {
    // F_n^(a,b)(-x) = (-1)^n F_n^(b,a)(x)
    const double x = 0.7;
    const ScarfParams ab{Complex(-3, 0), Complex(-2, 0)};
    const ScarfParams ba{Complex(-2, 0), Complex(-3, 0)};
    const Complex lhs = wavefunction_unnormalized(ab, StateIndex(2), -x);
    const Complex rhs = wavefunction_unnormalized(ba, StateIndex(2), x);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));

    for (const ScarfParams& p :
         {ScarfParams{Complex(-2.6, 0), Complex(-3.3, 0)}, ScarfParams{Complex(0, 0.8), Complex(-4.4, 0)}}) {
        const ScarfParams swapped{p.beta, p.alpha};
        const int count = std::min(bound_state_count(p, +1), 6);
        for (int n = 0; n < count; ++n) {
            for (double xx : {0.35, 1.2}) {
                Complex want = wavefunction_unnormalized(swapped, StateIndex(n), xx);
                if (n % 2 != 0)
                    want = -want;
                const Complex got = wavefunction_unnormalized(p, StateIndex(n), -xx);
                CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("normalized wavefunction") {
    const ScarfParams p{Complex(-1.5, 0), Complex(-1.5, 0)};
    // C = 1/sqrt(2), psi = sech x / sqrt(2)
    check_close(wavefunction_normalized(p, StateIndex(0), 0.8),
                Complex(1.0 / (std::sqrt(2.0) * std::cosh(0.8)), 0.0), 1e-12);
    auto norm = quad::integrate_line([&](double x) {
        const Complex v = wavefunction_normalized(p, StateIndex(0), x);
        return v * std::conj(v);
    });
    check_close(norm.value, Complex(1.0, 0.0), 1e-10, "unit norm");

    const ScarfParams herm{Complex(-1.5, -0.7), Complex(-1.5, 0.7)};
    auto norm2 = quad::integrate_line([&](double x) {
        const Complex v = wavefunction_normalized(herm, StateIndex(0), x);
        return v * std::conj(v);
    });
    check_close(norm2.value, Complex(1.0, 0.0), 1e-8, "unit norm, complex conjugate pair");

    CHECK_THROWS_AS(wavefunction_normalized({Complex(0, 0.5), Complex(-3, 0)}, StateIndex(0), 0.0),
                    RegimeError);
    CHECK_THROWS_AS(wavefunction_normalized(herm, StateIndex(0, -1), 0.0), RegimeError);
}

TEST_CASE("Schrodinger residual ties wavefunction, energy and potential") {
    // -psi'' + V psi = E psi with a central-difference second derivative
    const double h = 1e-4;
    auto max_residual = [&](const ScarfParams& p, const StateIndex& idx) {
        const Complex e = energy(p, idx);
        double worst = 0.0;
        for (double x = -5.0; x <= 5.0; x += 0.1) {
            const Complex pm = wavefunction_unnormalized(p, idx, x - h);
            const Complex pc = wavefunction_unnormalized(p, idx, x);
            const Complex pp = wavefunction_unnormalized(p, idx, x + h);
            const Complex second = (pp - 2.0 * pc + pm) / (h * h);
            const Complex r = -second + (potential(p, x).total - e) * pc;
            worst = std::max(worst, std::abs(r));
        }
        return worst / std::abs(e);
    };

    for (const ScarfParams& p : {ScarfParams{Complex(-4.5, 0), Complex(-4.5, 0)},
                                 ScarfParams{Complex(0, 0.5), Complex(-3, 0)},
                                 ScarfParams{Complex(-3, -0.7), Complex(-3, 0.7)}}) {
        for (int q : {+1, -1}) {
            for (int n = 0; n < bound_state_count(p, q); ++n) {
                INFO("alpha=" << p.alpha.real() << "+" << p.alpha.imag() << "i n=" << n
                              << " q=" << q);
                CHECK(max_residual(p, StateIndex(n, q)) <= 1e-5);
            }
        }
    }
}
