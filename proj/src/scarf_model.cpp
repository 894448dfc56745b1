#include "scarf2/scarf_model.hpp"

#include <cmath>

#include "scarf2/closed_forms.hpp"
#include "scarf2/special_functions.hpp"

namespace scarf2::model {

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::Hermitian: return "Hermitian";
    case Regime::PTUnbroken: return "PTUnbroken";
    case Regime::PTBroken: return "PTBroken";
    case Regime::GeneralComplex: return "GeneralComplex";
    case Regime::NoBoundStates: return "NoBoundStates";
    }
    return "?";
}

bool is_hermitian_family(const ScarfParams& params, double tol) {
    return std::abs(std::conj(params.alpha) - params.beta) <= tol;
}

bool is_pt_family(const ScarfParams& params, double tol) {
    return approx_real(params.beta, tol) &&
           (approx_real(params.alpha, tol) || approx_imaginary(params.alpha, tol));
}

int bound_state_count(const ScarfParams& params, int quasi_parity) {
    StateIndex(0, quasi_parity); // validates the sign
    const double bound =
        -(quasi_parity * params.alpha.real() + params.beta.real() + 1.0) / 2.0;
    if (bound <= 0.0)
        return 0;
    return static_cast<int>(std::ceil(bound));
}

Regime classify_regime(const ScarfParams& params, double tol) {
    const bool any_state =
        bound_state_count(params, +1) > 0 || bound_state_count(params, -1) > 0;
    if (!any_state)
        return Regime::NoBoundStates;

    const bool a_real = approx_real(params.alpha, tol);
    const bool b_real = approx_real(params.beta, tol);
    const bool a_imag = approx_imaginary(params.alpha, tol);
    const bool b_imag = approx_imaginary(params.beta, tol);

    if (a_real && b_real)
        return Regime::PTUnbroken;
    if ((a_imag && b_real) || (a_real && b_imag))
        return Regime::PTBroken;
    if (is_hermitian_family(params, tol))
        return Regime::Hermitian;
    return Regime::GeneralComplex;
}

void require_valid_state(const ScarfParams& params, const StateIndex& idx) {
    if (idx.n >= bound_state_count(params, idx.quasi_parity))
        throw RegimeError("state index outside the normalizable range");
}

Complex energy(const ScarfParams& params, const StateIndex& idx) {
    require_valid_state(params, idx);
    const Complex half_shift =
        (static_cast<double>(idx.quasi_parity) * params.alpha + params.beta + 1.0) / 2.0;
    const Complex root = static_cast<double>(idx.n) + half_shift;
    return -root * root;
}

PotentialValue potential(const ScarfParams& params, double x) {
    const Complex a = params.alpha, b = params.beta;
    const double sech2 = 1.0 / (std::cosh(x) * std::cosh(x));
    const double sh = std::sinh(x);

    const Complex sum2 = (a + b) * (a + b) / 4.0;
    const Complex dif2 = (a - b) * (a - b) / 4.0;
    const Complex even_term = -(sum2 + dif2 - 0.25) * sech2;
    const Complex odd_term = Complex(0.0, 1.0) * sh * sech2 * (b * b - a * a) / 2.0;

    PotentialValue v;
    v.total = even_term + odd_term;
    v.u = -((a * a + b * b) / 2.0 - 0.25).real() * sech2;
    v.w = (b * b - a * a).real() * sh * sech2 / 2.0;
    return v;
}

Complex wavefunction_unnormalized(const ScarfParams& params, const StateIndex& idx, double x) {
    require_valid_state(params, idx);
    const Complex a = static_cast<double>(idx.quasi_parity) * params.alpha;
    const Complex b = params.beta;
    const Complex is(0.0, std::sinh(x));
    return std::pow(1.0 - is, a / 2.0 + 0.25) * std::pow(1.0 + is, b / 2.0 + 0.25) *
           special::jacobi_poly(idx.n, a, b, is);
}

Complex wavefunction_normalized(const ScarfParams& params, const StateIndex& idx, double x) {
    if (!is_hermitian_family(params))
        throw RegimeError("normalized wavefunctions require beta = conj(alpha)");
    if (idx.quasi_parity != +1)
        throw RegimeError("the beta = conj(alpha) family has quasi-parity +1 states only");
    return closed::normalization_constant(params.alpha, idx.n) *
           wavefunction_unnormalized(params, idx, x);
}

} // namespace scarf2::model
