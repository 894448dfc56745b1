#include "scarf2/closed_forms.hpp"

#include <cmath>

#include "scarf2/special_functions.hpp"

namespace scarf2::closed {

using special::binomial_falling;
using special::gamma_ratio;
using special::gen_binomial;
using special::log_gamma;
using special::reciprocal_gamma;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kParamTol = 1e-14; // component zero tests on input parameters
constexpr double kValueTol = 1e-12; // |value| below this counts as a structural zero

Complex pow2(Complex exponent) {
    return std::exp(kLn2 * exponent);
}

int required_count(Complex alpha, Complex beta) {
    const double bound = -(alpha.real() + beta.real() + 1.0) / 2.0;
    return bound > 0.0 ? static_cast<int>(std::ceil(bound)) : 0;
}

void require_index(Complex alpha, Complex beta, int idx, const char* what) {
    if (idx < 0 || idx >= required_count(alpha, beta))
        throw RegimeError(std::string(what) + ": index outside the normalizable range");
}

void require_pt_parameters(Complex alpha, const char* what) {
    if (!approx_real(alpha, kParamTol) && !approx_imaginary(alpha, kParamTol))
        throw RegimeError(std::string(what) + ": alpha must be real or purely imaginary");
}

// Diagonal closed value shared by the reflected-conjugated and the standard
// product under their star conditions (no alternating sign):
//   pi 2^(alpha+beta+2) Gamma(-alpha-beta-n)
//     / [(-alpha-beta-2n-1) n! Gamma(-alpha-n) Gamma(-beta-n)].
Complex diagonal_gamma_form(Complex alpha, Complex beta, int n) {
    const double dn = n;
    const Complex ratio = gamma_ratio({{-alpha - beta - dn}, {-alpha - dn, -beta - dn}});
    return kPi * pow2(alpha + beta + 2.0) /
           ((-alpha - beta - 2.0 * dn - 1.0) * std::tgamma(dn + 1.0)) * ratio;
}

// Textbook sine-prefactored closed form; 0/0 when alpha+beta is an integer.
Complex diagonal_sine_form(Complex alpha, Complex beta, int n) {
    const double dn = n;
    const Complex s = alpha + beta;
    const Complex binoms = gen_binomial(s + 2.0 * dn, dn) /
                           gen_binomial(s + 2.0 * dn, dn + beta);
    return pow2(s + 2.0) / (s + 2.0 * dn + 1.0) * std::sin(kPi * alpha) *
           std::sin(kPi * beta) / std::sin(kPi * s) * binoms;
}

} // namespace

Complex a0(Complex p, Complex q) {
    require_finite(p, "a0");
    require_finite(q, "a0");
    if (p.real() + q.real() >= 0.0)
        throw DivergenceError("a0: requires Re(p+q) < 0");
    return pow2(p + q + 1.0) * kPi * gamma_ratio({{-p - q}, {-p + 0.5, -q + 0.5}});
}

Complex a1(Complex p, Complex q) {
    if (p == q)
        return Complex(0.0, 0.0);
    const Complex denom = p + q + 1.0;
    if (std::abs(denom) <= kParamTol)
        throw PoleError("a1: pole at p + q = -1 with p != q");
    return Complex(0.0, 1.0) * (p - q) / denom * a0(p, q);
}

OverlapSpec::OverlapSpec(Complex a, Complex b, Complex g, Complex d, int n_, int l_)
    : alpha(a), beta(b), gamma(g), delta(d), n(n_), l(l_) {
    require_finite(a, "OverlapSpec.alpha");
    require_finite(b, "OverlapSpec.beta");
    require_finite(g, "OverlapSpec.gamma");
    require_finite(d, "OverlapSpec.delta");
    require_index(a, b, n, "OverlapSpec.n");
    require_index(g, d, l, "OverlapSpec.l");
}

Complex q_sum(const OverlapSpec& spec) {
    const Complex gs = std::conj(spec.gamma);
    const Complex ds = std::conj(spec.delta);
    const Complex u = (spec.alpha + ds) / 2.0;
    const Complex v = (spec.beta + gs) / 2.0;
    const int n = spec.n, l = spec.l;
    const Complex big_d = u + v + static_cast<double>(n + l + 2);

    Complex sum(0.0, 0.0);
    for (int m = 0; m <= n; ++m) {
        const Complex bn = binomial_falling(static_cast<double>(n) + spec.alpha, m) *
                           binomial_falling(static_cast<double>(n) + spec.beta, n - m);
        for (int mp = 0; mp <= l; ++mp) {
            const Complex a_arg = u + static_cast<double>(n - m + mp + 1);
            const Complex b_arg = v + static_cast<double>(l + m - mp + 1);
            Complex term = bn * binomial_falling(static_cast<double>(l) + gs, mp) *
                           binomial_falling(static_cast<double>(l) + ds, l - mp) *
                           reciprocal_gamma(1.0 - a_arg) * reciprocal_gamma(1.0 - b_arg);
            if ((m + mp) % 2 != 0)
                term = -term;
            sum += term;
        }
    }
    Complex value = pow2(u + v + 2.0) * kPi * std::exp(log_gamma(1.0 - big_d)) * sum;
    if ((n + l) % 2 != 0)
        value = -value;
    return value;
}

Complex q_closed(Complex alpha, Complex beta, int n, int l, EvalPath path) {
    require_index(alpha, beta, n, "q_closed.n");
    require_index(alpha, beta, l, "q_closed.l");
    if (n != l)
        return Complex(0.0, 0.0);
    Complex value;
    if (path == EvalPath::GammaForm) {
        value = diagonal_gamma_form(alpha, beta, n);
    } else {
        const Complex s = alpha + beta;
        if (std::abs(s.imag()) <= kParamTol &&
            std::abs(s.real() - std::round(s.real())) <= 1e-8)
            throw PoleError("q_closed: sine form degenerates at integer alpha+beta");
        value = diagonal_sine_form(alpha, beta, n);
    }
    return n % 2 == 0 ? value : -value;
}

PseudoNormResult pseudo_inner(Complex alpha, double beta, int delta_sign, int n, int l) {
    if (delta_sign != +1 && delta_sign != -1)
        throw RegimeError("pseudo_inner: delta_sign must be +1 or -1");
    require_pt_parameters(alpha, "pseudo_inner");
    const Complex delta = static_cast<double>(delta_sign) * alpha;
    require_index(alpha, beta, n, "pseudo_inner.n");
    require_index(delta, beta, l, "pseudo_inner.l");

    PseudoNormResult result;
    // alpha = -conj(delta): the prefactor sine of the closed form vanishes.
    if (std::abs(alpha + std::conj(delta)) <= kParamTol) {
        result.vanishing_reason = VanishingReason::SineFactorZero;
        return result;
    }
    if (n != l) {
        result.vanishing_reason = VanishingReason::OffDiagonal;
        return result;
    }
    // Here conj(delta) = alpha: the star conditions hold with (alpha, beta).
    result.value = q_closed(alpha, beta, n, n);
    if (std::abs(result.value) <= kValueTol) {
        result.value = Complex(0.0, 0.0);
        result.sign = 0;
        result.vanishing_reason = VanishingReason::SineFactorZero;
    } else {
        result.sign = result.value.real() >= 0.0 ? +1 : -1;
    }
    return result;
}

Complex hermitian_norm(Complex alpha, int n, int l) {
    const Complex beta = std::conj(alpha);
    require_index(alpha, beta, n, "hermitian_norm.n");
    require_index(alpha, beta, l, "hermitian_norm.l");
    if (n != l)
        return Complex(0.0, 0.0);
    return diagonal_gamma_form(alpha, beta, n);
}

Complex normalization_constant(Complex alpha, int n) {
    const Complex beta = std::conj(alpha);
    require_index(alpha, beta, n, "normalization_constant");
    const double dn = n;
    // log of Gamma(-a-n) Gamma(-b-n) (-a-b-2n-1) n! / (Gamma(-a-b-n) pi):
    // the radicand is |Gamma(-alpha-n)|^2 * positive reals, so its log is
    // real up to rounding and the positive square root is exp(log/2).
    const Complex log_radicand = log_gamma(-alpha - dn) + log_gamma(-beta - dn) +
                                 std::log(-alpha - beta - 2.0 * dn - 1.0) +
                                 std::lgamma(dn + 1.0) - log_gamma(-alpha - beta - dn) -
                                 std::log(kPi);
    return pow2(-(alpha + beta) / 2.0 - 1.0) * std::exp(log_radicand / 2.0);
}

Complex l_norm_sum(Complex alpha, double beta, int n) {
    require_pt_parameters(alpha, "l_norm_sum");
    require_index(alpha, beta, n, "l_norm_sum");
    const Complex ac = std::conj(alpha);
    const Complex u = (alpha + beta) / 2.0;
    const Complex v = (ac + beta) / 2.0;
    const Complex big_d = u + v + static_cast<double>(2 * n + 2);

    Complex sum(0.0, 0.0);
    for (int m = 0; m <= n; ++m) {
        const Complex bn = binomial_falling(static_cast<double>(n) + alpha, m) *
                           binomial_falling(static_cast<double>(n) + beta, n - m);
        for (int mp = 0; mp <= n; ++mp) {
            const Complex a_arg = u + static_cast<double>(n - m + mp + 1);
            const Complex b_arg = v + static_cast<double>(n + m - mp + 1);
            Complex term = bn * binomial_falling(static_cast<double>(n) + ac, mp) *
                           binomial_falling(static_cast<double>(n) + beta, n - mp) *
                           reciprocal_gamma(1.0 - a_arg) * reciprocal_gamma(1.0 - b_arg);
            if ((m + mp) % 2 != 0)
                term = -term;
            sum += term;
        }
    }
    return pow2(u + v + 2.0) * kPi * std::exp(log_gamma(1.0 - big_d)) * sum;
}

Complex j_w_element_sum(Complex alpha, double beta, int n) {
    require_pt_parameters(alpha, "j_w_element_sum");
    require_index(alpha, beta, n, "j_w_element_sum");
    const Complex ac = std::conj(alpha);
    const Complex u = (alpha + beta) / 2.0;
    const Complex v = (ac + beta) / 2.0; // bra pairs conj(alpha), conj(beta); beta real
    const Complex w = u + v;

    Complex sum(0.0, 0.0);
    for (int m = 0; m <= n; ++m) {
        const Complex bn = binomial_falling(static_cast<double>(n) + alpha, m) *
                           binomial_falling(static_cast<double>(n) + beta, n - m);
        for (int mp = 0; mp <= n; ++mp) {
            const Complex a_arg = u + static_cast<double>(n - m + mp);
            const Complex b_arg = v + static_cast<double>(n + m - mp);
            const Complex weight = (alpha - ac) / 2.0 + static_cast<double>(2 * (mp - m));
            Complex term = weight * bn * binomial_falling(static_cast<double>(n) + ac, mp) *
                           binomial_falling(static_cast<double>(n) + beta, n - mp) *
                           reciprocal_gamma(1.0 - a_arg) * reciprocal_gamma(1.0 - b_arg);
            if ((m + mp) % 2 != 0)
                term = -term;
            sum += term;
        }
    }
    const Complex prefactor = Complex(0.0, 0.5) * (beta * beta - alpha * alpha) * pow2(w);
    return prefactor * kPi * (-std::exp(log_gamma(-w - static_cast<double>(2 * n)))) * sum;
}

ImEnergyRelation im_energy_relation(Complex alpha, double beta, int n) {
    ImEnergyRelation rel;
    rel.formula = Complex(0.0, 0.125) * (alpha - std::conj(alpha)) *
                  (alpha + std::conj(alpha) + 2.0 * beta + 4.0 * n + 2.0);
    rel.ratio = j_w_element_sum(alpha, beta, n) / l_norm_sum(alpha, beta, n);
    rel.residual = std::abs(rel.ratio - rel.formula);
    return rel;
}

} // namespace scarf2::closed
