#include "scarf2/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace scarf2::special {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogPi = 1.14472988584940017414342735135305871;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Rational-g Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// Valid for Re z >= 1/2.
Complex log_gamma_lanczos(Complex z) {
    Complex sum = kLanczos[0];
    for (int k = 1; k < 15; ++k)
        sum += kLanczos[k] / (z + static_cast<double>(k - 1));
    const Complex t = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(sum);
}

// ln sin(pi z), Schwarz-symmetric, analytic off the real axis. Written
// through exp(2 pi i z) so large |Im z| cannot overflow the sine.
Complex log_sin_pi(Complex z) {
    if (z.imag() == 0.0)
        return std::log(Complex(std::sin(kPi * z.real()), 0.0));
    if (z.imag() < 0.0)
        return std::conj(log_sin_pi(std::conj(z)));
    const Complex w = std::exp(Complex(0.0, 2.0 * kPi) * z);
    return Complex(-std::log(2.0), 0.5 * kPi) - Complex(0.0, kPi) * z + std::log(1.0 - w);
}

} // namespace

bool near_gamma_pole(Complex z, double tol) {
    if (z.real() > 0.5 || std::abs(z.imag()) > tol)
        return false;
    const double nearest = std::round(z.real());
    return nearest <= 0.0 && std::abs(z.real() - nearest) <= tol;
}

Complex log_gamma(Complex z, double pole_tol) {
    require_finite(z, "log_gamma");
    if (near_gamma_pole(z, pole_tol))
        throw PoleError("log_gamma: argument at a non-positive integer");
    if (z.real() >= 0.5)
        return log_gamma_lanczos(z);
    return kLogPi - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

Complex reciprocal_gamma(Complex z, double zero_tol) {
    require_finite(z, "reciprocal_gamma");
    if (near_gamma_pole(z, zero_tol))
        return Complex(0.0, 0.0);
    if (z.real() >= 0.5)
        return std::exp(-log_gamma_lanczos(z));
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi: stable through the pole zeros.
    return std::exp(log_sin_pi(z) + log_gamma_lanczos(1.0 - z) - kLogPi);
}

Complex gamma_ratio(const GammaRatioSpec& spec, double pole_tol) {
    if (spec.numerator_args.empty() || spec.denominator_args.empty())
        throw EvaluationError("gamma_ratio: argument lists must be non-empty");

    // Split both sides into pole orders (argument -k) and regular arguments.
    std::vector<long> num_poles, den_poles;
    Complex log_acc(0.0, 0.0);
    for (const Complex& z : spec.numerator_args) {
        if (near_gamma_pole(z, pole_tol))
            num_poles.push_back(std::lround(-z.real()));
        else
            log_acc += log_gamma(z, pole_tol);
    }
    for (const Complex& z : spec.denominator_args) {
        if (near_gamma_pole(z, pole_tol))
            den_poles.push_back(std::lround(-z.real()));
        else
            log_acc -= log_gamma(z, pole_tol);
    }

    if (num_poles.size() > den_poles.size())
        throw PoleError("gamma_ratio: unmatched numerator pole");
    if (num_poles.size() < den_poles.size())
        return Complex(0.0, 0.0); // excess denominator poles: exact zero

    // Matched pairs: Gamma(-k+eps)/Gamma(-m+eps) -> (-1)^(k-m) m!/k!.
    double sign = 1.0;
    for (std::size_t i = 0; i < num_poles.size(); ++i) {
        const long k = num_poles[i], m = den_poles[i];
        if ((k - m) % 2 != 0)
            sign = -sign;
        log_acc += std::lgamma(static_cast<double>(m) + 1.0) -
                   std::lgamma(static_cast<double>(k) + 1.0);
    }
    return sign * std::exp(log_acc);
}

Complex gen_binomial(Complex a, Complex b, double pole_tol) {
    return gamma_ratio({{a + 1.0}, {b + 1.0, a - b + 1.0}}, pole_tol);
}

Complex binomial_falling(Complex x, int k) {
    if (k < 0)
        throw EvaluationError("binomial_falling: k must be non-negative");
    Complex prod(1.0, 0.0);
    for (int j = 0; j < k; ++j)
        prod *= (x - static_cast<double>(j)) / static_cast<double>(j + 1);
    return prod;
}

Complex jacobi_poly(int n, Complex alpha, Complex beta, Complex z) {
    if (n < 0)
        throw EvaluationError("jacobi_poly: degree must be non-negative");
    require_finite(z, "jacobi_poly");
    const Complex zm = 1.0 - z, zp = 1.0 + z;
    Complex sum(0.0, 0.0);
    for (int m = 0; m <= n; ++m) {
        Complex term = binomial_falling(static_cast<double>(n) + alpha, m) *
                       binomial_falling(static_cast<double>(n) + beta, n - m) *
                       std::pow(zm, n - m) * std::pow(zp, m);
        if ((n - m) % 2 != 0)
            term = -term;
        sum += term;
    }
    return sum * std::pow(2.0, -n);
}

} // namespace scarf2::special
