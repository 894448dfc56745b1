#pragma once

#include <vector>

#include "scarf2/complex_utils.hpp"

namespace scarf2::special {

/// Log-gamma of a complex argument, accurate to better than 1e-12 relative
/// error for |z| <= 50. Real (up to an i*pi ambiguity on the negative axis)
/// on the reals, analytic off the non-positive integers.
///
/// Throws PoleError within `pole_tol` of a non-positive integer.
Complex log_gamma(Complex z, double pole_tol = 1e-13);

/// Reciprocal gamma 1/Gamma(z). Entire: returns exactly 0 at (and within
/// `zero_tol` of) the non-positive integers, never throws.
Complex reciprocal_gamma(Complex z, double zero_tol = 1e-13);

/// True when z lies within tol of a non-positive integer.
bool near_gamma_pole(Complex z, double tol);

/// A product/quotient of gamma values, evaluated together so that matched
/// pole pairs and overall scale cancel before exponentiation.
struct GammaRatioSpec {
    std::vector<Complex> numerator_args;
    std::vector<Complex> denominator_args;
};

/// prod Gamma(num) / prod Gamma(den), computed in log space and
/// exponentiated once.
///
/// Arguments within `pole_tol` of a non-positive integer are treated as
/// poles. Denominator poles in excess give an exact 0; matched
/// numerator/denominator pole pairs are resolved by the residue-ratio limit
///     Gamma(-k+eps)/Gamma(-m+eps) -> (-1)^(k-m) m!/k!.
/// An unmatched numerator pole throws PoleError.
Complex gamma_ratio(const GammaRatioSpec& spec, double pole_tol = 1e-8);

/// Generalized binomial coefficient Gamma(a+1)/(Gamma(b+1) Gamma(a-b+1)).
Complex gen_binomial(Complex a, Complex b, double pole_tol = 1e-8);

/// Binomial with integer lower index as the exact falling-factorial product
/// x(x-1)...(x-k+1)/k!. Finite for every complex x, k >= 0.
Complex binomial_falling(Complex x, int k);

/// Jacobi polynomial of degree n with complex parameters, by the explicit
/// finite sum
///   2^-n sum_m C(n+alpha,m) C(n+beta,n-m) (-1)^(n-m) (1-z)^(n-m) (1+z)^m.
Complex jacobi_poly(int n, Complex alpha, Complex beta, Complex z);

} // namespace scarf2::special
