#pragma once

#include <optional>

#include "scarf2/complex_utils.hpp"
#include "scarf2/scarf_model.hpp"

namespace scarf2::closed {

/// Base integral over the real line of (1 - i sinh x)^p (1 + i sinh x)^q:
///   2^(p+q+1) pi Gamma(-p-q) / [Gamma(-p+1/2) Gamma(-q+1/2)].
/// Exactly 0 when a denominator gamma sits at a pole.
/// Throws DivergenceError unless Re(p+q) < 0.
Complex a0(Complex p, Complex q);

/// Same integrand weighted by sinh x:  i (p-q)/(p+q+1) * a0(p,q).
/// Returns exactly 0 for p == q; throws PoleError at p+q = -1 with p != q.
Complex a1(Complex p, Complex q);

/// General overlap  Q_{nl} = int F_n^(alpha,beta) [F_l^(gamma,delta)]* dx
/// between two (possibly different) wavefunction families. Indices must be
/// within the normalizable range of their own parameter pair.
struct OverlapSpec {
    Complex alpha, beta, gamma, delta;
    int n = 0, l = 0;

    OverlapSpec(Complex a, Complex b, Complex g, Complex d, int n_, int l_);
};

/// The double sum for Q_{nl}, evaluated through the pole-free rearrangement
///
///   (-1)^(n+l) 2^(S/2+2) pi Gamma(1-D)
///     sum_{m,m'} (-1)^(m+m') C(n+alpha,m) C(n+beta,n-m)
///                C(l+gamma*,m') C(l+delta*,l-m')
///                / [Gamma(1-A) Gamma(1-B)]
///
/// with S = alpha+beta+gamma*+delta*, A = (alpha+delta*)/2 + n-m+m'+1,
/// B = (beta+gamma*)/2 + l+m-m'+1, D = S/2 + n+l+2. The sine prefactor and
/// every gamma pole of the textbook form are absorbed exactly by the
/// reflection identity sin(pi u) Gamma(u+k) = (-1)^k pi / Gamma(1-u-k), so
/// each term is an entire function of the parameters; zeros that the sine
/// factors enforce come out exactly.
Complex q_sum(const OverlapSpec& spec);

enum class EvalPath {
    GammaForm, ///< pole-isolated default
    SineForm,  ///< textbook closed form; degenerates when alpha+beta is an integer
};

/// Diagonal closed form of the reflected-conjugated product under the star
/// conditions delta* = alpha, gamma* = beta (the caller supplies alpha, beta
/// only). Includes the alternating (-1)^n factor of that product:
///
///   delta_nl (-1)^n pi 2^(alpha+beta+2) Gamma(-alpha-beta-n)
///     / [(-alpha-beta-2n-1) n! Gamma(-alpha-n) Gamma(-beta-n)]
///
/// SineForm evaluates instead
///   delta_nl (-1)^n 2^(alpha+beta+2)/(alpha+beta+2n+1)
///     * sin(pi alpha) sin(pi beta)/sin(pi(alpha+beta))
///     * C(alpha+beta+2n, n+beta)^-1 C(alpha+beta+2n, n),
/// which is the same value away from integer alpha+beta and is kept as a
/// cross-check path.
Complex q_closed(Complex alpha, Complex beta, int n, int l, EvalPath path = EvalPath::GammaForm);

enum class VanishingReason {
    SineFactorZero, ///< alpha = -delta*: the prefactor zero of the closed form
    OffDiagonal,    ///< n != l under the star conditions
};

struct PseudoNormResult {
    Complex value{0.0, 0.0};
    int sign = 0; ///< +1 / -1 / 0; sign of the real part for nonzero values
    std::optional<VanishingReason> vanishing_reason;
};

/// Reflected-conjugated inner product (C == 1 convention)
///   int psi_n^(alpha,beta)(x) [psi_l^(delta,beta)(-x)]* dx,
/// delta = delta_sign * alpha, for real beta and real or purely imaginary
/// alpha. Exactly zero with reason SineFactorZero when alpha = -delta*
/// (real alpha with delta_sign -1, or imaginary alpha with delta_sign +1);
/// otherwise diagonal with the q_closed value.
PseudoNormResult pseudo_inner(Complex alpha, double beta, int delta_sign, int n, int l);

/// Diagonal standard inner product of the family with beta = conj(alpha)
/// (C == 1):  delta_nl pi 2^(alpha+beta+2) Gamma(-alpha-beta-n)
///            / [(-alpha-beta-2n-1) n! Gamma(-alpha-n) Gamma(-beta-n)].
/// Real and positive on the diagonal.
Complex hermitian_norm(Complex alpha, int n, int l);

/// Real positive normalization constant of the beta = conj(alpha) family:
///   2^(-(alpha+beta)/2-1)
///   * sqrt[ Gamma(-alpha-n) Gamma(-beta-n) (-alpha-beta-2n-1) n!
///           / (Gamma(-alpha-beta-n) pi) ].
Complex normalization_constant(Complex alpha, int n);

/// Diagonal norm  L_nn = int |psi_n^(alpha,beta)|^2 dx  of the PT family
/// (real beta, alpha real or imaginary), C == 1. Evaluated through the same
/// pole-free rearrangement as q_sum.
Complex l_norm_sum(Complex alpha, double beta, int n);

/// Matrix element  J_nn = int psi_n W psi_n* dx  of the odd potential
/// component W(x) = (beta^2-alpha^2) sinh x / (2 cosh^2 x), C == 1:
///
///   (i/2)(beta^2-alpha^2) 2^w pi (-Gamma(-w-2n))
///     sum_{m,m'} (-1)^(m+m') ((alpha-alpha*)/2 - 2m + 2m')
///                C(n+alpha,m) C(n+beta,n-m) C(n+alpha*,m') C(n+beta,n-m')
///                / [Gamma(1-A) Gamma(1-B)]
///
/// with w = (alpha+alpha*)/2 + beta, A = (alpha+beta)/2 + n-m+m',
/// B = (alpha*+beta)/2 + n+m-m'. (The bra conjugation pairs alpha*, beta*;
/// beta is real here so beta* = beta throughout.)
Complex j_w_element_sum(Complex alpha, double beta, int n);

struct ImEnergyRelation {
    Complex ratio;   ///< j_w_element_sum / l_norm_sum
    Complex formula; ///< (i/8)(alpha-alpha*)(alpha+alpha*+2 beta+4n+2)
    double residual; ///< |ratio - formula|
};

/// The expectation-value identity  <W> / <1> = Im E  for the PT family.
ImEnergyRelation im_energy_relation(Complex alpha, double beta, int n);

} // namespace scarf2::closed
