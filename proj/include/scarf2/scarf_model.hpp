#pragma once

#include "scarf2/complex_utils.hpp"

namespace scarf2::model {

/// The complex parameter pair (alpha, beta) of the potential family
///   V(x) = -[((a+b)/2)^2 + ((a-b)/2)^2 - 1/4] sech^2 x
///          + i (b^2-a^2)/2 * sinh x sech^2 x.
struct ScarfParams {
    Complex alpha;
    Complex beta;

    ScarfParams(Complex a, Complex b) : alpha(a), beta(b) {
        require_finite(a, "ScarfParams.alpha");
        require_finite(b, "ScarfParams.beta");
    }
};

enum class Regime {
    Hermitian,      ///< conj(alpha) == beta
    PTUnbroken,     ///< alpha, beta real, at least one bound state
    PTBroken,       ///< one of alpha, beta purely imaginary, the other real
    GeneralComplex, ///< none of the above
    NoBoundStates,  ///< no normalizable state on either branch
};

const char* regime_name(Regime r);

/// Principal quantum number plus the quasi-parity sign choosing between the
/// (+alpha, beta) and (-alpha, beta) solution families.
struct StateIndex {
    int n;
    int quasi_parity; ///< +1 or -1

    StateIndex(int n_, int quasi_parity_ = +1) : n(n_), quasi_parity(quasi_parity_) {
        if (n < 0)
            throw RegimeError("StateIndex: n must be non-negative");
        if (quasi_parity != +1 && quasi_parity != -1)
            throw RegimeError("StateIndex: quasi_parity must be +1 or -1");
    }
};

/// V(x) split into its even real component u and odd imaginary component w
/// (real-valued in the PT regimes), plus the full complex value.
struct PotentialValue {
    double u;
    double w;
    Complex total;
};

/// Classifies (alpha, beta). Component zero tests use the absolute
/// tolerance `tol`. Real alpha = beta is reported as PTUnbroken (continuity
/// of the real-alpha family); conj(alpha) == beta with nonzero imaginary
/// part as Hermitian.
Regime classify_regime(const ScarfParams& params, double tol = 1e-14);

/// True when conj(alpha) == beta within tol; the condition under which the
/// standard inner product machinery (norms, normalization constants) applies.
/// Includes real alpha == beta.
bool is_hermitian_family(const ScarfParams& params, double tol = 1e-14);

/// True when beta is real and alpha is real or purely imaginary within tol
/// (the parameter set of the PT-symmetric family, unbroken or broken).
bool is_pt_family(const ScarfParams& params, double tol = 1e-14);

/// Number of integers n >= 0 with n < -[Re(q*alpha + beta) + 1]/2.
int bound_state_count(const ScarfParams& params, int quasi_parity);

/// E_n = -(n + (q*alpha + beta + 1)/2)^2. Throws RegimeError when idx.n is
/// outside the normalizable range for its branch.
Complex energy(const ScarfParams& params, const StateIndex& idx);

PotentialValue potential(const ScarfParams& params, double x);

/// F_n(x) = (1 - i sinh x)^(a/2+1/4) (1 + i sinh x)^(b/2+1/4)
///          * P_n^(a,b)(i sinh x),  a = q*alpha, b = beta,
/// with principal-branch powers (1 -/+ i sinh x has real part 1, so the
/// branch is continuous in x).
Complex wavefunction_unnormalized(const ScarfParams& params, const StateIndex& idx, double x);

/// C_n * F_n(x) with the real positive normalization constant; defined for
/// the Hermitian family (conj(alpha) == beta) with quasi_parity +1 only.
Complex wavefunction_normalized(const ScarfParams& params, const StateIndex& idx, double x);

/// Validates idx against bound_state_count, throwing RegimeError otherwise.
void require_valid_state(const ScarfParams& params, const StateIndex& idx);

} // namespace scarf2::model
