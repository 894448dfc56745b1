"""Closed-form spectra, pseudo-norms and overlap integrals for the complex
Scarf II potential, with a built-in adaptive quadrature oracle."""

from ._core import (  # noqa: F401
    ComparisonEntry,
    ComparisonReport,
    ImEnergyRelation,
    IntegralEstimate,
    Mapping,
    OrthogonalityMatrix,
    PseudoNormResult,
    QuadratureControls,
    Regime,
    ScarfParams,
    SignTableEntry,
    StateIndex,
    SweepRecord,
    VanishingReason,
    a0,
    a1,
    binomial_moment_sum,
    bound_state_count,
    classify_regime,
    energy,
    gen_binomial,
    hermitian_norm,
    im_energy_relation,
    integrate_line,
    j_w_element_sum,
    jacobi_poly,
    l_norm_sum,
    log_gamma,
    new_sum_rule_eval,
    new_sum_rule_prove,
    normalization_constant,
    orthogonality_matrix,
    overlap_numeric,
    pseudo_inner,
    pt_breaking_sweep,
    potential,
    q_closed,
    q_sum,
    sign_table,
    standard_grid,
    verify_closed_forms,
    wavefunction_normalized,
    wavefunction_unnormalized,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
