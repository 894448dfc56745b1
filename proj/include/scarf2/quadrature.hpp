#pragma once

#include <functional>

#include "scarf2/complex_utils.hpp"
#include "scarf2/scarf_model.hpp"

namespace scarf2::quad {

enum class Mapping {
    CompactTanSinhMap, ///< tan y = sinh x, integrate over y in (-pi/2, pi/2)
    DirectTruncation,  ///< integrate over x in [-40, 40]
};

struct QuadratureControls {
    double target_abs_tol = 1e-10;
    int max_subdivisions = 2000;
    Mapping mapping = Mapping::CompactTanSinhMap;

    QuadratureControls() = default;
    QuadratureControls(double tol, int max_subdiv, Mapping map = Mapping::CompactTanSinhMap)
        : target_abs_tol(tol), max_subdivisions(max_subdiv), mapping(map) {
        validate();
    }
    void validate() const {
        if (!(target_abs_tol > 0))
            throw EvaluationError("QuadratureControls: target_abs_tol must be positive");
        if (max_subdivisions < 1)
            throw EvaluationError("QuadratureControls: max_subdivisions must be >= 1");
    }
};

struct IntegralEstimate {
    Complex value;
    double abs_error_est = 0.0;
    long evaluations = 0;
};

using Integrand = std::function<Complex(double)>;
using RealWeight = std::function<double(double)>;

/// Integral of f over the whole real line by adaptive Gauss-Kronrod 7/15
/// panels on the mapped interval, worst-error-first refinement. Returns when
/// the summed error estimate reaches target_abs_tol or the panel budget is
/// exhausted (the estimate then reports what was achieved). All sample
/// points are interior; endpoints are never evaluated.
///
/// Throws EvaluationError on a non-finite integrand sample.
IntegralEstimate integrate_line(const Integrand& f, const QuadratureControls& controls = {});

/// Numerical overlap  int F_ket(x) * op(F_bra)(x) * weight(x) dx  of the
/// unnormalized wavefunctions, where op reflects x -> -x when reflect_bra
/// and conjugates when conjugate_bra. Covers the reflected-conjugated inner
/// product, the plain conjugated one, and weighted matrix elements.
IntegralEstimate overlap_numeric(const model::ScarfParams& params, const model::StateIndex& bra,
                                 const model::StateIndex& ket, bool reflect_bra, bool conjugate_bra,
                                 const RealWeight& weight = {},
                                 const QuadratureControls& controls = {});

} // namespace scarf2::quad
