#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scarf2/closed_forms.hpp"
#include "scarf2/identities.hpp"
#include "scarf2/quadrature.hpp"
#include "scarf2/scarf_model.hpp"
#include "scarf2/special_functions.hpp"
#include "scarf2/verification.hpp"

namespace py = pybind11;

using namespace scarf2;

namespace {

py::object to_fraction(const identities::Rational& r) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::str(r.str()));
}

identities::Rational from_fraction(py::handle obj) {
    const std::string num = py::str(obj.attr("numerator"));
    const std::string den = py::str(obj.attr("denominator"));
    return identities::Rational(identities::BigInt(num), identities::BigInt(den));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form spectra, pseudo-norms and overlap integrals for the "
              "complex Scarf II potential";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ValueError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);

    // ---- model -----------------------------------------------------------
    py::enum_<model::Regime>(m, "Regime")
        .value("Hermitian", model::Regime::Hermitian)
        .value("PTUnbroken", model::Regime::PTUnbroken)
        .value("PTBroken", model::Regime::PTBroken)
        .value("GeneralComplex", model::Regime::GeneralComplex)
        .value("NoBoundStates", model::Regime::NoBoundStates);

    py::class_<model::ScarfParams>(m, "ScarfParams")
        .def(py::init<Complex, Complex>(), py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &model::ScarfParams::alpha)
        .def_readonly("beta", &model::ScarfParams::beta)
        .def("__repr__", [](const model::ScarfParams& p) {
            return "ScarfParams(alpha=" + format_complex(p.alpha) +
                   ", beta=" + format_complex(p.beta) + ")";
        });

    py::class_<model::StateIndex>(m, "StateIndex")
        .def(py::init<int, int>(), py::arg("n"), py::arg("quasi_parity") = +1)
        .def_readonly("n", &model::StateIndex::n)
        .def_readonly("quasi_parity", &model::StateIndex::quasi_parity)
        .def("__repr__", [](const model::StateIndex& s) {
            return "StateIndex(n=" + std::to_string(s.n) +
                   ", quasi_parity=" + std::to_string(s.quasi_parity) + ")";
        });

    py::class_<model::PotentialValue>(m, "PotentialValue")
        .def_readonly("u", &model::PotentialValue::u)
        .def_readonly("w", &model::PotentialValue::w)
        .def_readonly("total", &model::PotentialValue::total);

    m.def("classify_regime", &model::classify_regime, py::arg("params"),
          py::arg("tol") = 1e-14);
    m.def("bound_state_count", &model::bound_state_count, py::arg("params"),
          py::arg("quasi_parity"));
    m.def("energy", &model::energy, py::arg("params"), py::arg("idx"));
    m.def("potential", &model::potential, py::arg("params"), py::arg("x"));
    m.def("wavefunction_unnormalized", &model::wavefunction_unnormalized, py::arg("params"),
          py::arg("idx"), py::arg("x"));
    m.def("wavefunction_normalized", &model::wavefunction_normalized, py::arg("params"),
          py::arg("idx"), py::arg("x"));

    // ---- special functions ------------------------------------------------
    m.def("log_gamma", &special::log_gamma, py::arg("z"), py::arg("pole_tol") = 1e-13);
    m.def(
        "gamma_ratio",
        [](const std::vector<Complex>& num, const std::vector<Complex>& den, double pole_tol) {
            return special::gamma_ratio({num, den}, pole_tol);
        },
        py::arg("numerator_args"), py::arg("denominator_args"), py::arg("pole_tol") = 1e-8);
    m.def("gen_binomial", &special::gen_binomial, py::arg("a"), py::arg("b"),
          py::arg("pole_tol") = 1e-8);
    m.def("jacobi_poly", &special::jacobi_poly, py::arg("n"), py::arg("alpha"), py::arg("beta"),
          py::arg("z"));

    // ---- quadrature --------------------------------------------------------
    py::enum_<quad::Mapping>(m, "Mapping")
        .value("CompactTanSinhMap", quad::Mapping::CompactTanSinhMap)
        .value("DirectTruncation", quad::Mapping::DirectTruncation);

    py::class_<quad::QuadratureControls>(m, "QuadratureControls")
        .def(py::init<>())
        .def(py::init<double, int, quad::Mapping>(), py::arg("target_abs_tol"),
             py::arg("max_subdivisions"), py::arg("mapping") = quad::Mapping::CompactTanSinhMap)
        .def_readwrite("target_abs_tol", &quad::QuadratureControls::target_abs_tol)
        .def_readwrite("max_subdivisions", &quad::QuadratureControls::max_subdivisions)
        .def_readwrite("mapping", &quad::QuadratureControls::mapping);

    py::class_<quad::IntegralEstimate>(m, "IntegralEstimate")
        .def_readonly("value", &quad::IntegralEstimate::value)
        .def_readonly("abs_error_est", &quad::IntegralEstimate::abs_error_est)
        .def_readonly("evaluations", &quad::IntegralEstimate::evaluations);

    m.def("integrate_line", &quad::integrate_line, py::arg("f"),
          py::arg("controls") = quad::QuadratureControls{});
    m.def(
        "overlap_numeric",
        [](const model::ScarfParams& params, const model::StateIndex& bra,
           const model::StateIndex& ket, bool reflect_bra, bool conjugate_bra,
           const std::optional<quad::RealWeight>& weight,
           const quad::QuadratureControls& controls) {
            return quad::overlap_numeric(params, bra, ket, reflect_bra, conjugate_bra,
                                         weight.value_or(quad::RealWeight{}), controls);
        },
        py::arg("params"), py::arg("bra"), py::arg("ket"), py::arg("reflect_bra"),
        py::arg("conjugate_bra"), py::arg("weight") = py::none(),
        py::arg("controls") = quad::QuadratureControls{});

    // ---- closed forms ------------------------------------------------------
    py::enum_<closed::VanishingReason>(m, "VanishingReason")
        .value("SineFactorZero", closed::VanishingReason::SineFactorZero)
        .value("OffDiagonal", closed::VanishingReason::OffDiagonal);

    py::class_<closed::PseudoNormResult>(m, "PseudoNormResult")
        .def_readonly("value", &closed::PseudoNormResult::value)
        .def_readonly("sign", &closed::PseudoNormResult::sign)
        .def_readonly("vanishing_reason", &closed::PseudoNormResult::vanishing_reason);

    py::class_<closed::ImEnergyRelation>(m, "ImEnergyRelation")
        .def_readonly("ratio", &closed::ImEnergyRelation::ratio)
        .def_readonly("formula", &closed::ImEnergyRelation::formula)
        .def_readonly("residual", &closed::ImEnergyRelation::residual);

    m.def("a0", &closed::a0, py::arg("p"), py::arg("q"));
    m.def("a1", &closed::a1, py::arg("p"), py::arg("q"));
    m.def(
        "q_sum",
        [](Complex alpha, Complex beta, Complex gamma, Complex delta, int n, int l) {
            return closed::q_sum(closed::OverlapSpec(alpha, beta, gamma, delta, n, l));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"), py::arg("n"),
        py::arg("l"));
    py::enum_<closed::EvalPath>(m, "EvalPath")
        .value("GammaForm", closed::EvalPath::GammaForm)
        .value("SineForm", closed::EvalPath::SineForm);
    m.def("q_closed", &closed::q_closed, py::arg("alpha"), py::arg("beta"), py::arg("n"),
          py::arg("l"), py::arg("path") = closed::EvalPath::GammaForm);
    m.def("pseudo_inner", &closed::pseudo_inner, py::arg("alpha"), py::arg("beta"),
          py::arg("delta_sign"), py::arg("n"), py::arg("l"));
    m.def("hermitian_norm", &closed::hermitian_norm, py::arg("alpha"), py::arg("n"),
          py::arg("l"));
    m.def("normalization_constant", &closed::normalization_constant, py::arg("alpha"),
          py::arg("n"));
    m.def("l_norm_sum", &closed::l_norm_sum, py::arg("alpha"), py::arg("beta"), py::arg("n"));
    m.def("j_w_element_sum", &closed::j_w_element_sum, py::arg("alpha"), py::arg("beta"),
          py::arg("n"));
    m.def("im_energy_relation", &closed::im_energy_relation, py::arg("alpha"), py::arg("beta"),
          py::arg("n"));

    // ---- identities --------------------------------------------------------
    m.def("binomial_moment_sum", [](int l, int j) {
        return to_fraction(identities::binomial_moment_sum(l, j));
    }, py::arg("l"), py::arg("j"));
    m.def(
        "new_sum_rule_eval",
        [](int n, int mm, py::handle a, py::handle b) {
            const auto v = identities::new_sum_rule_eval(n, mm, from_fraction(a),
                                                         from_fraction(b));
            return py::make_tuple(to_fraction(v.lhs), to_fraction(v.rhs));
        },
        py::arg("n"), py::arg("m"), py::arg("a"), py::arg("b"),
        "Both sides of the sum rule at rational (a, b); pass fractions.Fraction");
    m.def(
        "new_sum_rule_prove",
        [](int n, int mm, bool negate_rhs) {
            const auto proof = identities::new_sum_rule_prove(n, mm, negate_rhs);
            return py::make_tuple(proof.holds, proof.lhs_total_degree);
        },
        py::arg("n"), py::arg("m"), py::arg("negate_rhs") = false,
        "(holds, lhs_total_degree) of the exact polynomial proof");

    // ---- verification ------------------------------------------------------
    py::class_<verification::ComparisonEntry>(m, "ComparisonEntry")
        .def_readonly("case_id", &verification::ComparisonEntry::case_id)
        .def_readonly("closed_value", &verification::ComparisonEntry::closed_value)
        .def_readonly("oracle_value", &verification::ComparisonEntry::oracle_value)
        .def_readonly("abs_diff", &verification::ComparisonEntry::abs_diff)
        .def_readonly("pass_", &verification::ComparisonEntry::pass)
        .def_readonly("note", &verification::ComparisonEntry::note);

    py::class_<verification::ComparisonReport>(m, "ComparisonReport")
        .def_readonly("entries", &verification::ComparisonReport::entries)
        .def_readonly("max_abs_diff", &verification::ComparisonReport::max_abs_diff)
        .def_readonly("all_pass", &verification::ComparisonReport::all_pass);

    py::class_<verification::OrthogonalityMatrix>(m, "OrthogonalityMatrix")
        .def_readonly("states", &verification::OrthogonalityMatrix::states)
        .def_readonly("values", &verification::OrthogonalityMatrix::values)
        .def_readonly("max_off_diagonal", &verification::OrthogonalityMatrix::max_off_diagonal)
        .def_readonly("spot_checks", &verification::OrthogonalityMatrix::spot_checks)
        .def_readonly("max_spot_check_residual",
                      &verification::OrthogonalityMatrix::max_spot_check_residual)
        .def("at", &verification::OrthogonalityMatrix::at);

    py::class_<verification::SignTableEntry>(m, "SignTableEntry")
        .def_readonly("n", &verification::SignTableEntry::n)
        .def_readonly("sign", &verification::SignTableEntry::sign)
        .def_readonly("value", &verification::SignTableEntry::value)
        .def_readonly("gamma_args_positive",
                      &verification::SignTableEntry::gamma_args_positive);

    py::class_<verification::SweepRecord>(m, "SweepRecord")
        .def_readonly("alpha", &verification::SweepRecord::alpha)
        .def_readonly("beta", &verification::SweepRecord::beta)
        .def_readonly("n", &verification::SweepRecord::n)
        .def_readonly("quasi_parity", &verification::SweepRecord::quasi_parity)
        .def_readonly("has_state", &verification::SweepRecord::has_state)
        .def_readonly("energy", &verification::SweepRecord::energy)
        .def_readonly("im_energy_formula", &verification::SweepRecord::im_energy_formula)
        .def_readonly("im_energy_ratio", &verification::SweepRecord::im_energy_ratio)
        .def_readonly("pseudo_norm", &verification::SweepRecord::pseudo_norm)
        .def_readonly("pseudo_norm_sign", &verification::SweepRecord::pseudo_norm_sign)
        .def_readonly("oracle_residual", &verification::SweepRecord::oracle_residual);

    py::enum_<verification::InnerProductKind>(m, "InnerProductKind")
        .value("PT", verification::InnerProductKind::PT)
        .value("Standard", verification::InnerProductKind::Standard);

    m.def(
        "standard_grid",
        [] {
            std::vector<model::ScarfParams> pts;
            for (const auto& p : verification::standard_grid().points)
                pts.push_back(p);
            return pts;
        },
        "Parameter points of the built-in verification grid");
    m.def(
        "verify_closed_forms",
        [](const std::vector<model::ScarfParams>& points, double abs_tol, double rel_tol,
           const quad::QuadratureControls& controls) {
            verification::GridSpec grid;
            grid.points = points;
            verification::Tolerances tol;
            tol.abs_tol = abs_tol;
            tol.rel_tol = rel_tol;
            return verification::verify_closed_forms(grid, tol, controls);
        },
        py::arg("points"), py::arg("abs_tol") = 1e-8, py::arg("rel_tol") = 1e-6,
        py::arg("controls") = quad::QuadratureControls{});
    m.def("orthogonality_matrix", &verification::orthogonality_matrix, py::arg("params"),
          py::arg("kind"), py::arg("include_both_parities"), py::arg("seed") = 0,
          py::arg("controls") = quad::QuadratureControls{});
    m.def("sign_table", &verification::sign_table, py::arg("alpha"), py::arg("beta"));
    m.def("pt_breaking_sweep", &verification::pt_breaking_sweep, py::arg("beta"),
          py::arg("path"), py::arg("n"), py::arg("controls") = quad::QuadratureControls{});
}
