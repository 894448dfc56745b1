#include "scarf2/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace scarf2::quad {

namespace {

constexpr double kPi2 = 1.57079632679489661923132169163975144; // pi/2
constexpr double kTruncationLimit = 40.0;

// Gauss-Kronrod 7/15 on [-1,1]; positive abscissae, center last.
// Odd-indexed abscissae are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752632852, 0.94910791234275852452618968404785126,
    0.86486442335976907278971278864092620, 0.74153118559939443986386477328078840,
    0.58608723546769113029414483825872960, 0.40584515137739716690660641207696146,
    0.20778495500789846760068940377324491, 0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922496373200805896959, 0.06309209262997855329070066318920429,
    0.10479001032225018383987632254151801, 0.14065325971552591874518959051023792,
    0.16900472663926790282658342659855028, 0.19035057806478540991325640242101368,
    0.20443294007529889241416199923464908, 0.20948214108472782801299917489171426,
};
constexpr double kWg[4] = {
    0.12948496616886969327061143267908202, 0.27970539148927666790146777142377958,
    0.38183005050511894495036977548897513, 0.41795918367346938775510204081632653,
};

struct MappedIntegrand {
    const Integrand& f;
    Mapping mapping;
    long evaluations = 0;

    // Both mappings are parametrized over u in (-1, 1).
    Complex operator()(double u) {
        ++evaluations;
        if (mapping == Mapping::DirectTruncation) {
            const Complex fx = f(kTruncationLimit * u);
            if (!is_finite(fx))
                throw EvaluationError("integrate_line: non-finite integrand sample");
            return kTruncationLimit * fx;
        }
        // y = (pi/2) u, tan y = sinh x; measured from the endpoint so the
        // jacobian 1/cos y = 1/sin e stays accurate near |u| = 1.
        const double e = kPi2 * (1.0 - std::abs(u));
        const double se = std::sin(e);
        if (se <= 0.0)
            return Complex(0.0, 0.0); // within rounding of the open endpoint
        const double t = std::copysign(std::cos(e) / se, u);
        const Complex fx = f(std::asinh(t));
        if (!is_finite(fx))
            throw EvaluationError("integrate_line: non-finite integrand sample");
        return (kPi2 / se) * fx;
    }
};

struct Panel {
    double a, b;
    Complex value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(MappedIntegrand& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = g(center);
    Complex kronrod = kWgk[7] * fc;
    Complex gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const Complex f1 = g(center - half * kXgk[j]);
        const Complex f2 = g(center + half * kXgk[j]);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            gauss += kWg[(j - 1) / 2] * (f1 + f2);
    }
    return Panel{a, b, kronrod * half, std::abs(kronrod - gauss) * half};
}

} // namespace

IntegralEstimate integrate_line(const Integrand& f, const QuadratureControls& controls) {
    controls.validate();
    MappedIntegrand g{f, controls.mapping};

    constexpr int kInitialPanels = 8;
    std::priority_queue<Panel> panels;
    Complex total(0.0, 0.0);
    double error = 0.0;
    for (int i = 0; i < kInitialPanels; ++i) {
        Panel p = evaluate_panel(g, -1.0 + 2.0 * i / kInitialPanels,
                                 -1.0 + 2.0 * (i + 1) / kInitialPanels);
        total += p.value;
        error += p.error;
        panels.push(p);
    }

    int count = kInitialPanels;
    while (error > controls.target_abs_tol && count < controls.max_subdivisions) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) // cannot bisect further
            break;
        Panel left = evaluate_panel(g, worst.a, mid);
        Panel right = evaluate_panel(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    return IntegralEstimate{total, error, g.evaluations};
}

IntegralEstimate overlap_numeric(const model::ScarfParams& params, const model::StateIndex& bra,
                                 const model::StateIndex& ket, bool reflect_bra,
                                 bool conjugate_bra, const RealWeight& weight,
                                 const QuadratureControls& controls) {
    model::require_valid_state(params, bra);
    model::require_valid_state(params, ket);
    auto integrand = [&](double x) {
        Complex fb = model::wavefunction_unnormalized(params, bra, reflect_bra ? -x : x);
        if (conjugate_bra)
            fb = std::conj(fb);
        Complex value = model::wavefunction_unnormalized(params, ket, x) * fb;
        if (weight)
            value *= weight(x);
        return value;
    };
    return integrate_line(integrand, controls);
}

} // namespace scarf2::quad
