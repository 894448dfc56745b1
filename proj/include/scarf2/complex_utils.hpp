#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "scarf2/errors.hpp"

namespace scarf2 {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws EvaluationError unless both components are finite.
inline Complex require_finite(Complex z, const char* what) {
    if (!is_finite(z))
        throw EvaluationError(std::string(what) + ": non-finite complex value");
    return z;
}

inline bool approx_zero(double x, double tol) {
    return std::abs(x) <= tol;
}

/// |Im z| <= tol (covers the real axis including 0).
inline bool approx_real(Complex z, double tol) {
    return approx_zero(z.imag(), tol);
}

/// Re z == 0 within tol and Im z != 0 beyond tol (strictly imaginary).
inline bool approx_imaginary(Complex z, double tol) {
    return approx_zero(z.real(), tol) && !approx_zero(z.imag(), tol);
}

/// Parses "a+bi" / "a-bi" / "bi" / "a" / "i" complex literals.
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Formats with enough digits to round-trip ("a+bi" form, pure forms abbreviated).
std::string format_complex(Complex z);

} // namespace scarf2
