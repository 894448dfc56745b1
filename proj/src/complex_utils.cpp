#include "scarf2/complex_utils.hpp"

#include <cstdio>
#include <stdexcept>

namespace scarf2 {

namespace {

// Splits off the leading signed float of `s` starting at `pos`; returns the
// end position. Accepts "1", "-1.5", "+2e-3", ".5".
std::size_t scan_float(const std::string& s, std::size_t pos) {
    std::size_t i = pos;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    bool digits = false;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
        digits = digits || std::isdigit(static_cast<unsigned char>(s[i]));
        ++i;
    }
    if (!digits)
        return pos;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-'))
            ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
            ++k;
        if (k > j)
            i = k;
    }
    return i;
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty complex literal");

    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed complex literal '" + text + "'");
    };

    // Pure imaginary shorthands "i", "+i", "-i".
    if (s == "i" || s == "+i")
        return Complex(0.0, 1.0);
    if (s == "-i")
        return Complex(0.0, -1.0);

    const std::size_t first_end = scan_float(s, 0);
    if (first_end == 0)
        throw bad();
    const double first = std::stod(s.substr(0, first_end));

    if (first_end == s.size())
        return Complex(first, 0.0); // "a"
    if (s.compare(first_end, std::string::npos, "i") == 0)
        return Complex(0.0, first); // "bi"

    // "a+bi" / "a-bi" / "a+i" / "a-i"
    if (s[first_end] != '+' && s[first_end] != '-')
        throw bad();
    if (s.compare(first_end, std::string::npos, "+i") == 0)
        return Complex(first, 1.0);
    if (s.compare(first_end, std::string::npos, "-i") == 0)
        return Complex(first, -1.0);
    const std::size_t second_end = scan_float(s, first_end);
    if (second_end == first_end || s.compare(second_end, std::string::npos, "i") != 0)
        throw bad();
    const double second = std::stod(s.substr(first_end, second_end - first_end));
    return Complex(first, second);
}

std::string format_complex(Complex z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
        return buf;
    }
    if (z.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17gi", z.imag());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace scarf2
