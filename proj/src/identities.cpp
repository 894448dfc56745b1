#include "scarf2/identities.hpp"

#include <stdexcept>

namespace scarf2::identities {

namespace {

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

BigInt binomial_int(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int j = 0; j < k; ++j) {
        r *= (n - j);
        r /= (j + 1);
    }
    return r;
}

} // namespace

Rational binomial_rational(const Rational& x, int k) {
    if (k < 0)
        throw std::invalid_argument("binomial_rational: k must be non-negative");
    Rational prod = 1;
    for (int j = 0; j < k; ++j)
        prod *= (x - j);
    return prod / Rational(factorial(k));
}

Rational binomial_moment_sum(int l, int j) {
    if (l < 0 || j < 0)
        throw std::invalid_argument("binomial_moment_sum: l, j must be non-negative");
    BigInt total = 0;
    for (int mp = 0; mp <= l; ++mp) {
        BigInt power = (j == 0) ? BigInt(1) : BigInt(0);
        if (j > 0 && mp > 0) {
            power = 1;
            for (int t = 0; t < j; ++t)
                power *= mp;
        }
        BigInt term = binomial_int(l, mp) * power;
        total += (mp % 2 == 0) ? term : -term;
    }
    return Rational(total);
}

void BivariatePolynomial::add_term(int deg_a, int deg_b, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace({deg_a, deg_b}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

void BivariatePolynomial::add(const BivariatePolynomial& other) {
    for (const auto& [key, c] : other.coeffs_)
        add_term(key.first, key.second, c);
}

BivariatePolynomial BivariatePolynomial::multiplied_by(const BivariatePolynomial& other) const {
    BivariatePolynomial out;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : other.coeffs_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

void BivariatePolynomial::scale(const Rational& factor) {
    if (factor == 0) {
        coeffs_.clear();
        return;
    }
    for (auto& [key, c] : coeffs_)
        c *= factor;
}

int BivariatePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : coeffs_)
        deg = std::max(deg, key.first + key.second);
    return deg;
}

namespace {

// Expands the falling factorial (x+s)(x+s-1)...(x+s-k+1)/k! in x, where the
// caller maps x to either variable.
std::vector<Rational> falling_factorial_coeffs(const Rational& s, int k) {
    std::vector<Rational> coeffs{1}; // constant polynomial 1
    for (int j = 0; j < k; ++j) {
        // multiply by (x + s - j)
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        const Rational c = s - j;
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] += coeffs[d] * c;
        }
        coeffs = std::move(next);
    }
    const Rational kfact(factorial(k));
    for (auto& c : coeffs)
        c /= kfact;
    return coeffs;
}

} // namespace

BivariatePolynomial BivariatePolynomial::falling_binomial_in_a(const Rational& shift, int k) {
    BivariatePolynomial p;
    auto coeffs = falling_factorial_coeffs(shift, k);
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        p.add_term(static_cast<int>(d), 0, coeffs[d]);
    return p;
}

BivariatePolynomial BivariatePolynomial::falling_binomial_in_b(const Rational& shift, int k) {
    BivariatePolynomial p;
    auto coeffs = falling_factorial_coeffs(shift, k);
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        p.add_term(0, static_cast<int>(d), coeffs[d]);
    return p;
}

SumRuleValues new_sum_rule_eval(int n, int m, const Rational& a, const Rational& b) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("new_sum_rule_eval: need 0 <= m <= n");
    Rational lhs = 0;
    for (int k = 0; k <= n; ++k) {
        Rational term = Rational(binomial_int(n, k)) *
                        binomial_rational(a - m - k, n - m) *
                        binomial_rational(b + m + k, m);
        lhs += (k % 2 == 0) ? term : -term;
    }
    Rational rhs = Rational(binomial_int(n, m));
    if (m % 2 != 0)
        rhs = -rhs;
    return SumRuleValues{lhs, rhs};
}

SumRuleProof new_sum_rule_prove(int n, int m, bool negate_rhs) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("new_sum_rule_prove: need 0 <= m <= n");
    BivariatePolynomial difference;
    int expansion_degree = -1;
    for (int k = 0; k <= n; ++k) {
        // C(a-m-k, n-m) in a times C(b+m+k, m) in b
        BivariatePolynomial term =
            BivariatePolynomial::falling_binomial_in_a(Rational(-m - k), n - m)
                .multiplied_by(BivariatePolynomial::falling_binomial_in_b(Rational(m + k), m));
        Rational factor(binomial_int(n, k));
        if (k % 2 != 0)
            factor = -factor;
        term.scale(factor);
        expansion_degree = std::max(expansion_degree, term.total_degree());
        difference.add(term);
    }
    Rational rhs(binomial_int(n, m));
    if ((m % 2 != 0) != negate_rhs)
        rhs = -rhs;
    difference.add_term(0, 0, -rhs);

    SumRuleProof proof;
    proof.lhs_total_degree = expansion_degree;
    proof.holds = difference.is_zero();
    if (!proof.holds) {
        const auto& [key, coeff] = *difference.coefficients().begin();
        proof.bad_degree = key;
        proof.bad_coefficient = coeff;
    }
    return proof;
}

} // namespace scarf2::identities
