#pragma once

#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace scarf2::identities {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational; kept in canonical form (reduced, positive denominator)
/// by the backing type.
using Rational = boost::multiprecision::cpp_rational;

/// Binomial C(x, k) with rational upper index, as the falling-factorial
/// product x(x-1)...(x-k+1)/k!. Exact.
Rational binomial_rational(const Rational& x, int k);

/// Exact  sum_{m'=0}^{l} (-1)^m' C(l, m') m'^j.
/// Vanishes for j < l and equals (-1)^l l! at j = l.
Rational binomial_moment_sum(int l, int j);

/// Bivariate polynomial in (a, b) over exact rationals; zero coefficients
/// are never stored.
class BivariatePolynomial {
  public:
    using Key = std::pair<int, int>; ///< (degree in a, degree in b)

    BivariatePolynomial() = default;

    void add_term(int deg_a, int deg_b, const Rational& coeff);
    void add(const BivariatePolynomial& other);
    BivariatePolynomial multiplied_by(const BivariatePolynomial& other) const;
    void scale(const Rational& factor);

    bool is_zero() const { return coeffs_.empty(); }
    int total_degree() const; ///< -1 for the zero polynomial
    const std::map<Key, Rational>& coefficients() const { return coeffs_; }

    /// C(a - shift, k) expanded in the first variable, exact.
    static BivariatePolynomial falling_binomial_in_a(const Rational& shift, int k);
    /// C(b + shift, k) expanded in the second variable, exact.
    static BivariatePolynomial falling_binomial_in_b(const Rational& shift, int k);

  private:
    std::map<Key, Rational> coeffs_;
};

/// Both sides of the sum rule
///   sum_k (-1)^k C(n,k) C(a-m-k, n-m) C(b+m+k, m)  =  (-1)^m C(n,m)
/// at a specific rational point (a, b). Exact.
struct SumRuleValues {
    Rational lhs;
    Rational rhs;
};
SumRuleValues new_sum_rule_eval(int n, int m, const Rational& a, const Rational& b);

/// Result of the polynomial-identity proof of the sum rule at one (n, m).
struct SumRuleProof {
    bool holds = false;
    int lhs_total_degree = -1;       ///< degree of the expanded lhs before cancellation
    std::pair<int, int> bad_degree;  ///< offending monomial when !holds
    Rational bad_coefficient;        ///< its nonzero coefficient

    explicit operator bool() const { return holds; }
};

/// Expands lhs - rhs as a BivariatePolynomial in (a, b) over exact
/// rationals and checks that every coefficient vanishes: a complete proof
/// of the identity for this (n, m), not a sampling test.
///
/// `negate_rhs` flips the sign of the right-hand side (negative control).
SumRuleProof new_sum_rule_prove(int n, int m, bool negate_rhs = false);

} // namespace scarf2::identities
