#pragma once

#include "bstirling/egf.hpp"
#include "bstirling/rational.hpp"
#include "bstirling/stirling.hpp"

namespace bstirling {

/// Polynomial kept simultaneously in the monomial basis (coefficients c_k of
/// x^k) and the falling-factorial basis (coefficients d_k of (x)_k).  The two
/// representations always describe the same polynomial; the factory
/// functions derive one basis from the other via the classical triangles.
class PotentialPolynomial {
public:
    /// Both bases supplied by the caller, which promises they agree (used
    /// where the two sequences arrive from independent computations).
    PotentialPolynomial(RationalVector monomial, RationalVector falling);

    static PotentialPolynomial from_monomial(RationalVector monomial);
    static PotentialPolynomial from_falling(RationalVector falling);
    static PotentialPolynomial zero();

    int degree() const { return static_cast<int>(monomial_.size()) - 1; }
    const RationalVector& monomial() const { return monomial_; }
    const RationalVector& falling() const { return falling_; }

    /// Mathematical equality (trailing zero coefficients ignored).
    friend bool operator==(const PotentialPolynomial& a, const PotentialPolynomial& b);
    friend bool operator!=(const PotentialPolynomial& a, const PotentialPolynomial& b) {
        return !(a == b);
    }

private:
    RationalVector monomial_;
    RationalVector falling_;
};

/// Basis changes via the classical triangles: x^k = sum_j S(k,j)(x)_j and
/// (x)_k = sum_j s(k,j) x^j.
RationalVector monomial_to_falling(const RationalVector& c);
RationalVector falling_to_monomial(const RationalVector& d);

/// Potential polynomial P_n(B;x): monomial coefficients are the first-kind
/// triangle row, falling coefficients the second-kind row.
PotentialPolynomial potential(const EgfSeries& b, int n);

/// Exact Horner evaluation in the monomial basis.
Rational evaluate(const PotentialPolynomial& p, const Rational& x0);

/// Evaluation through the falling-factorial basis (cross-check path).
Rational evaluate_falling(const PotentialPolynomial& p, const Rational& x0);

/// Normalized derivative P^(r)/r!: monomial coefficient of x^{k-r} is
/// C(k,r) c_k.  Returns the zero polynomial when r exceeds the degree.
PotentialPolynomial derivative(const PotentialPolynomial& p, int r);

/// Normalized forward difference (Delta^r P)/r!: falling coefficient of
/// (x)_{k-r} is C(k,r) d_k.  Zero polynomial when r exceeds the degree.
PotentialPolynomial forward_difference(const PotentialPolynomial& p, int r);

/// Delta^r p at x0 by the alternating sum
/// sum_j C(r,j) (-1)^{r-j} p(x0 + j); equals r! times the evaluation of
/// forward_difference(p, r) at x0.
Rational forward_difference_pointwise(const PotentialPolynomial& p, int r, const Rational& x0);

/// Right-hand expansion of the normalized derivative:
/// P_n^(r)(B;x)/r! = sum_j C(n,j) s_B(j,r) P_{n-j}(B;x).
PotentialPolynomial derivative_expansion(const EgfSeries& b, int n, int r);

/// Right-hand expansion of the normalized forward difference:
/// (Delta^r P_n)(B;x)/r! = sum_j C(n,j) S_B(j,r) P_{n-j}(B;x).
PotentialPolynomial forward_difference_expansion(const EgfSeries& b, int n, int r);

/// Sheffer-style combination sum_k C(n,k) A_k P_{n-k}(B;x) with A_k the
/// coefficients of a (any series; b must have constant term 1).
PotentialPolynomial sheffer_combine(const EgfSeries& a, const EgfSeries& b, int n);

/// P_n(B circ C; x) = sum_k S_C(n,k) P_k(B;x).
PotentialPolynomial compose_potential_circ(const EgfSeries& b, const EgfSeries& c, int n);

/// P_n(B diamond C; x) = sum_k s_C(n,k) P_k(B;x).
PotentialPolynomial compose_potential_diamond(const EgfSeries& b, const EgfSeries& c, int n);

/// Generalized falling factorial (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda);
/// (x)_{0,lambda} = 1.  lambda = 0 degenerates to x^n.
Rational degenerate_falling(const Rational& x0, int n, const Rational& lambda);

/// (x)_n = x(x-1)...(x-n+1).
Rational falling_factorial(const Rational& x0, int n);

}  // namespace bstirling
