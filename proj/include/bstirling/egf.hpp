#pragma once

#include <initializer_list>
#include <vector>

#include "bstirling/rational.hpp"

namespace bstirling {

/// Truncated exponential generating function B(z) = sum_n U_n z^n / n!,
/// stored by its Taylor coefficients U_0 .. U_order.  Operations on two
/// series truncate to the smaller order.
class EgfSeries {
public:
    /// Zero series of the given order (order + 1 stored coefficients).
    explicit EgfSeries(int order);
    /// Takes U_0 .. U_N; the order is inferred from the size.
    explicit EgfSeries(RationalVector taylor_coeffs);

    int order() const { return static_cast<int>(u_.size()) - 1; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, const Rational& value);
    const RationalVector& coeffs() const { return u_; }

    /// Ordinary (power-series) coefficient a_n = U_n / n!.
    Rational ordinary_coeff(int n) const;

    /// True when U_0 = 1, i.e. the series lies in the composition class.
    bool in_class_b() const { return coeff(0).is_one(); }

    /// Copy truncated to a smaller (or equal) order.
    EgfSeries truncated(int new_order) const;

    /// Evaluate the truncation sum_{n<=order} U_n x^n / n! at a point.
    Rational evaluate(const Rational& x) const;

    friend bool operator==(const EgfSeries& a, const EgfSeries& b);
    friend bool operator!=(const EgfSeries& a, const EgfSeries& b) { return !(a == b); }

private:
    RationalVector u_;
};

/// Convenience constructor from an explicit coefficient list; the series
/// order is values.size() - 1.
EgfSeries make_series(const std::vector<Rational>& values);

/// Constant series 1 (U_0 = 1, rest zero).
EgfSeries one_series(int order);

EgfSeries add(const EgfSeries& a, const EgfSeries& b);
EgfSeries subtract(const EgfSeries& a, const EgfSeries& b);
EgfSeries scale(const EgfSeries& a, const Rational& c);
/// a with c added to its constant term.
EgfSeries shift_constant(const EgfSeries& a, const Rational& c);

/// Binomial convolution (a * b)_n = sum_j C(n,j) a_j b_{n-j}; this is the
/// EGF of the product of the two functions.
EgfSeries binomial_convolution(const EgfSeries& a, const EgfSeries& b);

/// log of a series with U_0 = 1 (result has L_0 = 0).
EgfSeries log_series(const EgfSeries& b);

/// exp of a series with U_0 = 0 (result has U_0 = 1).
EgfSeries exp_series(const EgfSeries& g);

/// b^alpha = exp(alpha log b) for b with U_0 = 1 and any rational alpha.
EgfSeries pow_scalar(const EgfSeries& b, const Rational& alpha);

/// Formal substitution b(inner(z)) for inner with zero constant term.
EgfSeries substitute(const EgfSeries& b, const EgfSeries& inner);

/// Inner operation of the second kind: (b o c)(z) = b(c(z) - 1).
/// Both operands must have constant term 1.
EgfSeries circ(const EgfSeries& b, const EgfSeries& c);

/// Inner operation of the first kind: (b <> c)(z) = b(log c(z)).
/// Both operands must have constant term 1.
EgfSeries diamond(const EgfSeries& b, const EgfSeries& c);

}  // namespace bstirling
