#pragma once

#include "bstirling/egf.hpp"
#include "bstirling/rational.hpp"

namespace bstirling {

enum class StirlingKind { First, Second };

const char* kind_name(StirlingKind kind);

/// Lower-triangular table of generalized Stirling numbers attached to a
/// series B: row n, column k, 0 <= k <= n <= nmax.  First kind collects
/// coefficients of (log B)^k / k!, second kind of (B - 1)^k / k!.
class StirlingTriangle {
public:
    StirlingTriangle(StirlingKind kind, int nmax);

    StirlingKind kind() const { return kind_; }
    int nmax() const { return static_cast<int>(m_.rows()) - 1; }

    /// Zero above the diagonal; BadIndices outside the square.
    const Rational& entry(int n, int k) const;
    void set_entry(int n, int k, const Rational& value);

    /// Dense (nmax+1) x (nmax+1) matrix; strictly upper part is zero.
    const RationalMatrix& matrix() const { return m_; }

    /// Row n as a vector of n + 1 entries.
    RationalVector row(int n) const;

    friend bool operator==(const StirlingTriangle& a, const StirlingTriangle& b);
    friend bool operator!=(const StirlingTriangle& a, const StirlingTriangle& b) {
        return !(a == b);
    }

private:
    StirlingKind kind_;
    RationalMatrix m_;
};

/// Generating-function construction: column k of the triangle is read off
/// the EGF coefficients of X^k / k! with X = log B (first kind) or
/// X = B - 1 (second kind), powers built by repeated binomial convolution.
StirlingTriangle triangle_from_series(const EgfSeries& b, StirlingKind kind, int nmax);

/// Recurrence construction, independent of the power computation: column 1
/// is seeded from the series and columns k >= 2 follow
///   T(n, k) = (1/k) * sum_{j=k-1}^{n-1} C(n, j) T(j, k-1) T(n-j, 1)
/// for both kinds.  (Stated for the first kind without the binomial factor
/// in some sources; the derivation via binomial convolution forces C(n, j),
/// and without it even T(2, 2) = T(1, 1)^2 fails.)
StirlingTriangle triangle_recursive(const EgfSeries& b, StirlingKind kind, int nmax);

/// Classical signed Stirling numbers of the first kind via
/// s(n+1, k) = s(n, k-1) - n s(n, k).  Oracle: no series machinery.
StirlingTriangle classical_first(int nmax);

/// Classical Stirling numbers of the second kind via
/// S(n+1, k) = S(n, k-1) + k S(n, k).  Oracle: no series machinery.
StirlingTriangle classical_second(int nmax);

/// Exact product of two lower-triangular square matrices, iterating only
/// over the triangular support.
RationalMatrix lower_product(const RationalMatrix& a, const RationalMatrix& b);

/// First kind of the same series from its second kind:
/// s_B(n, k) = sum_j S_B(n, j) s(j, k).
StirlingTriangle convert_second_to_first(const StirlingTriangle& second);

/// Second kind of the same series from its first kind:
/// S_B(n, k) = sum_j s_B(n, j) S(j, k).
StirlingTriangle convert_first_to_second(const StirlingTriangle& first);

/// Triangle of b circ c from b's triangle of the given kind and the
/// second-kind triangle of c: T_{b o c}(n, k) = sum_j S_c(n, j) T_b(j, k).
StirlingTriangle compose_circ_triangles(StirlingKind kind, const StirlingTriangle& t_b,
                                        const StirlingTriangle& second_c);

/// Triangle of b diamond c from b's triangle of the given kind and the
/// first-kind triangle of c: T_{b <> c}(n, k) = sum_j s_c(n, j) T_b(j, k).
StirlingTriangle compose_diamond_triangles(StirlingKind kind, const StirlingTriangle& t_b,
                                           const StirlingTriangle& first_c);

}  // namespace bstirling
