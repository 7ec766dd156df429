#include "bstirling/stirling.hpp"

#include <string>

namespace bstirling {

namespace {

void check_nmax(int nmax) {
    if (nmax < 0) throw BadIndices("triangle size must be nonnegative");
}

EgfSeries column_seed(const EgfSeries& b, StirlingKind kind, int nmax) {
    if (!b.in_class_b()) throw NotInClassB("Stirling triangles need a series with constant term 1");
    if (b.order() < nmax)
        throw OrderTooSmall("triangle up to n = " + std::to_string(nmax) +
                            " needs a series of at least that order, got " +
                            std::to_string(b.order()));
    EgfSeries base = b.truncated(nmax);
    return kind == StirlingKind::First ? log_series(base)
                                       : shift_constant(base, Rational(-1));
}

void check_same_size(const StirlingTriangle& a, const StirlingTriangle& b) {
    if (a.nmax() != b.nmax())
        throw SizeMismatch("triangles have different sizes: " + std::to_string(a.nmax()) +
                           " vs " + std::to_string(b.nmax()));
}

StirlingTriangle from_matrix(StirlingKind kind, const RationalMatrix& m) {
    StirlingTriangle t(kind, static_cast<int>(m.rows()) - 1);
    for (int n = 0; n <= t.nmax(); ++n)
        for (int k = 0; k <= n; ++k) t.set_entry(n, k, m(n, k));
    return t;
}

}  // namespace

const char* kind_name(StirlingKind kind) {
    return kind == StirlingKind::First ? "first" : "second";
}

StirlingTriangle::StirlingTriangle(StirlingKind kind, int nmax) : kind_(kind) {
    check_nmax(nmax);
    m_ = RationalMatrix::Constant(nmax + 1, nmax + 1, Rational(0));
}

const Rational& StirlingTriangle::entry(int n, int k) const {
    if (n < 0 || n > nmax() || k < 0 || k > nmax())
        throw BadIndices("triangle index (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") out of range for nmax " + std::to_string(nmax()));
    return m_(n, k);
}

void StirlingTriangle::set_entry(int n, int k, const Rational& value) {
    if (n < 0 || n > nmax() || k < 0 || k > n)
        throw BadIndices("triangle entry (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") not in the lower triangle of nmax " + std::to_string(nmax()));
    m_(n, k) = value;
}

RationalVector StirlingTriangle::row(int n) const {
    if (n < 0 || n > nmax())
        throw BadIndices("triangle row " + std::to_string(n) + " out of range");
    return m_.row(n).head(n + 1).transpose();
}

bool operator==(const StirlingTriangle& a, const StirlingTriangle& b) {
    if (a.kind_ != b.kind_ || a.nmax() != b.nmax()) return false;
    for (int n = 0; n <= a.nmax(); ++n)
        for (int k = 0; k <= n; ++k)
            if (a.m_(n, k) != b.m_(n, k)) return false;
    return true;
}

StirlingTriangle triangle_from_series(const EgfSeries& b, StirlingKind kind, int nmax) {
    EgfSeries x = column_seed(b, kind, nmax);
    StirlingTriangle t(kind, nmax);
    t.set_entry(0, 0, Rational(1));
    EgfSeries power = one_series(nmax);  // X^k / k!, starting at k = 0
    for (int k = 1; k <= nmax; ++k) {
        power = scale(binomial_convolution(power, x), Rational(1, k));
        for (int n = k; n <= nmax; ++n) t.set_entry(n, k, power.coeff(n));
    }
    return t;
}

StirlingTriangle triangle_recursive(const EgfSeries& b, StirlingKind kind, int nmax) {
    EgfSeries x = column_seed(b, kind, nmax);
    StirlingTriangle t(kind, nmax);
    t.set_entry(0, 0, Rational(1));
    for (int n = 1; n <= nmax; ++n) t.set_entry(n, 1, x.coeff(n));
    for (int k = 2; k <= nmax; ++k) {
        for (int n = k; n <= nmax; ++n) {
            Rational acc(0);
            for (int j = k - 1; j <= n - 1; ++j)
                acc += Rational(binomial(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(j))) *
                       t.entry(j, k - 1) * t.entry(n - j, 1);
            t.set_entry(n, k, acc / Rational(k));
        }
    }
    return t;
}

StirlingTriangle classical_first(int nmax) {
    check_nmax(nmax);
    StirlingTriangle t(StirlingKind::First, nmax);
    t.set_entry(0, 0, Rational(1));
    for (int n = 0; n < nmax; ++n)
        for (int k = 1; k <= n + 1; ++k)
            t.set_entry(n + 1, k, t.entry(n, k - 1) - Rational(n) * t.entry(n, k));
    return t;
}

StirlingTriangle classical_second(int nmax) {
    check_nmax(nmax);
    StirlingTriangle t(StirlingKind::Second, nmax);
    t.set_entry(0, 0, Rational(1));
    for (int n = 0; n < nmax; ++n)
        for (int k = 1; k <= n + 1; ++k)
            t.set_entry(n + 1, k, t.entry(n, k - 1) + Rational(k) * t.entry(n, k));
    return t;
}

RationalMatrix lower_product(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw SizeMismatch("lower-triangular product needs equal square matrices");
    const Eigen::Index size = a.rows();
    RationalMatrix r = RationalMatrix::Constant(size, size, Rational(0));
    for (Eigen::Index n = 0; n < size; ++n)
        for (Eigen::Index k = 0; k <= n; ++k) {
            Rational acc(0);
            for (Eigen::Index j = k; j <= n; ++j) acc += a(n, j) * b(j, k);
            r(n, k) = acc;
        }
    return r;
}

StirlingTriangle convert_second_to_first(const StirlingTriangle& second) {
    if (second.kind() != StirlingKind::Second)
        throw KindMismatch("conversion to the first kind starts from a second-kind triangle");
    RationalMatrix m = lower_product(second.matrix(), classical_first(second.nmax()).matrix());
    return from_matrix(StirlingKind::First, m);
}

StirlingTriangle convert_first_to_second(const StirlingTriangle& first) {
    if (first.kind() != StirlingKind::First)
        throw KindMismatch("conversion to the second kind starts from a first-kind triangle");
    RationalMatrix m = lower_product(first.matrix(), classical_second(first.nmax()).matrix());
    return from_matrix(StirlingKind::Second, m);
}

StirlingTriangle compose_circ_triangles(StirlingKind kind, const StirlingTriangle& t_b,
                                        const StirlingTriangle& second_c) {
    if (t_b.kind() != kind)
        throw KindMismatch("triangle of the outer series has kind " +
                           std::string(kind_name(t_b.kind())) + ", expected " + kind_name(kind));
    if (second_c.kind() != StirlingKind::Second)
        throw KindMismatch("circ composition needs the second-kind triangle of the inner series");
    check_same_size(t_b, second_c);
    return from_matrix(kind, lower_product(second_c.matrix(), t_b.matrix()));
}

StirlingTriangle compose_diamond_triangles(StirlingKind kind, const StirlingTriangle& t_b,
                                           const StirlingTriangle& first_c) {
    if (t_b.kind() != kind)
        throw KindMismatch("triangle of the outer series has kind " +
                           std::string(kind_name(t_b.kind())) + ", expected " + kind_name(kind));
    if (first_c.kind() != StirlingKind::First)
        throw KindMismatch("diamond composition needs the first-kind triangle of the inner series");
    check_same_size(t_b, first_c);
    return from_matrix(kind, lower_product(first_c.matrix(), t_b.matrix()));
}

}  // namespace bstirling
