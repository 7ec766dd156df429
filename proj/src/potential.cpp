#include "bstirling/potential.hpp"

#include <algorithm>
#include <string>

namespace bstirling {

namespace {

void check_degree_vector(const RationalVector& v) {
    if (v.size() < 1) throw BadIndices("polynomial needs at least the constant coefficient");
}

/// Pads with zeros up to the given coefficient count.
RationalVector padded(const RationalVector& v, Eigen::Index size) {
    RationalVector r = RationalVector::Constant(size, Rational(0));
    r.head(v.size()) = v;
    return r;
}

bool equal_padded(const RationalVector& a, const RationalVector& b) {
    Eigen::Index size = std::max(a.size(), b.size());
    RationalVector pa = padded(a, size);
    RationalVector pb = padded(b, size);
    for (Eigen::Index i = 0; i < size; ++i)
        if (pa[i] != pb[i]) return false;
    return true;
}

void check_potential_args(const EgfSeries& b, int n) {
    if (!b.in_class_b())
        throw NotInClassB("potential polynomials need a series with constant term 1");
    if (n < 0 || n > b.order())
        throw OrderTooSmall("potential polynomial of degree " + std::to_string(n) +
                            " needs a series of at least that order, got " +
                            std::to_string(b.order()));
}

PotentialPolynomial potential_from_triangles(const StirlingTriangle& first,
                                             const StirlingTriangle& second, int n) {
    return PotentialPolynomial(first.row(n), second.row(n));
}

}  // namespace

PotentialPolynomial::PotentialPolynomial(RationalVector monomial, RationalVector falling)
    : monomial_(std::move(monomial)), falling_(std::move(falling)) {
    check_degree_vector(monomial_);
    if (monomial_.size() != falling_.size())
        throw SizeMismatch("the two bases of a polynomial must have equal length");
}

PotentialPolynomial PotentialPolynomial::from_monomial(RationalVector monomial) {
    check_degree_vector(monomial);
    RationalVector falling = monomial_to_falling(monomial);
    return PotentialPolynomial(std::move(monomial), std::move(falling));
}

PotentialPolynomial PotentialPolynomial::from_falling(RationalVector falling) {
    check_degree_vector(falling);
    RationalVector monomial = falling_to_monomial(falling);
    return PotentialPolynomial(std::move(monomial), std::move(falling));
}

PotentialPolynomial PotentialPolynomial::zero() {
    return PotentialPolynomial(RationalVector::Constant(1, Rational(0)),
                               RationalVector::Constant(1, Rational(0)));
}

bool operator==(const PotentialPolynomial& a, const PotentialPolynomial& b) {
    return equal_padded(a.monomial_, b.monomial_) && equal_padded(a.falling_, b.falling_);
}

RationalVector monomial_to_falling(const RationalVector& c) {
    check_degree_vector(c);
    int deg = static_cast<int>(c.size()) - 1;
    StirlingTriangle s2 = classical_second(deg);
    RationalVector d = RationalVector::Constant(deg + 1, Rational(0));
    for (int j = 0; j <= deg; ++j)
        for (int k = j; k <= deg; ++k) d[j] += c[k] * s2.entry(k, j);
    return d;
}

RationalVector falling_to_monomial(const RationalVector& d) {
    check_degree_vector(d);
    int deg = static_cast<int>(d.size()) - 1;
    StirlingTriangle s1 = classical_first(deg);
    RationalVector c = RationalVector::Constant(deg + 1, Rational(0));
    for (int j = 0; j <= deg; ++j)
        for (int k = j; k <= deg; ++k) c[j] += d[k] * s1.entry(k, j);
    return c;
}

PotentialPolynomial potential(const EgfSeries& b, int n) {
    check_potential_args(b, n);
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, n);
    StirlingTriangle second = triangle_from_series(b, StirlingKind::Second, n);
    return potential_from_triangles(first, second, n);
}

Rational evaluate(const PotentialPolynomial& p, const Rational& x0) {
    Rational acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x0 + p.monomial()[k];
    return acc;
}

Rational evaluate_falling(const PotentialPolynomial& p, const Rational& x0) {
    Rational acc(0);
    Rational product(1);  // (x0)_k, updated incrementally
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) product *= x0 - Rational(k - 1);
        acc += p.falling()[k] * product;
    }
    return acc;
}

PotentialPolynomial derivative(const PotentialPolynomial& p, int r) {
    if (r < 0) throw BadIndices("derivative order must be nonnegative");
    if (r > p.degree()) return PotentialPolynomial::zero();
    RationalVector c = RationalVector::Constant(p.degree() - r + 1, Rational(0));
    for (int k = r; k <= p.degree(); ++k)
        c[k - r] = Rational(binomial(static_cast<unsigned long>(k),
                                     static_cast<unsigned long>(r))) *
                   p.monomial()[k];
    return PotentialPolynomial::from_monomial(std::move(c));
}

PotentialPolynomial forward_difference(const PotentialPolynomial& p, int r) {
    if (r < 0) throw BadIndices("difference order must be nonnegative");
    if (r > p.degree()) return PotentialPolynomial::zero();
    RationalVector d = RationalVector::Constant(p.degree() - r + 1, Rational(0));
    for (int k = r; k <= p.degree(); ++k)
        d[k - r] = Rational(binomial(static_cast<unsigned long>(k),
                                     static_cast<unsigned long>(r))) *
                   p.falling()[k];
    return PotentialPolynomial::from_falling(std::move(d));
}

Rational forward_difference_pointwise(const PotentialPolynomial& p, int r, const Rational& x0) {
    if (r < 0) throw BadIndices("difference order must be nonnegative");
    Rational acc(0);
    for (int j = 0; j <= r; ++j) {
        Rational term = Rational(binomial(static_cast<unsigned long>(r),
                                          static_cast<unsigned long>(j))) *
                        evaluate(p, x0 + Rational(j));
        acc += (r - j) % 2 == 0 ? term : -term;
    }
    return acc;
}

namespace {

PotentialPolynomial expansion_sum(const EgfSeries& b, int n, int r, StirlingKind weight_kind) {
    check_potential_args(b, n);
    if (r < 0 || r > n) throw BadIndices("expansion order r must satisfy 0 <= r <= n");
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, n);
    StirlingTriangle second = triangle_from_series(b, StirlingKind::Second, n);
    const StirlingTriangle& w = weight_kind == StirlingKind::First ? first : second;
    RationalVector acc = RationalVector::Constant(n - r + 1, Rational(0));
    for (int j = r; j <= n; ++j) {
        Rational weight = Rational(binomial(static_cast<unsigned long>(n),
                                            static_cast<unsigned long>(j))) *
                          w.entry(j, r);
        if (weight.is_zero()) continue;
        for (int i = 0; i <= n - j; ++i) acc[i] += weight * first.entry(n - j, i);
    }
    return PotentialPolynomial::from_monomial(std::move(acc));
}

}  // namespace

PotentialPolynomial derivative_expansion(const EgfSeries& b, int n, int r) {
    return expansion_sum(b, n, r, StirlingKind::First);
}

PotentialPolynomial forward_difference_expansion(const EgfSeries& b, int n, int r) {
    return expansion_sum(b, n, r, StirlingKind::Second);
}

PotentialPolynomial sheffer_combine(const EgfSeries& a, const EgfSeries& b, int n) {
    if (!b.in_class_b())
        throw NotInClassB("the base series of a Sheffer combination must have constant term 1");
    if (n < 0 || n > a.order() || n > b.order())
        throw OrderTooSmall("Sheffer combination of degree " + std::to_string(n) +
                            " needs both series at least at that order");
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, n);
    RationalVector acc = RationalVector::Constant(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        Rational weight = Rational(binomial(static_cast<unsigned long>(n),
                                            static_cast<unsigned long>(k))) *
                          a.coeff(k);
        if (weight.is_zero()) continue;
        for (int i = 0; i <= n - k; ++i) acc[i] += weight * first.entry(n - k, i);
    }
    return PotentialPolynomial::from_monomial(std::move(acc));
}

namespace {

PotentialPolynomial compose_potential(const EgfSeries& b, const EgfSeries& c, int n,
                                      StirlingKind inner_kind) {
    check_potential_args(b, n);
    check_potential_args(c, n);
    StirlingTriangle inner = triangle_from_series(c, inner_kind, n);
    StirlingTriangle first_b = triangle_from_series(b, StirlingKind::First, n);
    RationalVector acc = RationalVector::Constant(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        const Rational& weight = inner.entry(n, k);
        if (weight.is_zero()) continue;
        for (int i = 0; i <= k; ++i) acc[i] += weight * first_b.entry(k, i);
    }
    return PotentialPolynomial::from_monomial(std::move(acc));
}

}  // namespace

PotentialPolynomial compose_potential_circ(const EgfSeries& b, const EgfSeries& c, int n) {
    return compose_potential(b, c, n, StirlingKind::Second);
}

PotentialPolynomial compose_potential_diamond(const EgfSeries& b, const EgfSeries& c, int n) {
    return compose_potential(b, c, n, StirlingKind::First);
}

Rational degenerate_falling(const Rational& x0, int n, const Rational& lambda) {
    if (n < 0) throw BadIndices("falling factorial length must be nonnegative");
    Rational acc(1);
    for (int i = 0; i < n; ++i) acc *= x0 - Rational(i) * lambda;
    return acc;
}

Rational falling_factorial(const Rational& x0, int n) {
    return degenerate_falling(x0, n, Rational(1));
}

}  // namespace bstirling
