#include "bstirling/egf.hpp"

#include <algorithm>
#include <string>

namespace bstirling {

namespace {

void check_index(int n, int order) {
    if (n < 0 || n > order)
        throw BadIndices("coefficient index " + std::to_string(n) + " out of range [0, " +
                         std::to_string(order) + "]");
}

/// Incrementally maintained Pascal row: after update(n), row[j] = C(n, j).
class PascalRow {
public:
    explicit PascalRow(int nmax) : row_(static_cast<std::size_t>(nmax) + 1), n_(0) {
        row_[0] = 1;
    }
    /// Advance to row n (must be called with n = current + 1 or current).
    void advance_to(int n) {
        for (; n_ < n; ++n_)
            for (int j = n_ + 1; j >= 1; --j) row_[static_cast<std::size_t>(j)] += row_[static_cast<std::size_t>(j - 1)];
    }
    const mpz_class& operator[](int j) const { return row_[static_cast<std::size_t>(j)]; }

private:
    std::vector<mpz_class> row_;
    int n_;
};

}  // namespace

EgfSeries::EgfSeries(int order) {
    if (order < 0) throw BadIndices("series order must be nonnegative");
    u_ = RationalVector::Constant(order + 1, Rational(0));
}

EgfSeries::EgfSeries(RationalVector taylor_coeffs) : u_(std::move(taylor_coeffs)) {
    if (u_.size() < 1) throw BadIndices("series needs at least the constant coefficient");
}

const Rational& EgfSeries::coeff(int n) const {
    check_index(n, order());
    return u_[n];
}

void EgfSeries::set_coeff(int n, const Rational& value) {
    check_index(n, order());
    u_[n] = value;
}

Rational EgfSeries::ordinary_coeff(int n) const {
    return coeff(n) / Rational(factorial(static_cast<unsigned long>(n)));
}

EgfSeries EgfSeries::truncated(int new_order) const {
    if (new_order > order())
        throw OrderTooSmall("cannot extend a series from order " + std::to_string(order()) +
                            " to " + std::to_string(new_order));
    check_index(new_order, order());
    return EgfSeries(RationalVector(u_.head(new_order + 1)));
}

Rational EgfSeries::evaluate(const Rational& x) const {
    // Horner on the ordinary coefficients.
    Rational acc(0);
    for (int n = order(); n >= 0; --n) acc = acc * x + ordinary_coeff(n);
    return acc;
}

bool operator==(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) return false;
    for (int n = 0; n <= a.order(); ++n)
        if (a.u_[n] != b.u_[n]) return false;
    return true;
}

EgfSeries make_series(const std::vector<Rational>& values) {
    if (values.empty()) throw BadIndices("series needs at least the constant coefficient");
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
    return EgfSeries(std::move(v));
}

EgfSeries one_series(int order) {
    EgfSeries s(order);
    s.set_coeff(0, Rational(1));
    return s;
}

EgfSeries add(const EgfSeries& a, const EgfSeries& b) {
    int n = std::min(a.order(), b.order());
    EgfSeries r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

EgfSeries subtract(const EgfSeries& a, const EgfSeries& b) {
    int n = std::min(a.order(), b.order());
    EgfSeries r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

EgfSeries scale(const EgfSeries& a, const Rational& c) {
    EgfSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.set_coeff(i, a.coeff(i) * c);
    return r;
}

EgfSeries shift_constant(const EgfSeries& a, const Rational& c) {
    EgfSeries r = a;
    r.set_coeff(0, a.coeff(0) + c);
    return r;
}

EgfSeries binomial_convolution(const EgfSeries& a, const EgfSeries& b) {
    int order = std::min(a.order(), b.order());
    EgfSeries r(order);
    PascalRow c(order);
    for (int n = 0; n <= order; ++n) {
        c.advance_to(n);
        Rational acc(0);
        for (int j = 0; j <= n; ++j) acc += Rational(c[j]) * a.coeff(j) * b.coeff(n - j);
        r.set_coeff(n, acc);
    }
    return r;
}

EgfSeries log_series(const EgfSeries& b) {
    if (!b.in_class_b()) throw NotInClassB("log needs a series with constant term 1");
    int order = b.order();
    EgfSeries l(order);
    // From B' = B (log B)':  U_n = sum_{j=1..n} C(n-1, j-1) L_j U_{n-j}.
    PascalRow c(order);
    for (int n = 1; n <= order; ++n) {
        c.advance_to(n - 1);
        Rational acc = b.coeff(n);
        for (int j = 1; j <= n - 1; ++j) acc -= Rational(c[j - 1]) * l.coeff(j) * b.coeff(n - j);
        l.set_coeff(n, acc);
    }
    return l;
}

EgfSeries exp_series(const EgfSeries& g) {
    if (!g.coeff(0).is_zero())
        throw NonzeroConstantTerm("exp needs a series with constant term 0");
    int order = g.order();
    EgfSeries u = one_series(order);
    PascalRow c(order);
    for (int n = 1; n <= order; ++n) {
        c.advance_to(n - 1);
        Rational acc(0);
        for (int j = 1; j <= n; ++j) acc += Rational(c[j - 1]) * g.coeff(j) * u.coeff(n - j);
        u.set_coeff(n, acc);
    }
    return u;
}

EgfSeries pow_scalar(const EgfSeries& b, const Rational& alpha) {
    return exp_series(scale(log_series(b), alpha));
}

EgfSeries substitute(const EgfSeries& b, const EgfSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw NonzeroConstantTerm("substitution needs an inner series with constant term 0");
    int order = std::min(b.order(), inner.order());

    // Work on ordinary coefficients: Horner with truncated polynomial product.
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) g[static_cast<std::size_t>(i)] = inner.ordinary_coeff(i);

    std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
    std::vector<Rational> next(static_cast<std::size_t>(order) + 1);
    acc[0] = b.ordinary_coeff(order);
    for (int i = order - 1; i >= 0; --i) {
        // next = acc * g, truncated; g[0] = 0 so the degree shifts up by >= 1.
        for (int n = 0; n <= order; ++n) {
            Rational s(0);
            for (int j = 0; j < n; ++j)
                s += acc[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(n - j)];
            next[static_cast<std::size_t>(n)] = s;
        }
        std::swap(acc, next);
        acc[0] += b.ordinary_coeff(i);
    }

    EgfSeries r(order);
    for (int n = 0; n <= order; ++n)
        r.set_coeff(n, acc[static_cast<std::size_t>(n)] *
                           Rational(factorial(static_cast<unsigned long>(n))));
    return r;
}

EgfSeries circ(const EgfSeries& b, const EgfSeries& c) {
    if (!b.in_class_b() || !c.in_class_b())
        throw NotInClassB("the inner operations need both series to have constant term 1");
    return substitute(b, shift_constant(c, Rational(-1)));
}

EgfSeries diamond(const EgfSeries& b, const EgfSeries& c) {
    if (!b.in_class_b() || !c.in_class_b())
        throw NotInClassB("the inner operations need both series to have constant term 1");
    return substitute(b, log_series(c));
}

}  // namespace bstirling
