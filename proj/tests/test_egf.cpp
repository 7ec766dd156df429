#include "doctest.h"

#include "bstirling/egf.hpp"
#include "bstirling/errors.hpp"

using namespace bstirling;

namespace {
EgfSeries series_of(std::initializer_list<long> values) {
    std::vector<Rational> v;
    for (long x : values) v.emplace_back(x);
    return make_series(v);
}
}  // namespace

TEST_CASE("series basics") {
    EgfSeries s = series_of({1, 2, 2, 0, 0});  // (1+z)^2 as an EGF
    CHECK(s.order() == 4);
    CHECK(s.coeff(2) == Rational(2));
    CHECK(s.ordinary_coeff(2) == Rational(1));
    CHECK(s.in_class_b());
    CHECK_THROWS_AS(s.coeff(5), BadIndices);
    CHECK_THROWS_AS(s.coeff(-1), BadIndices);
    CHECK(s.truncated(2) == series_of({1, 2, 2}));
    CHECK_THROWS_AS(s.truncated(9), OrderTooSmall);
    CHECK(one_series(3) == series_of({1, 0, 0, 0}));
    CHECK_THROWS_AS(make_series({}), BadIndices);
}

TEST_CASE("series evaluation") {
    // E at 1 truncated at order 4: 1 + 1 + 1/2 + 1/6 + 1/24.
    CHECK(series_of({1, 1, 1, 1, 1}).evaluate(Rational(1)) == Rational(65, 24));
    CHECK(series_of({1, 2, 2, 0, 0}).evaluate(Rational(3)) == Rational(16));
}

TEST_CASE("pointwise operations") {
    EgfSeries a = series_of({1, 1, 0});
    EgfSeries b = series_of({1, 0, 2, 5});
    CHECK(add(a, b) == series_of({2, 1, 2}));
    CHECK(subtract(b, a).coeff(1) == Rational(-1));
    CHECK(scale(a, Rational(3)) == series_of({3, 3, 0}));
    CHECK(shift_constant(a, Rational(-1)) == series_of({0, 1, 0}));
}

TEST_CASE("binomial convolution") {
    EgfSeries e = series_of({1, 1, 1, 1});
    CHECK(binomial_convolution(e, e) == series_of({1, 2, 4, 8}));
    EgfSeries i = series_of({1, 1, 0, 0});
    CHECK(binomial_convolution(i, i) == series_of({1, 2, 2, 0}));
}

TEST_CASE("log and exp") {
    EgfSeries i = series_of({1, 1, 0, 0, 0, 0});
    // log(1+z) has EGF coefficients (-1)^(n-1) (n-1)!.
    CHECK(log_series(i) == series_of({0, 1, -1, 2, -6, 24}));
    CHECK(exp_series(log_series(i)) == i);
    CHECK(exp_series(series_of({0, 1, 0, 0})) == series_of({1, 1, 1, 1}));
    EgfSeries geom = series_of({1, 1, 2, 6, 24});
    CHECK(exp_series(log_series(geom)) == geom);
    CHECK_THROWS_AS(log_series(series_of({2, 1})), NotInClassB);
    CHECK_THROWS_AS(exp_series(series_of({1, 1})), NonzeroConstantTerm);
}

TEST_CASE("pow_scalar") {
    EgfSeries i = series_of({1, 1, 0, 0, 0});
    CHECK(pow_scalar(i, Rational(2)) == series_of({1, 2, 2, 0, 0}));
    CHECK(pow_scalar(i, Rational(0)) == series_of({1, 0, 0, 0, 0}));
    // e^(z/2) has coefficients (1/2)^n.
    EgfSeries half = pow_scalar(series_of({1, 1, 1, 1}), Rational(1, 2));
    CHECK(half.coeff(2) == Rational(1, 4));
    CHECK(half.coeff(3) == Rational(1, 8));
    CHECK_THROWS_AS(pow_scalar(series_of({0, 1}), Rational(2)), NotInClassB);
}

TEST_CASE("substitution") {
    // E(2z): coefficients 2^n.
    EgfSeries e = series_of({1, 1, 1, 1});
    EgfSeries twoz = series_of({0, 2, 0, 0});
    CHECK(substitute(e, twoz) == series_of({1, 2, 4, 8}));
    CHECK_THROWS_AS(substitute(e, series_of({1, 1, 0, 0})), NonzeroConstantTerm);
    // Substitution truncates to the smaller order.
    CHECK(substitute(one_series(5), series_of({0, 1, 0})).order() == 2);
}

TEST_CASE("circ and diamond") {
    EgfSeries e = series_of({1, 1, 1, 1, 1, 1, 1});
    EgfSeries i = series_of({1, 1, 0, 0, 0, 0, 0});
    EgfSeries geom = series_of({1, 1, 2, 6, 24, 120, 720});
    CHECK(circ(geom, i) == geom);
    CHECK(circ(i, geom) == geom);
    CHECK(diamond(geom, e) == geom);
    CHECK(diamond(e, geom) == geom);
    // circ(E, E) is the Bell-number series.
    CHECK(circ(e, e) == series_of({1, 1, 2, 5, 15, 52, 203}));
    CHECK_THROWS_AS(circ(series_of({0, 1}), e.truncated(1)), NotInClassB);
    CHECK_THROWS_AS(diamond(e.truncated(1), series_of({2, 1})), NotInClassB);
}
