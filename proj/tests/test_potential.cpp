#include "doctest.h"

#include "bstirling/catalog.hpp"
#include "bstirling/egf.hpp"
#include "bstirling/errors.hpp"
#include "bstirling/potential.hpp"
#include "bstirling/stirling.hpp"

using namespace bstirling;

namespace {
RationalVector vec(std::initializer_list<Rational> values) {
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const Rational& x : values) v(i++) = x;
    return v;
}

bool veq(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}
}  // namespace

TEST_CASE("potential polynomial bases") {
    // P_3(I;x) = x(x-1)(x-2) = x^3 - 3x^2 + 2x.
    PotentialPolynomial p = potential(build("I", {}, 3), 3);
    CHECK(p.degree() == 3);
    CHECK(p.monomial()(0) == Rational(0));
    CHECK(p.monomial()(1) == Rational(2));
    CHECK(p.monomial()(2) == Rational(-3));
    CHECK(p.monomial()(3) == Rational(1));
    // In the falling basis (x)_3 is the basis element itself.
    CHECK(p.falling()(3) == Rational(1));
    CHECK(p.falling()(2) == Rational(0));

    // P_3(E;x) = x^3; falling coefficients are S(3,k).
    PotentialPolynomial q = potential(build("E", {}, 3), 3);
    CHECK(veq(q.monomial(), vec({Rational(0), Rational(0), Rational(0), Rational(1)})));
    CHECK(q.falling()(1) == Rational(1));
    CHECK(q.falling()(2) == Rational(3));
    CHECK(q.falling()(3) == Rational(1));

    // P_2(B_{1/3};x) = x^2 - x/3.
    PotentialPolynomial r = potential(build("Blambda", {Rational(1, 3)}, 2), 2);
    CHECK(veq(r.monomial(), vec({Rational(0), Rational(-1, 3), Rational(1)})));
}

TEST_CASE("basis conversions invert each other") {
    RationalVector c = vec({Rational(1), Rational(-2, 3), Rational(0), Rational(5)});
    CHECK(veq(falling_to_monomial(monomial_to_falling(c)), c));
    // x^3 in the falling basis: (x)_1 + 3(x)_2 + (x)_3.
    CHECK(veq(monomial_to_falling(vec({Rational(0), Rational(0), Rational(0), Rational(1)})),
              vec({Rational(0), Rational(1), Rational(3), Rational(1)})));
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(PotentialPolynomial(vec({Rational(1)}), vec({Rational(1), Rational(0)})),
                    SizeMismatch);
    CHECK(PotentialPolynomial::zero().degree() == 0);
    CHECK(PotentialPolynomial::zero() == PotentialPolynomial::from_monomial(vec({Rational(0)})));
    CHECK_THROWS_AS(potential(make_series({Rational(2)}), 0), NotInClassB);
    CHECK_THROWS_AS(potential(build("E", {}, 2), 5), OrderTooSmall);
}

TEST_CASE("evaluation agrees across bases") {
    PotentialPolynomial p = potential(build("geom", {}, 5), 5);
    for (int x = -3; x <= 3; ++x)
        CHECK(evaluate(p, Rational(x)) == evaluate_falling(p, Rational(x)));
    CHECK(evaluate(potential(build("I", {}, 3), 3), Rational(5)) == Rational(60));
}

TEST_CASE("derivative in the monomial basis") {
    PotentialPolynomial cube = PotentialPolynomial::from_monomial(
        vec({Rational(0), Rational(0), Rational(0), Rational(1)}));
    // (x^3)'/1! = 3x^2.
    CHECK(derivative(cube, 1) ==
          PotentialPolynomial::from_monomial(vec({Rational(0), Rational(0), Rational(3)})));
    // (x^3)''/2! = 3x.
    CHECK(derivative(cube, 2) ==
          PotentialPolynomial::from_monomial(vec({Rational(0), Rational(3)})));
    CHECK(derivative(cube, 0) == cube);
    CHECK(derivative(cube, 4) == PotentialPolynomial::zero());
    CHECK_THROWS_AS(derivative(cube, -1), BadIndices);
}

TEST_CASE("forward difference in the falling basis") {
    PotentialPolynomial cube = PotentialPolynomial::from_monomial(
        vec({Rational(0), Rational(0), Rational(0), Rational(1)}));
    // Delta(x^3)/1! = 3x^2 + 3x + 1 (as polynomials in x).
    PotentialPolynomial d = forward_difference(cube, 1);
    CHECK(d == PotentialPolynomial::from_monomial(vec({Rational(1), Rational(3), Rational(3)})));
    CHECK(forward_difference(cube, 4) == PotentialPolynomial::zero());
    // Pointwise form carries the r! factor: Delta(x^3) at 2 is 27 - 8.
    CHECK(forward_difference_pointwise(cube, 1, Rational(2)) == Rational(19));
    CHECK(forward_difference_pointwise(cube, 1, Rational(2)) ==
          Rational(factorial(1)) * evaluate(d, Rational(2)));
    CHECK(forward_difference_pointwise(cube, 2, Rational(0)) == Rational(6));
    CHECK(forward_difference_pointwise(cube, 5, Rational(1)) == Rational(0));
}

TEST_CASE("expansion forms match basis-local operators") {
    for (const char* name : {"geom", "cosh"}) {
        EgfSeries b = build(name, {}, 6);
        for (int n = 0; n <= 6; ++n) {
            PotentialPolynomial p = potential(b, n);
            for (int r = 0; r <= n; ++r) {
                CHECK(derivative(p, r) == derivative_expansion(b, n, r));
                CHECK(forward_difference(p, r) == forward_difference_expansion(b, n, r));
            }
        }
    }
    CHECK_THROWS_AS(derivative_expansion(build("E", {}, 4), 3, 4), BadIndices);
    CHECK_THROWS_AS(forward_difference_expansion(build("E", {}, 4), 3, -1), BadIndices);
}

TEST_CASE("constant terms recover the triangles") {
    EgfSeries b = build("geom", {}, 5);
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, 5);
    StirlingTriangle second = triangle_from_series(b, StirlingKind::Second, 5);
    for (int n = 0; n <= 5; ++n) {
        PotentialPolynomial p = potential(b, n);
        for (int r = 0; r <= n; ++r) {
            CHECK(evaluate(derivative(p, r), Rational(0)) == first.entry(n, r));
            CHECK(evaluate(forward_difference(p, r), Rational(0)) == second.entry(n, r));
        }
    }
}

TEST_CASE("sheffer combination") {
    // A = B = E, n = 2: sum_k C(2,k) P_{2-k}(E;x) = x^2 + 2x + 1.
    EgfSeries e = build("E", {}, 3);
    CHECK(sheffer_combine(e, e, 2) ==
          PotentialPolynomial::from_monomial(vec({Rational(1), Rational(2), Rational(1)})));
    CHECK_THROWS_AS(sheffer_combine(e, make_series({Rational(2), Rational(1)}), 1), NotInClassB);
    CHECK_THROWS_AS(sheffer_combine(e, e, 9), OrderTooSmall);
}

TEST_CASE("potential composition") {
    EgfSeries b = build("E", {}, 5);
    EgfSeries c = build("geom", {}, 5);
    for (int n = 0; n <= 5; ++n) {
        CHECK(compose_potential_circ(b, c, n) == potential(circ(b, c), n));
        CHECK(compose_potential_diamond(b, c, n) == potential(diamond(b, c), n));
    }
}

TEST_CASE("degenerate falling factorial") {
    CHECK(degenerate_falling(Rational(2), 3, Rational(0)) == Rational(8));
    CHECK(degenerate_falling(Rational(1), 2, Rational(1, 2)) == Rational(1, 2));
    CHECK(degenerate_falling(Rational(5), 0, Rational(7)) == Rational(1));
    CHECK(degenerate_falling(Rational(4), 3, Rational(1)) == falling_factorial(Rational(4), 3));
    CHECK(falling_factorial(Rational(5), 3) == Rational(60));
    CHECK(falling_factorial(Rational(2), 4) == Rational(0));
    CHECK_THROWS_AS(degenerate_falling(Rational(1), -1, Rational(1)), BadIndices);
}
