#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "doctest.h"

#include "bstirling/catalog.hpp"
#include "bstirling/egf.hpp"
#include "bstirling/errors.hpp"

using namespace bstirling;

namespace {
std::vector<Rational> coeffs_of(const EgfSeries& s) {
    std::vector<Rational> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(s.coeff(n));
    return out;
}

std::vector<Rational> rat(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

/// Offset reported when parsing fails with exception type E; 0 if it parses.
template <typename E>
std::size_t parse_offset(std::string_view text) {
    try {
        parse_series(text);
    } catch (const E& e) {
        return e.offset();
    }
    return 0;
}
}  // namespace

TEST_CASE("family coefficients at order 4") {
    CHECK(coeffs_of(build("I", {}, 4)) == rat({1, 1, 0, 0, 0}));
    CHECK(coeffs_of(build("E", {}, 4)) == rat({1, 1, 1, 1, 1}));
    CHECK(coeffs_of(build("cosh", {}, 4)) == rat({1, 0, 1, 0, 1}));
    CHECK(coeffs_of(build("geom", {}, 4)) == rat({1, 1, 2, 6, 24}));
    CHECK(coeffs_of(build("involution", {}, 4)) == rat({1, 1, 1, 0, 0}));
    CHECK(coeffs_of(build("pairing", {}, 4)) == rat({1, 0, 1, 0, 0}));
    CHECK(coeffs_of(build("Rle", {Rational(3)}, 4)) == rat({1, 1, 1, 1, 0}));
    CHECK(coeffs_of(build("Rge", {Rational(2)}, 4)) == rat({1, 0, 1, 1, 1}));
    CHECK(coeffs_of(build("Ple", {Rational(3)}, 4)) == rat({1, 1, 1, 2, 0}));
    CHECK(coeffs_of(build("Pge", {Rational(2)}, 4)) == rat({1, 0, 1, 2, 6}));
    CHECK(coeffs_of(build("bellargs", {Rational(2), Rational(3)}, 4)) == rat({1, 2, 3, 0, 0}));
    CHECK(coeffs_of(build("custom", {Rational(1), Rational(5), Rational(7)}, 3)) ==
          rat({1, 5, 7, 0}));

    // (1 + z/2)^2 = 1 + z + z^2/4, so U_2 = 1/2.
    std::vector<Rational> bl = coeffs_of(build("Blambda", {Rational(1, 2)}, 4));
    CHECK(bl == std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(0),
                                      Rational(0)});
}

TEST_CASE("degenerate families specialize at lambda = 1") {
    CHECK(build("Blambda", {Rational(1)}, 5) == build("I", {}, 5));
    CHECK(build("Clambda", {Rational(1)}, 5) == build("E", {}, 5));
    // Size bounds wide enough to be inactive reduce to the unrestricted series.
    CHECK(build("Rge", {Rational(1)}, 5) == build("E", {}, 5));
    CHECK(build("Rle", {Rational(7)}, 5) == build("E", {}, 5));
    CHECK(build("Ple", {Rational(1)}, 5) == build("I", {}, 5));
}

TEST_CASE("build validation") {
    CHECK_THROWS_AS(build("custom", {Rational(2), Rational(1)}, 3), NotInClassB);
    CHECK_THROWS_AS(build("Blambda", {Rational(0)}, 3), ZeroLambda);
    CHECK_THROWS_AS(build("Clambda", {Rational(0)}, 3), ZeroLambda);
    CHECK_THROWS_AS(build("Rle", {Rational(0)}, 3), BadArity);
    CHECK_THROWS_AS(build("Rge", {Rational(1, 2)}, 3), BadArity);
    CHECK_THROWS_AS(build("foo", {}, 3), UnknownName);
    CHECK_THROWS_AS(build("E", {Rational(1)}, 3), BadArity);
    CHECK_THROWS_AS(build("Blambda", {}, 3), BadArity);
    CHECK_THROWS_AS(build("Blambda", {Rational(1), Rational(2)}, 3), BadArity);
}

TEST_CASE("catalog lookup") {
    CHECK(!catalog_entries().empty());
    CHECK(find_catalog_entry("E") != nullptr);
    CHECK(find_catalog_entry("geom") != nullptr);
    CHECK(find_catalog_entry("nope") == nullptr);
    // Names are case-sensitive.
    CHECK(find_catalog_entry("blambda") == nullptr);
}

TEST_CASE("expression accessors guard their tag") {
    SeriesExpr a = SeriesExpr::atom("E", {});
    CHECK_THROWS_AS(a.left(), Error);
    SeriesExpr c = SeriesExpr::circ_node(SeriesExpr::atom("E", {}), SeriesExpr::atom("I", {}));
    CHECK_THROWS_AS(c.name(), Error);
    CHECK(c.left().name() == "E");
    CHECK(c.right().name() == "I");
}

TEST_CASE("parser round trips") {
    // to_string emits the canonical spelling; parsing it again is stable.
    const char* cases[][2] = {
        {"E", "E"},
        {"  geom  ", "geom"},
        {"Blambda( 1 / 2 )", "Blambda(1/2)"},
        {"Blambda(-1/3)", "Blambda(-1/3)"},
        {"Blambda(+2)", "Blambda(2)"},
        {"Blambda(2/4)", "Blambda(1/2)"},
        {"Rle(3)", "Rle(3)"},
        {"circ ( E , geom )", "circ(E,geom)"},
        {"diamond(E,geom)", "diamond(E,geom)"},
        {"circ(circ(E,I),geom)", "circ(circ(E,I),geom)"},
        {"diamond( Blambda(1/2), Clambda(1/2) )", "diamond(Blambda(1/2),Clambda(1/2))"},
        {"circ(diamond(cosh,geom),Rge(2))", "circ(diamond(cosh,geom),Rge(2))"},
        {"bellargs(1,2,3)", "bellargs(1,2,3)"},
        {"custom(1,-5,7/3)", "custom(1,-5,7/3)"},
    };
    for (const auto& c : cases) {
        SeriesExpr e = parse_series(c[0]);
        CHECK(to_string(e) == c[1]);
        CHECK(to_string(parse_series(to_string(e))) == c[1]);
    }
}

TEST_CASE("parse errors carry 1-based byte offsets") {
    CHECK(parse_offset<SyntaxError>("") == 1);
    CHECK(parse_offset<SyntaxError>("circ(E,") == 8);
    CHECK(parse_offset<SyntaxError>("circ(E,I") == 9);
    CHECK(parse_offset<SyntaxError>("circ(E") == 7);
    CHECK(parse_offset<SyntaxError>("circ(E E)") == 8);
    CHECK(parse_offset<SyntaxError>("Blambda()") == 9);
    CHECK(parse_offset<SyntaxError>("Blambda(1/0)") == 11);
    CHECK(parse_offset<SyntaxError>("E,I") == 2);
    CHECK(parse_offset<SyntaxError>("1") == 1);
    CHECK(parse_offset<SyntaxError>("E$") == 2);
    CHECK(parse_offset<SyntaxError>("Blambda(-)") == 9);
    CHECK(parse_offset<UnknownName>("foo") == 1);
    CHECK(parse_offset<UnknownName>("circ(foo,E)") == 6);
    CHECK(parse_offset<BadArity>("E(1)") == 1);
    CHECK(parse_offset<BadArity>("Rle(1/2)") == 5);
    CHECK(parse_offset<BadArity>("Rle(1,2)") == 1);
    // Parameter *values* are validated at build time, not parse time.
    CHECK_NOTHROW(parse_series("Rle(0)"));
    CHECK_NOTHROW(parse_series("Blambda(0)"));
    CHECK_THROWS_AS(eval_expr(parse_series("Blambda(0)"), 4), ZeroLambda);
    CHECK_THROWS_AS(eval_expr(parse_series("Rle(0)"), 4), BadArity);
}

TEST_CASE("expression evaluation matches direct construction") {
    CHECK(eval_expr(parse_series("E"), 5) == build("E", {}, 5));
    CHECK(eval_expr(parse_series("circ(E,geom)"), 6) ==
          circ(build("E", {}, 6), build("geom", {}, 6)));
    CHECK(eval_expr(parse_series("diamond(cosh,geom)"), 6) ==
          diamond(build("cosh", {}, 6), build("geom", {}, 6)));
    CHECK(eval_expr(parse_series("circ(E,E)"), 5) == circ(build("E", {}, 5), build("E", {}, 5)));
}
