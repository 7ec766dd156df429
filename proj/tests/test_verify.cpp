#include <string>
#include <vector>

#include "doctest.h"

#include "bstirling/errors.hpp"
#include "bstirling/verify.hpp"

using namespace bstirling;

TEST_CASE("tag inventory and display forms") {
    const std::vector<std::string>& tags = verify_tags();
    CHECK(tags.size() == 28);
    CHECK(tags.front() == "eq6");
    CHECK(tags.back() == "thm4");

    CHECK(display_tag("eq6") == "Eq.(6)");
    CHECK(display_tag("eq42") == "Eq.(42)");
    CHECK(display_tag("eqA") == "Eq.(A)");
    CHECK(display_tag("eqB") == "Eq.(B)");
    CHECK(display_tag("thm1") == "Thm.1");
    CHECK(display_tag("thm3dual") == "Thm.3-dual");
    CHECK(display_tag("thm4") == "Thm.4");
    CHECK(display_tag("remark5") == "Remark 5");
    CHECK(display_tag("remark9") == "Remark 9");
    CHECK(display_tag("restricted-geom") == "restricted-geom");
}

TEST_CASE("check line format") {
    CheckResult r{"eq42", "circ(Clambda,Blambda)=E", true, {}};
    CHECK(format_check_line(r) == "PASS Eq.(42) circ(Clambda,Blambda)=E");
    CheckResult f{"eq39", "S_Blambda alternating sum", false, {"watch the subscript"}};
    CHECK(format_check_line(f) ==
          "FAIL Eq.(39) S_Blambda alternating sum\nNOTE Eq.(39) watch the subscript");
}

TEST_CASE("single checks") {
    std::vector<CheckResult> both = run_check("eq42", 8, Rational(1, 2));
    REQUIRE(both.size() == 2);
    CHECK(both[0].statement == "circ(Clambda,Blambda)=E");
    CHECK(both[1].statement == "diamond(Blambda,Clambda)=I");
    CHECK(both[0].pass);
    CHECK(both[1].pass);

    CHECK_THROWS_AS(run_check("zzz", 8, Rational(1, 2)), UnknownName);
    CHECK_THROWS_AS(run_check("eq38", 8, Rational(0)), ZeroLambda);

    // The two checks that document statement corrections carry notes.
    CHECK(!run_check("eq39", 8, Rational(1, 2)).at(0).notes.empty());
    CHECK(!run_check("thm3dual", 8, Rational(1, 2)).at(0).notes.empty());
}

TEST_CASE("full suite passes at moderate order") {
    std::vector<CheckResult> results = verify_suite(8, Rational(1, 2));
    CHECK(results.size() >= verify_tags().size());
    for (const CheckResult& r : results) {
        INFO(r.tag, ": ", r.statement);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(verify_suite(7, Rational(1, 2)), OrderTooSmall);
    CHECK_THROWS_AS(verify_suite(12, Rational(0)), ZeroLambda);
}

TEST_CASE("restricted enumeration cross-checks") {
    std::vector<CheckResult> results = verify_restricted(6);
    CHECK(results.size() == 8);
    for (const CheckResult& r : results) {
        INFO(r.tag, ": ", r.statement);
        CHECK(r.pass);
        CHECK(r.tag.rfind("restricted-", 0) == 0);
    }
}
