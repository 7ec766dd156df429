#include <vector>

#include "doctest.h"

#include "bstirling/catalog.hpp"
#include "bstirling/errors.hpp"
#include "bstirling/restricted.hpp"
#include "bstirling/stirling.hpp"

using namespace bstirling;

TEST_CASE("small hand counts") {
    // {1..4} into 2 blocks of even size: 1|2, 1|3, 1|4 complements.
    CHECK(count_partitions(4, 2, SizeConstraint::even_only()) == 3);
    // {1..3} into 2 blocks of size <= 2: all S(3,2) = 3 partitions qualify.
    CHECK(count_partitions(3, 2, SizeConstraint::at_most(2)) == 3);
    // Partitions of {1,2} into 2 blocks of size exactly 1.
    CHECK(count_partitions(2, 2, SizeConstraint::explicit_set({1})) == 1);
    // 3-cycles are the only permutations of {1,2,3} with one cycle of
    // length >= 2; there are two of them.
    CHECK(count_permutations(3, 1, SizeConstraint::at_least(2)) == 2);
    // k > n is empty, k = 0 counts only the empty partition.
    CHECK(count_partitions(2, 3, SizeConstraint::at_most(2)) == 0);
    CHECK(count_partitions(0, 0, SizeConstraint::at_most(1)) == 1);
    CHECK(count_permutations(0, 0, SizeConstraint::even_only()) == 1);
    CHECK(count_list_partitions(0, 0) == 1);
    CHECK(count_list_partitions(3, 4) == 0);
}

TEST_CASE("unconstrained sizes recover the classical triangles") {
    StirlingTriangle s2 = classical_second(7);
    StirlingTriangle s1 = classical_first(7);
    for (int n = 0; n <= 7; ++n) {
        std::vector<mpz_class> parts = count_partitions_all(n, SizeConstraint::at_most(n + 1));
        for (int k = 0; k <= n; ++k) {
            CHECK(Rational(parts[static_cast<std::size_t>(k)]) == s2.entry(n, k));
        }
    }
    // Permutations by cycle count give |s(n,k)| = (-1)^{n-k} s(n,k).
    for (int n = 0; n <= 6; ++n) {
        std::vector<mpz_class> perms = count_permutations_all(n, SizeConstraint::at_least(1));
        for (int k = 0; k <= n; ++k) {
            Rational expected = (n - k) % 2 == 0 ? s1.entry(n, k) : -s1.entry(n, k);
            CHECK(Rational(perms[static_cast<std::size_t>(k)]) == expected);
        }
    }
}

TEST_CASE("ordered lists give the Lah numbers") {
    CHECK(count_list_partitions(3, 2) == 6);
    // Row sums are the total counts of sets of lists: 1, 1, 3, 13, 73, 501.
    const long totals[] = {1, 1, 3, 13, 73, 501};
    for (int n = 0; n <= 5; ++n) {
        std::vector<mpz_class> row = count_list_partitions_all(n);
        mpz_class sum = 0;
        for (const mpz_class& v : row) sum += v;
        CHECK(sum == totals[n]);
    }
    // Lah numbers are the second-kind numbers of 1/(1-z).
    StirlingTriangle lah = triangle_from_series(build("geom", {}, 6), StirlingKind::Second, 6);
    for (int n = 0; n <= 6; ++n) {
        std::vector<mpz_class> row = count_list_partitions_all(n);
        for (int k = 0; k <= n; ++k)
            CHECK(Rational(row[static_cast<std::size_t>(k)]) == lah.entry(n, k));
    }
}

TEST_CASE("named restricted families") {
    // Derangements: cycles of length >= 2; D_4 = 9.
    std::vector<mpz_class> d4 = count_permutations_all(4, SizeConstraint::at_least(2));
    mpz_class derangements = 0;
    for (const mpz_class& v : d4) derangements += v;
    CHECK(derangements == 9);

    // Involutions: blocks of size <= 2; totals for n = 1..8.
    const long involutions[] = {1, 2, 4, 10, 26, 76, 232, 764};
    for (int n = 1; n <= 8; ++n) {
        std::vector<mpz_class> row = count_partitions_all(n, SizeConstraint::at_most(2));
        mpz_class sum = 0;
        for (const mpz_class& v : row) sum += v;
        CHECK(sum == involutions[n - 1]);
    }

    // Perfect matchings of 2k points into k pairs: (2k-1)!!.
    const long double_fact[] = {1, 3, 15, 105};
    for (int k = 1; k <= 4; ++k)
        CHECK(count_partitions(2 * k, k, SizeConstraint::explicit_set({2})) ==
              double_fact[k - 1]);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(count_partitions(13, 2, SizeConstraint::at_most(3)), TooLarge);
    CHECK_THROWS_AS(count_permutations(10, 2, SizeConstraint::at_least(1)), TooLarge);
    CHECK_THROWS_AS(count_list_partitions(11, 2), TooLarge);
    CHECK_THROWS_AS(count_partitions(-1, 0, SizeConstraint::at_most(2)), BadIndices);
    CHECK_THROWS_AS(count_partitions(3, -1, SizeConstraint::at_most(2)), BadIndices);
    CHECK_THROWS_AS(SizeConstraint::at_most(0), BadIndices);
    CHECK_THROWS_AS(SizeConstraint::at_least(0), BadIndices);
    CHECK_THROWS_AS(SizeConstraint::explicit_set({}), BadIndices);
    CHECK_THROWS_AS(SizeConstraint::explicit_set({2, 0}), BadIndices);
}

TEST_CASE("constraint predicate") {
    CHECK(SizeConstraint::at_most(3).allows(3));
    CHECK(!SizeConstraint::at_most(3).allows(4));
    CHECK(SizeConstraint::at_least(2).allows(5));
    CHECK(!SizeConstraint::at_least(2).allows(1));
    CHECK(SizeConstraint::even_only().allows(6));
    CHECK(!SizeConstraint::even_only().allows(3));
    CHECK(SizeConstraint::explicit_set({1, 4}).allows(4));
    CHECK(!SizeConstraint::explicit_set({1, 4}).allows(2));
}
