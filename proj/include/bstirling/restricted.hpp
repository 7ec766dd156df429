#pragma once

#include <set>
#include <vector>

#include "bstirling/rational.hpp"

namespace bstirling {

/// Predicate on block/cycle sizes.
class SizeConstraint {
public:
    enum class Kind { AtMost, AtLeast, EvenOnly, ExplicitSet };

    static SizeConstraint at_most(int m);
    static SizeConstraint at_least(int m);
    static SizeConstraint even_only();
    static SizeConstraint explicit_set(std::set<int> sizes);

    Kind kind() const { return kind_; }
    bool allows(int size) const;

private:
    SizeConstraint(Kind kind, int m, std::set<int> sizes)
        : kind_(kind), m_(m), sizes_(std::move(sizes)) {}

    Kind kind_;
    int m_;
    std::set<int> sizes_;
};

/// Set partitions of {1..n} into exactly k blocks, every block size allowed
/// by the constraint.  Exhaustive enumeration; capped at n <= 12.
mpz_class count_partitions(int n, int k, const SizeConstraint& c);

/// One enumeration pass returning counts for every k = 0..n.
std::vector<mpz_class> count_partitions_all(int n, const SizeConstraint& c);

/// Permutations of {1..n} with exactly k cycles, every cycle length allowed
/// by the constraint.  Enumerates all n! permutations; capped at n <= 9.
mpz_class count_permutations(int n, int k, const SizeConstraint& c);

std::vector<mpz_class> count_permutations_all(int n, const SizeConstraint& c);

/// Partitions of {1..n} into exactly k nonempty ordered lists (each block of
/// a set partition weighted by the orderings |block|!).  Capped at n <= 10.
mpz_class count_list_partitions(int n, int k);

std::vector<mpz_class> count_list_partitions_all(int n);

}  // namespace bstirling
