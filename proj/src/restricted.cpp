#include "bstirling/restricted.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bstirling/errors.hpp"

namespace bstirling {

namespace {

constexpr int kPartitionCap = 12;
constexpr int kPermutationCap = 9;
constexpr int kListCap = 10;

void check_range(int n, int cap, const char* what) {
    if (n < 0) throw BadIndices("count needs n >= 0");
    if (n > cap)
        throw TooLarge(std::string(what) + " enumeration is capped at n = " +
                       std::to_string(cap) + ", got " + std::to_string(n));
}

mpz_class pick(const std::vector<mpz_class>& all, int k) {
    if (k < 0) throw BadIndices("count needs k >= 0");
    if (static_cast<std::size_t>(k) >= all.size()) return mpz_class(0);
    return all[static_cast<std::size_t>(k)];
}

template <typename Leaf>
void enumerate_partitions(int i, int n, std::vector<int>& sizes, Leaf&& leaf) {
    if (i == n) {
        leaf(sizes);
        return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        ++sizes[b];
        enumerate_partitions(i + 1, n, sizes, leaf);
        --sizes[b];
    }
    sizes.push_back(1);
    enumerate_partitions(i + 1, n, sizes, leaf);
    sizes.pop_back();
}

}  // namespace

SizeConstraint SizeConstraint::at_most(int m) {
    if (m < 1) throw BadIndices("size bound must be >= 1");
    return SizeConstraint(Kind::AtMost, m, {});
}

SizeConstraint SizeConstraint::at_least(int m) {
    if (m < 1) throw BadIndices("size bound must be >= 1");
    return SizeConstraint(Kind::AtLeast, m, {});
}

SizeConstraint SizeConstraint::even_only() { return SizeConstraint(Kind::EvenOnly, 0, {}); }

SizeConstraint SizeConstraint::explicit_set(std::set<int> sizes) {
    if (sizes.empty()) throw BadIndices("explicit size set must be nonempty");
    for (int s : sizes)
        if (s < 1) throw BadIndices("sizes must be positive");
    return SizeConstraint(Kind::ExplicitSet, 0, std::move(sizes));
}

bool SizeConstraint::allows(int size) const {
    switch (kind_) {
        case Kind::AtMost:
            return size <= m_;
        case Kind::AtLeast:
            return size >= m_;
        case Kind::EvenOnly:
            return size % 2 == 0;
        case Kind::ExplicitSet:
        default:
            return sizes_.count(size) > 0;
    }
}

mpz_class count_partitions(int n, int k, const SizeConstraint& c) {
    return pick(count_partitions_all(n, c), k);
}

std::vector<mpz_class> count_partitions_all(int n, const SizeConstraint& c) {
    check_range(n, kPartitionCap, "set-partition");
    std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1, mpz_class(0));
    std::vector<int> sizes;
    enumerate_partitions(0, n, sizes, [&](const std::vector<int>& blocks) {
        for (int size : blocks)
            if (!c.allows(size)) return;
        counts[blocks.size()] += 1;
    });
    return counts;
}

mpz_class count_permutations(int n, int k, const SizeConstraint& c) {
    return pick(count_permutations_all(n, c), k);
}

std::vector<mpz_class> count_permutations_all(int n, const SizeConstraint& c) {
    check_range(n, kPermutationCap, "permutation");
    std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1, mpz_class(0));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n));
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        bool ok = true;
        for (int start = 0; start < n && ok; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int length = 0;
            for (int j = start; !seen[static_cast<std::size_t>(j)];
                 j = perm[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                ++length;
            }
            ++cycles;
            ok = c.allows(length);
        }
        if (ok) counts[static_cast<std::size_t>(cycles)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

mpz_class count_list_partitions(int n, int k) { return pick(count_list_partitions_all(n), k); }

std::vector<mpz_class> count_list_partitions_all(int n) {
    check_range(n, kListCap, "ordered-list partition");
    // Precomputed factorials for the per-block ordering weight.
    std::vector<mpz_class> fact(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) fact[static_cast<std::size_t>(i)] = factorial(static_cast<unsigned long>(i));
    std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1, mpz_class(0));
    std::vector<int> sizes;
    enumerate_partitions(0, n, sizes, [&](const std::vector<int>& blocks) {
        mpz_class weight(1);
        for (int size : blocks) weight *= fact[static_cast<std::size_t>(size)];
        counts[blocks.size()] += weight;
    });
    return counts;
}

}  // namespace bstirling
