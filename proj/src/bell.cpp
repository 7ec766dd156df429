#include "bstirling/bell.hpp"

#include <string>

#include "bstirling/catalog.hpp"
#include "bstirling/errors.hpp"
#include "bstirling/stirling.hpp"

namespace bstirling {

namespace {

constexpr int kOracleCap = 12;

void check_args(const BellArguments& args) {
    if (args.empty()) throw BadArity("Bell polynomials need at least one argument x_1");
}

EgfSeries bellargs_series(const BellArguments& args, int order) {
    return build("bellargs", args, order);
}

/// Visits every set partition of {1..n}; `sizes` holds current block sizes.
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

Rational partial_bell(const BellArguments& args, int n, int k) {
    check_args(args);
    if (k < 1 || k > n)
        throw BadIndices("partial Bell polynomial needs 1 <= k <= n, got n = " +
                         std::to_string(n) + ", k = " + std::to_string(k));
    StirlingTriangle t = triangle_from_series(bellargs_series(args, n), StirlingKind::Second, n);
    return t.entry(n, k);
}

Rational complete_bell(const BellArguments& args, int n) {
    check_args(args);
    if (n < 0) throw BadIndices("complete Bell polynomial needs n >= 0");
    if (n == 0) return Rational(1);
    StirlingTriangle t = triangle_from_series(bellargs_series(args, n), StirlingKind::Second, n);
    Rational acc(0);
    for (int k = 0; k <= n; ++k) acc += t.entry(n, k);
    return acc;
}

Rational bell_oracle(const BellArguments& args, int n, int k) {
    if (k < 0 || k > n) throw BadIndices("oracle needs 0 <= k <= n");
    return bell_oracle_all(args, n)[static_cast<std::size_t>(k)];
}

std::vector<Rational> bell_oracle_all(const BellArguments& args, int n) {
    check_args(args);
    if (n < 0) throw BadIndices("oracle needs n >= 0");
    if (n > kOracleCap)
        throw TooLarge("set-partition enumeration is capped at n = " +
                       std::to_string(kOracleCap) + ", got " + std::to_string(n));
    std::vector<Rational> sums(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<int> sizes;
    enumerate_partitions(0, n, sizes, [&](const std::vector<int>& blocks) {
        Rational weight(1);
        for (int size : blocks) {
            if (static_cast<std::size_t>(size) > args.size()) return;  // x_size = 0
            weight *= args[static_cast<std::size_t>(size) - 1];
        }
        sums[blocks.size()] += weight;
    });
    return sums;
}

}  // namespace bstirling
