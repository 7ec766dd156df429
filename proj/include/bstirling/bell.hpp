#pragma once

#include <vector>

#include "bstirling/rational.hpp"

namespace bstirling {

/// Argument vector x_1..x_j for Bell polynomials; indices beyond the stored
/// length are treated as zero.
using BellArguments = std::vector<Rational>;

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), computed as the
/// second-kind Stirling number S_C(n,k) of the series 1 + sum x_m z^m/m!.
Rational partial_bell(const BellArguments& args, int n, int k);

/// Complete Bell polynomial B_n = sum_k B_{n,k}; B_0 = 1.
Rational complete_bell(const BellArguments& args, int n);

/// Independent oracle: enumerates every set partition of {1..n} (as
/// restricted-growth strings), weights a partition by the product of
/// x_{block size} over its blocks, and sums over partitions with exactly
/// k blocks.  Guarded to n <= 12.
Rational bell_oracle(const BellArguments& args, int n, int k);

/// One enumeration pass returning the oracle sums for every k = 0..n.
std::vector<Rational> bell_oracle_all(const BellArguments& args, int n);

}  // namespace bstirling
