#pragma once

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bstirling/egf.hpp"
#include "bstirling/rational.hpp"
#include "bstirling/stirling.hpp"

namespace bstirling {

/// Random variable with finitely many outcomes (value, probability).
struct FiniteSupport {
    std::vector<std::pair<Rational, Rational>> points;
};

/// Poisson law with rational mean mu > 0.
struct Poisson {
    Rational mu;
};

using DistributionSpec = std::variant<FiniteSupport, Poisson>;

/// Throws BadDistribution unless probabilities are positive and sum to 1
/// (finite support) or mu > 0 (Poisson).
void validate(const DistributionSpec& d);

/// Parse the CLI syntax "finite:v1:p1,v2:p2,..." or "poisson:mu".
DistributionSpec parse_distribution(std::string_view text);

/// Moment generating function as an EGF: U_n = E Y^n.
EgfSeries mgf_series(const DistributionSpec& d, int order);

/// Probabilistic Stirling triangles of Y: the first kind carries the sign
/// flip s_Y(n,k) = (-1)^{n-k} s_B(n,k); the second kind is S_B unchanged,
/// where B is the MGF of Y.
std::pair<StirlingTriangle, StirlingTriangle> probabilistic_triangles(const DistributionSpec& d,
                                                                      int nmax);

/// E W_m^n for W_m the sum of m independent copies of Y, computed as the
/// potential polynomial P_n(B;x) evaluated at x = m.
Rational moment(const DistributionSpec& d, int m, int n);

/// Brute-force oracle: enumerates all support^m outcome tuples.  Guarded to
/// at most 10^6 tuples.
Rational moment_oracle(const FiniteSupport& d, int m, int n);

/// Second-kind triangle from oracle moments alone:
/// S_Y(n,r) = (1/r!) sum_j C(r,j) (-1)^{r-j} E W_j^n.
StirlingTriangle stirling_from_moments(const FiniteSupport& d, int nmax);

}  // namespace bstirling
