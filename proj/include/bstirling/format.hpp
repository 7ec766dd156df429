#pragma once

#include <string>

#include "json.hpp"

#include "bstirling/egf.hpp"
#include "bstirling/potential.hpp"
#include "bstirling/stirling.hpp"

namespace bstirling {

using Json = nlohmann::ordered_json;

/// JSON interchange.  Schemas:
///   series     {"order": N, "coeffs": ["num/den", ...]}          (N+1 coeffs)
///   triangle   {"kind": "first"|"second", "nmax": N,
///               "rows": [["1"], ["0","1"], ...]}                 (row n: n+1)
///   polynomial {"degree": n, "monomial": [...], "falling": [...]}
/// Rationals are canonical "num" / "num/den" strings.  Readers throw
/// UsageError on malformed documents (wrong type, missing field, size
/// mismatch, unparsable rational, inconsistent bases).
Json series_to_json(const EgfSeries& s);
EgfSeries series_from_json(const Json& j);
Json triangle_to_json(const StirlingTriangle& t);
StirlingTriangle triangle_from_json(const Json& j);
Json polynomial_to_json(const PotentialPolynomial& p);
PotentialPolynomial polynomial_from_json(const Json& j);

/// Parse a JSON document from text / a file and extract a series.
EgfSeries series_from_json_text(const std::string& text);
EgfSeries read_series_file(const std::string& path);

/// Aligned Markdown table; cells above the diagonal are left blank.
std::string triangle_markdown(const StirlingTriangle& t);
/// Rectangular CSV with an n\k header row; cells above the diagonal empty.
std::string triangle_csv(const StirlingTriangle& t);

/// Two-column views of a series: EGF coefficient U_n and ordinary a_n.
std::string series_markdown(const EgfSeries& s);
std::string series_csv(const EgfSeries& s);

/// Both bases side by side, preceded (Markdown) by the pretty form.
std::string polynomial_markdown(const PotentialPolynomial& p);
std::string polynomial_csv(const PotentialPolynomial& p);

/// Monomial-basis rendering, highest power first: "x^3 - 3x^2 + 2x".
/// Non-integer coefficients are parenthesized: "x^2 - (1/3)x".
std::string polynomial_pretty(const PotentialPolynomial& p);

}  // namespace bstirling
