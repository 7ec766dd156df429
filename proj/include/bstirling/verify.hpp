#pragma once

#include <string>
#include <vector>

#include "bstirling/rational.hpp"

namespace bstirling {

/// Outcome of one identity check.  Tags are stable machine identifiers
/// (eq6 .. eq49, eqA, eqB, remark5, remark9, thm1, thm3dual, thm4, and
/// restricted-* for the enumeration cross-checks).
struct CheckResult {
    std::string tag;
    std::string statement;
    bool pass = false;
    std::vector<std::string> notes;
};

/// Canonical ordering of the tags known to run_check / verify_suite.
const std::vector<std::string>& verify_tags();

/// Human form of a tag: "eq42" -> "Eq.(42)", "thm3dual" -> "Thm.3-dual",
/// "remark9" -> "Remark 9".  Unrecognized tags are returned unchanged.
std::string display_tag(const std::string& tag);

/// "PASS Eq.(42) circ(Clambda,Blambda)=E" (without trailing newline; NOTE
/// lines, if any, follow on their own lines).
std::string format_check_line(const CheckResult& r);

/// Run a single named check; a tag may bundle several printed identities,
/// hence the vector.  lambda parametrizes the degenerate-family checks
/// (must be nonzero).  Throws UnknownName for an unrecognized tag.
std::vector<CheckResult> run_check(const std::string& tag, int order, const Rational& lambda);

/// Every tag in verify_tags() order.  Requires order >= 8 (OrderTooSmall).
std::vector<CheckResult> verify_suite(int order, const Rational& lambda);

/// Cross-checks of catalog triangles against the brute-force enumeration
/// oracles (set partitions, permutation cycle types, ordered lists).  The
/// effective depth is nmax clamped to each oracle's enumeration cap.
std::vector<CheckResult> verify_restricted(int nmax);

}  // namespace bstirling
