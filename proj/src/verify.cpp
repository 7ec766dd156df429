#include "bstirling/verify.hpp"

#include <algorithm>
#include <utility>

#include "bstirling/catalog.hpp"
#include "bstirling/egf.hpp"
#include "bstirling/errors.hpp"
#include "bstirling/potential.hpp"
#include "bstirling/probabilistic.hpp"
#include "bstirling/restricted.hpp"
#include "bstirling/stirling.hpp"

namespace bstirling {

namespace {

struct Named {
    std::string name;
    EgfSeries series;
};

Rational half() { return Rational(1, 2); }

/// The worked-example series used by the multi-series checks.
std::vector<Named> catalog_list(int order) {
    std::vector<Named> out;
    auto add = [&](const std::string& name, const std::vector<Rational>& params) {
        out.push_back({name, build(name, params, order)});
    };
    add("I", {});
    add("E", {});
    out.push_back({"Blambda(1/2)", build("Blambda", {half()}, order)});
    out.push_back({"Blambda(2)", build("Blambda", {Rational(2)}, order)});
    out.push_back({"Clambda(1/2)", build("Clambda", {half()}, order)});
    add("cosh", {});
    add("geom", {});
    add("involution", {});
    add("pairing", {});
    out.push_back({"Rle(3)", build("Rle", {Rational(3)}, order)});
    out.push_back({"Rge(2)", build("Rge", {Rational(2)}, order)});
    out.push_back({"Ple(3)", build("Ple", {Rational(3)}, order)});
    out.push_back({"Pge(2)", build("Pge", {Rational(2)}, order)});
    out.push_back({"PoissonMGF(1)", mgf_series(Poisson{Rational(1)}, order)});
    out.push_back(
        {"BernoulliMGF(1/3)",
         mgf_series(FiniteSupport{{{Rational(0), Rational(2, 3)}, {Rational(1), Rational(1, 3)}}},
                    order)});
    return out;
}

/// Ordered pairs exercised by the composition-law checks.
std::vector<std::pair<Named, Named>> pair_list(int order) {
    auto series = [&](const std::string& name, const std::vector<Rational>& params,
                      const std::string& label) { return Named{label, build(name, params, order)}; };
    std::vector<std::pair<Named, Named>> out;
    out.emplace_back(series("Blambda", {half()}, "Blambda(1/2)"),
                     series("Clambda", {half()}, "Clambda(1/2)"));
    out.emplace_back(series("cosh", {}, "cosh"), series("geom", {}, "geom"));
    out.emplace_back(series("E", {}, "E"), series("involution", {}, "involution"));
    out.emplace_back(series("Rle", {Rational(3)}, "Rle(3)"), series("I", {}, "I"));
    return out;
}

StirlingTriangle identity_triangle(StirlingKind kind, int nmax) {
    StirlingTriangle t(kind, nmax);
    for (int n = 0; n <= nmax; ++n) t.set_entry(n, n, Rational(1));
    return t;
}

bool entries_equal(const StirlingTriangle& a, const StirlingTriangle& b) {
    if (a.nmax() != b.nmax()) return false;
    for (int n = 0; n <= a.nmax(); ++n)
        for (int k = 0; k <= n; ++k)
            if (a.entry(n, k) != b.entry(n, k)) return false;
    return true;
}

bool matrices_equal(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index n = 0; n < a.rows(); ++n)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (a(n, k) != b(n, k)) return false;
    return true;
}

bool matrix_is_identity(const RationalMatrix& m) {
    for (Eigen::Index n = 0; n < m.rows(); ++n)
        for (Eigen::Index k = 0; k <= n; ++k)
            if (m(n, k) != (n == k ? Rational(1) : Rational(0))) return false;
    return true;
}

CheckResult check_eq6(int order) {
    int nmax = std::min(order, 25);
    EgfSeries i = build("I", {}, nmax);
    bool pass = entries_equal(triangle_from_series(i, StirlingKind::First, nmax),
                              classical_first(nmax)) &&
                triangle_from_series(i, StirlingKind::Second, nmax) ==
                    identity_triangle(StirlingKind::Second, nmax);
    return {"eq6", "s_I=s and S_I=delta", pass, {}};
}

CheckResult check_eq9(int order) {
    int nmax = std::min(order, 25);
    EgfSeries e = build("E", {}, nmax);
    bool pass = triangle_from_series(e, StirlingKind::First, nmax) ==
                    identity_triangle(StirlingKind::First, nmax) &&
                entries_equal(triangle_from_series(e, StirlingKind::Second, nmax),
                              classical_second(nmax));
    return {"eq9", "s_E=delta and S_E=S", pass, {}};
}

CheckResult check_eq17(int order) {
    int nmax = std::min(order, 16);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        for (StirlingKind kind : {StirlingKind::First, StirlingKind::Second}) {
            StirlingTriangle t = triangle_from_series(b.series, kind, nmax);
            Rational diag(1);
            for (int k = 0; k <= nmax; ++k) {
                if (t.entry(k, k) != diag) pass = false;
                diag *= t.entry(1, 1);
            }
        }
    }
    return {"eq17", "T_B(k,k)=T_B(1,1)^k for both kinds", pass, {}};
}

CheckResult check_eq23(int order) {
    int nmax = std::min(order, 10);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        StirlingTriangle first = triangle_from_series(b.series, StirlingKind::First, nmax);
        StirlingTriangle second = triangle_from_series(b.series, StirlingKind::Second, nmax);
        for (int n = 0; n <= nmax; ++n) {
            PotentialPolynomial p = potential(b.series, n);
            for (int r = 0; r <= n; ++r) {
                if (evaluate(derivative(p, r), Rational(0)) != first.entry(n, r)) pass = false;
                if (evaluate(forward_difference(p, r), Rational(0)) != second.entry(n, r))
                    pass = false;
            }
        }
    }
    return {"eq23", "P_n^(r)(B;0)/r!=s_B(n,r) and (Delta^r P_n)(B;0)/r!=S_B(n,r)", pass, {}};
}

CheckResult check_eq25(int order) {
    int nmax = std::min(order, 12);
    EgfSeries i = build("I", {}, nmax);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        if (!(circ(b.series, i) == b.series)) pass = false;
        if (!(circ(i, b.series) == b.series)) pass = false;
    }
    return {"eq25", "circ(B,I)=circ(I,B)=B", pass, {}};
}

CheckResult check_circ_law(const std::string& tag, StirlingKind kind, int order) {
    int nmax = std::min(order, 12);
    bool pass = true;
    for (const auto& [b, c] : pair_list(nmax)) {
        StirlingTriangle direct = triangle_from_series(circ(b.series, c.series), kind, nmax);
        StirlingTriangle composed = compose_circ_triangles(
            kind, triangle_from_series(b.series, kind, nmax),
            triangle_from_series(c.series, StirlingKind::Second, nmax));
        if (!(direct == composed)) pass = false;
    }
    std::string statement = kind == StirlingKind::First ? "s_{circ(B,C)}(n,k)=sum_j S_C(n,j)s_B(j,k)"
                                                        : "S_{circ(B,C)}(n,k)=sum_j S_C(n,j)S_B(j,k)";
    return {tag, statement, pass, {}};
}

CheckResult check_diamond_law(const std::string& tag, StirlingKind kind, int order) {
    int nmax = std::min(order, 12);
    bool pass = true;
    for (const auto& [b, c] : pair_list(nmax)) {
        StirlingTriangle direct = triangle_from_series(diamond(b.series, c.series), kind, nmax);
        StirlingTriangle composed = compose_diamond_triangles(
            kind, triangle_from_series(b.series, kind, nmax),
            triangle_from_series(c.series, StirlingKind::First, nmax));
        if (!(direct == composed)) pass = false;
    }
    std::string statement = kind == StirlingKind::First
                                ? "s_{diamond(B,C)}(n,k)=sum_j s_C(n,j)s_B(j,k)"
                                : "S_{diamond(B,C)}(n,k)=sum_j s_C(n,j)S_B(j,k)";
    return {tag, statement, pass, {}};
}

CheckResult check_eq28(int order) {
    int nmax = std::min(order, 15);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        StirlingTriangle first = triangle_from_series(b.series, StirlingKind::First, nmax);
        StirlingTriangle second = triangle_from_series(b.series, StirlingKind::Second, nmax);
        if (!(convert_second_to_first(second) == first)) pass = false;
    }
    return {"eq28", "s_B(n,k)=sum_j S_B(n,j)s(j,k)", pass, {}};
}

CheckResult check_eq32(int order) {
    int nmax = std::min(order, 15);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        StirlingTriangle first = triangle_from_series(b.series, StirlingKind::First, nmax);
        StirlingTriangle second = triangle_from_series(b.series, StirlingKind::Second, nmax);
        if (!(convert_first_to_second(first) == second)) pass = false;
    }
    return {"eq32", "S_B(n,k)=sum_j s_B(n,j)S(j,k)", pass, {}};
}

CheckResult check_potential_composition(const std::string& tag, bool is_circ, int order) {
    int nmax = std::min(order, 12);
    bool pass = true;
    for (const auto& [b, c] : pair_list(nmax)) {
        EgfSeries combined = is_circ ? circ(b.series, c.series) : diamond(b.series, c.series);
        for (int n = 0; n <= nmax; ++n) {
            PotentialPolynomial direct = potential(combined, n);
            PotentialPolynomial composed = is_circ ? compose_potential_circ(b.series, c.series, n)
                                                   : compose_potential_diamond(b.series, c.series, n);
            if (!(direct == composed)) pass = false;
        }
    }
    std::string statement = is_circ ? "P_n(circ(B,C);x)=sum_k S_C(n,k)P_k(B;x)"
                                    : "P_n(diamond(B,C);x)=sum_k s_C(n,k)P_k(B;x)";
    return {tag, statement, pass, {}};
}

CheckResult check_eq38(int order, const Rational& lambda) {
    int nmax = std::min(order, 15);
    EgfSeries b = build("Blambda", {lambda}, nmax);
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, nmax);
    StirlingTriangle s = classical_first(nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k)
            if (first.entry(n, k) != lambda.pow(n - k) * s.entry(n, k)) pass = false;
    return {"eq38", "s_Blambda(n,k)=lambda^(n-k)s(n,k)", pass, {}};
}

CheckResult check_eq39(int order, const Rational& lambda) {
    int nmax = std::min(order, 12);
    EgfSeries b = build("Blambda", {lambda}, nmax);
    StirlingTriangle direct = triangle_from_series(b, StirlingKind::Second, nmax);
    StirlingTriangle s = classical_first(nmax);
    StirlingTriangle cs = classical_second(nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rational via_classical(0);
            for (int j = k; j <= n; ++j)
                via_classical += lambda.pow(n - j) * s.entry(n, j) * cs.entry(j, k);
            Rational via_differences(0);
            for (int j = 0; j <= k; ++j) {
                Rational term(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
                if ((k - j) % 2 != 0) term = -term;
                via_differences += term * degenerate_falling(Rational(j), n, lambda);
            }
            via_differences /= Rational(factorial(static_cast<unsigned long>(k)));
            if (direct.entry(n, k) != via_classical) pass = false;
            if (direct.entry(n, k) != via_differences) pass = false;
        }
    }
    return {"eq39",
            "S_Blambda(n,k)=sum_j lambda^(n-j)s(n,j)S(j,k)"
            "=(1/k!)sum_j C(k,j)(-1)^(k-j)(j)_{n,lambda}",
            pass,
            {"the alternating sum uses the degenerate falling factorial (j)_{n,lambda}; "
             "reading the subscript as (j)_{n,k} gives 0 instead of 1-lambda already at "
             "n=2, k=1"}};
}

std::vector<CheckResult> check_eq42(int order, const Rational& lambda) {
    int nmax = std::min(order, 12);
    EgfSeries b = build("Blambda", {lambda}, nmax);
    EgfSeries c = build("Clambda", {lambda}, nmax);
    bool circ_pass = circ(c, b) == build("E", {}, nmax);
    bool diamond_pass = diamond(b, c) == build("I", {}, nmax);
    return {{"eq42", "circ(Clambda,Blambda)=E", circ_pass, {}},
            {"eq42", "diamond(Blambda,Clambda)=I", diamond_pass, {}}};
}

CheckResult check_eq43(int order, const Rational& lambda) {
    int nmax = std::min(order, 15);
    StirlingTriangle second_b =
        triangle_from_series(build("Blambda", {lambda}, nmax), StirlingKind::Second, nmax);
    StirlingTriangle first_c =
        triangle_from_series(build("Clambda", {lambda}, nmax), StirlingKind::First, nmax);
    bool pass = matrix_is_identity(lower_product(second_b.matrix(), first_c.matrix()));
    return {"eq43", "sum_j S_Blambda(n,j)s_Clambda(j,k)=delta(n,k)", pass, {}};
}

CheckResult check_eq44(int order, const Rational& lambda) {
    int nmax = std::min(order, 15);
    StirlingTriangle first_c =
        triangle_from_series(build("Clambda", {lambda}, nmax), StirlingKind::First, nmax);
    StirlingTriangle s = classical_first(nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rational sum(0);
            for (int j = k; j <= n; ++j)
                sum += first_c.entry(n, j) * lambda.pow(j - k) * s.entry(j, k);
            if (sum != s.entry(n, k)) pass = false;
        }
    }
    return {"eq44", "s(n,k)=sum_j s_Clambda(n,j)lambda^(j-k)s(j,k)", pass, {}};
}

CheckResult check_eq45(int order, const Rational& lambda) {
    int nmax = std::min(order, 12);
    StirlingTriangle first_c =
        triangle_from_series(build("Clambda", {lambda}, nmax), StirlingKind::First, nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        for (int x = 0; x <= n; ++x) {
            Rational rhs(0);
            for (int k = 0; k <= n; ++k)
                rhs += first_c.entry(n, k) * degenerate_falling(Rational(x), k, lambda);
            if (falling_factorial(Rational(x), n) != rhs) pass = false;
        }
    }
    return {"eq45", "(x)_n=sum_k s_Clambda(n,k)(x)_{k,lambda} at x=0..n", pass, {}};
}

CheckResult check_eqA(int order) {
    int nmax = std::min(order, 12);
    EgfSeries e = build("E", {}, nmax);
    bool pass = true;
    for (const Named& c : catalog_list(nmax)) {
        EgfSeries ec = circ(e, c.series);
        StirlingTriangle second_c = triangle_from_series(c.series, StirlingKind::Second, nmax);
        if (!entries_equal(triangle_from_series(ec, StirlingKind::First, nmax), second_c))
            pass = false;
        StirlingTriangle second_ec = triangle_from_series(ec, StirlingKind::Second, nmax);
        RationalMatrix expected = lower_product(second_c.matrix(), classical_second(nmax).matrix());
        if (!matrices_equal(second_ec.matrix(), expected)) pass = false;
    }
    return {"eqA", "s_{circ(E,C)}=S_C and S_{circ(E,C)}(n,k)=sum_j S_C(n,j)S(j,k)", pass, {}};
}

CheckResult check_eqB(int order) {
    int nmax = std::min(order, 10);
    EgfSeries e = build("E", {}, nmax);
    bool pass = true;
    for (const Named& c : catalog_list(nmax)) {
        EgfSeries ec = circ(e, c.series);
        StirlingTriangle second_c = triangle_from_series(c.series, StirlingKind::Second, nmax);
        for (int n = 0; n <= nmax; ++n) {
            RationalVector mono(n + 1);
            for (int k = 0; k <= n; ++k) mono(k) = second_c.entry(n, k);
            if (!(potential(ec, n) == PotentialPolynomial::from_monomial(mono))) pass = false;
        }
    }
    return {"eqB", "P_n(circ(E,C);x)=sum_k S_C(n,k)x^k", pass, {}};
}

CheckResult check_eq47(int order) {
    int nmax = std::min(order, 10);
    std::vector<DistributionSpec> specs = {
        FiniteSupport{{{Rational(0), Rational(2, 3)}, {Rational(1), Rational(1, 3)}}},
        FiniteSupport{{{Rational(-1), half()}, {Rational(1), half()}}},
        Poisson{Rational(1)}};
    bool pass = true;
    for (const DistributionSpec& d : specs) {
        EgfSeries b = mgf_series(d, nmax);
        auto [first_y, second_y] = probabilistic_triangles(d, nmax);
        StirlingTriangle first_b = triangle_from_series(b, StirlingKind::First, nmax);
        StirlingTriangle second_b = triangle_from_series(b, StirlingKind::Second, nmax);
        for (int n = 0; n <= nmax; ++n) {
            for (int k = 0; k <= n; ++k) {
                Rational expected = first_b.entry(n, k);
                if ((n - k) % 2 != 0) expected = -expected;
                if (first_y.entry(n, k) != expected) pass = false;
            }
        }
        if (!entries_equal(second_y, second_b)) pass = false;
        if (const auto* fin = std::get_if<FiniteSupport>(&d))
            if (!entries_equal(stirling_from_moments(*fin, std::min(nmax, 8)),
                               triangle_from_series(b.truncated(std::min(nmax, 8)),
                                                    StirlingKind::Second, std::min(nmax, 8))))
                pass = false;
    }
    return {"eq47",
            "s_Y(n,k)=(-1)^(n-k)s_B(n,k) and S_Y(n,k)=S_B(n,k) for B=E[e^{zY}], "
            "cross-checked against moment sums",
            pass,
            {}};
}

CheckResult check_eq49(int order) {
    int nmax = std::min(order, 8);
    std::vector<FiniteSupport> specs = {
        FiniteSupport{{{Rational(0), Rational(2, 3)}, {Rational(1), Rational(1, 3)}}},
        FiniteSupport{{{Rational(-1), half()}, {Rational(1), half()}}},
        FiniteSupport{
            {{Rational(0), Rational(1, 6)}, {Rational(1), Rational(1, 3)}, {Rational(2), half()}}}};
    bool pass = true;
    for (const FiniteSupport& d : specs)
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= nmax; ++n)
                if (moment(d, m, n) != moment_oracle(d, m, n)) pass = false;
    return {"eq49", "P_n(B;m)=E[W_m^n] for W_m the sum of m independent copies", pass, {}};
}

CheckResult check_remark5(int order) {
    int nmax = std::min(order, 10);
    StirlingTriangle cs = classical_second(nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        for (int r = 0; r <= nmax; ++r) {
            Rational sum(0);
            for (int j = 0; j <= r; ++j) {
                Rational term(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(j)));
                if ((r - j) % 2 != 0) term = -term;
                sum += term * Rational(j).pow(n);
            }
            sum /= Rational(factorial(static_cast<unsigned long>(r)));
            if (sum != cs.entry(n, r)) pass = false;
        }
    }
    return {"remark5", "(1/r!)sum_j C(r,j)(-1)^(r-j)j^n=S(n,r)", pass, {}};
}

CheckResult check_remark9(int order) {
    int nmax = std::min(order, 20);
    RationalMatrix s = classical_first(nmax).matrix();
    RationalMatrix cs = classical_second(nmax).matrix();
    bool pass = matrix_is_identity(lower_product(cs, s)) && matrix_is_identity(lower_product(s, cs));
    return {"remark9", "sum_j S(n,j)s(j,k)=sum_j s(n,j)S(j,k)=delta(n,k)", pass, {}};
}

CheckResult check_thm1(int order) {
    int nmax = std::min(order, 10);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        for (int n = 0; n <= nmax; ++n) {
            PotentialPolynomial p = potential(b.series, n);
            for (int m = -2; m <= 4; ++m)
                if (evaluate(p, Rational(m)) != evaluate_falling(p, Rational(m))) pass = false;
            // Independent anchor: P_n(B;m) is the n-th EGF coefficient of B^m.
            for (int m = 0; m <= 3; ++m)
                if (evaluate(p, Rational(m)) != pow_scalar(b.series, Rational(m)).coeff(n))
                    pass = false;
        }
    }
    return {"thm1", "P_n(B;x)=sum_k s_B(n,k)x^k=sum_k S_B(n,k)(x)_k", pass, {}};
}

CheckResult check_thm3dual(int order) {
    int nmax = std::min(order, 12);
    bool pass = true;
    for (const Named& b : catalog_list(nmax))
        for (StirlingKind kind : {StirlingKind::First, StirlingKind::Second})
            if (!(triangle_recursive(b.series, kind, nmax) ==
                  triangle_from_series(b.series, kind, nmax)))
                pass = false;
    return {"thm3dual",
            "recursive recurrence reproduces the series triangles (both kinds)",
            pass,
            {"the first-kind recurrence needs the binomial factor C(n,j) inside the sum, "
             "mirroring the second-kind form; without it s_E(2,2)=1/2 and s_I(3,2)=-1 "
             "instead of 1 and -3"}};
}

CheckResult check_thm4(int order) {
    int nmax = std::min(order, 8);
    bool pass = true;
    for (const Named& b : catalog_list(nmax)) {
        for (int n = 0; n <= nmax; ++n) {
            PotentialPolynomial p = potential(b.series, n);
            for (int r = 0; r <= n; ++r) {
                PotentialPolynomial dp = derivative(p, r);
                PotentialPolynomial fp = forward_difference(p, r);
                if (!(dp == derivative_expansion(b.series, n, r))) pass = false;
                if (!(fp == forward_difference_expansion(b.series, n, r))) pass = false;
                for (int x = 0; x <= 2; ++x)
                    if (forward_difference_pointwise(p, r, Rational(x)) !=
                        Rational(factorial(static_cast<unsigned long>(r))) *
                            evaluate(fp, Rational(x)))
                        pass = false;
            }
            // Vanishing above the degree.
            if (!(derivative(p, n + 1) == PotentialPolynomial::zero())) pass = false;
            if (!(forward_difference(p, n + 1) == PotentialPolynomial::zero())) pass = false;
            if (!forward_difference_pointwise(p, n + 1, Rational(1)).is_zero()) pass = false;
        }
    }
    return {"thm4",
            "derivative/forward-difference expansions of P_n agree for 0<=r<=n "
            "and vanish for r>n",
            pass,
            {}};
}

CheckResult restricted_partition_check(const std::string& tag, const std::string& family,
                                       const std::vector<Rational>& params,
                                       const SizeConstraint& constraint, int nmax,
                                       const std::string& statement) {
    nmax = std::min(nmax, 10);
    EgfSeries b = build(family, params, nmax);
    StirlingTriangle t = triangle_from_series(b, StirlingKind::Second, nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<mpz_class> counts = count_partitions_all(n, constraint);
        for (int k = 0; k <= n; ++k)
            if (t.entry(n, k) != Rational(counts[static_cast<std::size_t>(k)])) pass = false;
    }
    return {tag, statement, pass, {}};
}

CheckResult restricted_permutation_check(const std::string& tag, const std::string& family,
                                         const std::vector<Rational>& params,
                                         const SizeConstraint& constraint, int nmax,
                                         const std::string& statement) {
    nmax = std::min(nmax, 9);
    EgfSeries b = build(family, params, nmax);
    StirlingTriangle t = triangle_from_series(b, StirlingKind::Second, nmax);
    bool pass = true;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<mpz_class> counts = count_permutations_all(n, constraint);
        for (int k = 0; k <= n; ++k)
            if (t.entry(n, k) != Rational(counts[static_cast<std::size_t>(k)])) pass = false;
    }
    return {tag, statement, pass, {}};
}

}  // namespace

const std::vector<std::string>& verify_tags() {
    static const std::vector<std::string> tags = {
        "eq6",  "eq9",  "eq17", "eq23",    "eq25",    "eq26",  "eq27",     "eq28",
        "eq30", "eq31", "eq32", "eq33",    "eq34",    "eq38",  "eq39",     "eq42",
        "eq43", "eq44", "eq45", "eqA",     "eqB",     "eq47",  "eq49",     "remark5",
        "remark9",      "thm1", "thm3dual", "thm4"};
    return tags;
}

std::string display_tag(const std::string& tag) {
    if (tag == "thm1") return "Thm.1";
    if (tag == "thm3dual") return "Thm.3-dual";
    if (tag == "thm4") return "Thm.4";
    if (tag == "remark5") return "Remark 5";
    if (tag == "remark9") return "Remark 9";
    if (tag == "eqA") return "Eq.(A)";
    if (tag == "eqB") return "Eq.(B)";
    if (tag.rfind("eq", 0) == 0 && tag.size() > 2) return "Eq.(" + tag.substr(2) + ")";
    return tag;
}

std::string format_check_line(const CheckResult& r) {
    std::string line = (r.pass ? "PASS " : "FAIL ") + display_tag(r.tag) + " " + r.statement;
    for (const std::string& note : r.notes) line += "\nNOTE " + display_tag(r.tag) + " " + note;
    return line;
}

std::vector<CheckResult> run_check(const std::string& tag, int order, const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroLambda("verify");
    if (tag == "eq6") return {check_eq6(order)};
    if (tag == "eq9") return {check_eq9(order)};
    if (tag == "eq17") return {check_eq17(order)};
    if (tag == "eq23") return {check_eq23(order)};
    if (tag == "eq25") return {check_eq25(order)};
    if (tag == "eq26") return {check_circ_law("eq26", StirlingKind::First, order)};
    if (tag == "eq27") return {check_circ_law("eq27", StirlingKind::Second, order)};
    if (tag == "eq28") return {check_eq28(order)};
    if (tag == "eq30") return {check_diamond_law("eq30", StirlingKind::First, order)};
    if (tag == "eq31") return {check_diamond_law("eq31", StirlingKind::Second, order)};
    if (tag == "eq32") return {check_eq32(order)};
    if (tag == "eq33") return {check_potential_composition("eq33", true, order)};
    if (tag == "eq34") return {check_potential_composition("eq34", false, order)};
    if (tag == "eq38") return {check_eq38(order, lambda)};
    if (tag == "eq39") return {check_eq39(order, lambda)};
    if (tag == "eq42") return check_eq42(order, lambda);
    if (tag == "eq43") return {check_eq43(order, lambda)};
    if (tag == "eq44") return {check_eq44(order, lambda)};
    if (tag == "eq45") return {check_eq45(order, lambda)};
    if (tag == "eqA") return {check_eqA(order)};
    if (tag == "eqB") return {check_eqB(order)};
    if (tag == "eq47") return {check_eq47(order)};
    if (tag == "eq49") return {check_eq49(order)};
    if (tag == "remark5") return {check_remark5(order)};
    if (tag == "remark9") return {check_remark9(order)};
    if (tag == "thm1") return {check_thm1(order)};
    if (tag == "thm3dual") return {check_thm3dual(order)};
    if (tag == "thm4") return {check_thm4(order)};
    throw UnknownName("unknown identity tag '" + tag + "'");
}

std::vector<CheckResult> verify_suite(int order, const Rational& lambda) {
    if (order < 8) throw OrderTooSmall("verify suite needs order >= 8");
    std::vector<CheckResult> out;
    for (const std::string& tag : verify_tags()) {
        std::vector<CheckResult> results = run_check(tag, order, lambda);
        out.insert(out.end(), results.begin(), results.end());
    }
    return out;
}

std::vector<CheckResult> verify_restricted(int nmax) {
    if (nmax < 1) throw OrderTooSmall("restricted checks need nmax >= 1");
    std::vector<CheckResult> out;
    out.push_back(restricted_partition_check(
        "restricted-Rle3", "Rle", {Rational(3)}, SizeConstraint::at_most(3), nmax,
        "S_Rle(3)(n,k) counts partitions with block sizes <= 3"));
    out.push_back(restricted_partition_check(
        "restricted-Rge2", "Rge", {Rational(2)}, SizeConstraint::at_least(2), nmax,
        "S_Rge(2)(n,k) counts partitions with block sizes >= 2"));
    out.push_back(restricted_partition_check(
        "restricted-cosh", "cosh", {}, SizeConstraint::even_only(), nmax,
        "S_cosh(n,k) counts partitions with even block sizes"));
    out.push_back(restricted_partition_check(
        "restricted-pairing", "pairing", {}, SizeConstraint::explicit_set({2}), nmax,
        "S_pairing(n,k) counts perfect matchings into k pairs"));
    out.push_back(restricted_partition_check(
        "restricted-involution", "involution", {}, SizeConstraint::explicit_set({1, 2}), nmax,
        "S_involution(n,k) counts partitions with block sizes in {1,2}"));
    out.push_back(restricted_permutation_check(
        "restricted-Ple3", "Ple", {Rational(3)}, SizeConstraint::at_most(3), nmax,
        "S_Ple(3)(n,k) counts permutations with cycle lengths <= 3"));
    out.push_back(restricted_permutation_check(
        "restricted-Pge2", "Pge", {Rational(2)}, SizeConstraint::at_least(2), nmax,
        "S_Pge(2)(n,k) counts permutations with cycle lengths >= 2"));
    {
        int cap = std::min(nmax, 10);
        EgfSeries b = build("geom", {}, cap);
        StirlingTriangle t = triangle_from_series(b, StirlingKind::Second, cap);
        bool pass = true;
        for (int n = 0; n <= cap; ++n) {
            std::vector<mpz_class> counts = count_list_partitions_all(n);
            for (int k = 0; k <= n; ++k)
                if (t.entry(n, k) != Rational(counts[static_cast<std::size_t>(k)])) pass = false;
        }
        out.push_back({"restricted-geom",
                       "S_geom(n,k) counts partitions into k nonempty ordered lists", pass, {}});
    }
    return out;
}

}  // namespace bstirling
