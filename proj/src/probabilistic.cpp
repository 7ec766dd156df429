#include "bstirling/probabilistic.hpp"

#include <string>

#include "bstirling/potential.hpp"

namespace bstirling {

namespace {

constexpr long kTupleCap = 1000000;

void validate_finite(const FiniteSupport& d) {
    if (d.points.empty()) throw BadDistribution("finite distribution needs at least one point");
    Rational total(0);
    for (const auto& [value, prob] : d.points) {
        (void)value;
        if (prob.sign() <= 0)
            throw BadDistribution("probabilities must be positive, got " + prob.str());
        total += prob;
    }
    if (!total.is_one())
        throw BadDistribution("probabilities must sum to 1, got " + total.str());
}

void validate_poisson(const Poisson& d) {
    if (d.mu.sign() <= 0)
        throw BadDistribution("Poisson mean must be positive, got " + d.mu.str());
}

Rational parse_rational_field(std::string_view text, const char* what) {
    try {
        return Rational::from_string(text);
    } catch (const Error&) {
        throw BadDistribution("invalid " + std::string(what) + " '" + std::string(text) +
                              "' in distribution spec");
    }
}

}  // namespace

void validate(const DistributionSpec& d) {
    if (const auto* finite = std::get_if<FiniteSupport>(&d)) validate_finite(*finite);
    if (const auto* poisson = std::get_if<Poisson>(&d)) validate_poisson(*poisson);
}

DistributionSpec parse_distribution(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw BadDistribution("distribution spec needs the form 'finite:v:p,...' or 'poisson:mu'");
    std::string_view head = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (head == "poisson") {
        Poisson d{parse_rational_field(rest, "mean")};
        validate_poisson(d);
        return d;
    }
    if (head == "finite") {
        FiniteSupport d;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view pair = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            auto sep = pair.find(':');
            if (sep == std::string_view::npos)
                throw BadDistribution("finite distribution point needs the form value:prob, got '" +
                                      std::string(pair) + "'");
            d.points.emplace_back(parse_rational_field(pair.substr(0, sep), "value"),
                                  parse_rational_field(pair.substr(sep + 1), "probability"));
        }
        validate_finite(d);
        return d;
    }
    throw BadDistribution("unknown distribution '" + std::string(head) +
                          "'; supported: finite, poisson");
}

EgfSeries mgf_series(const DistributionSpec& d, int order) {
    validate(d);
    if (const auto* finite = std::get_if<FiniteSupport>(&d)) {
        EgfSeries s(order);
        for (int n = 0; n <= order; ++n) {
            Rational acc(0);
            for (const auto& [value, prob] : finite->points) acc += prob * value.pow(n);
            s.set_coeff(n, acc);
        }
        return s;
    }
    const auto& poisson = std::get<Poisson>(d);
    // exp(mu (e^z - 1))
    EgfSeries em1(order);
    for (int n = 1; n <= order; ++n) em1.set_coeff(n, Rational(1));
    return exp_series(scale(em1, poisson.mu));
}

std::pair<StirlingTriangle, StirlingTriangle> probabilistic_triangles(const DistributionSpec& d,
                                                                      int nmax) {
    EgfSeries b = mgf_series(d, nmax);
    StirlingTriangle first = triangle_from_series(b, StirlingKind::First, nmax);
    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k)
            if ((n - k) % 2 == 1) first.set_entry(n, k, -first.entry(n, k));
    StirlingTriangle second = triangle_from_series(b, StirlingKind::Second, nmax);
    return {first, second};
}

Rational moment(const DistributionSpec& d, int m, int n) {
    if (m < 0 || n < 0) throw BadIndices("moment needs m >= 0 and n >= 0");
    return evaluate(potential(mgf_series(d, n), n), Rational(m));
}

Rational moment_oracle(const FiniteSupport& d, int m, int n) {
    validate_finite(d);
    if (m < 0 || n < 0) throw BadIndices("moment needs m >= 0 and n >= 0");
    const long support = static_cast<long>(d.points.size());
    long tuples = 1;
    for (int i = 0; i < m; ++i) {
        tuples *= support;
        if (tuples > kTupleCap)
            throw TooLarge("moment enumeration of " + std::to_string(support) + "^" +
                           std::to_string(m) + " outcome tuples exceeds the cap");
    }
    Rational acc(0);
    std::vector<std::size_t> index(static_cast<std::size_t>(m), 0);
    while (true) {
        Rational sum(0);
        Rational prob(1);
        for (std::size_t i : index) {
            sum += d.points[i].first;
            prob *= d.points[i].second;
        }
        acc += prob * sum.pow(n);
        // odometer increment over support^m
        std::size_t pos = 0;
        while (pos < index.size()) {
            if (++index[pos] < d.points.size()) break;
            index[pos] = 0;
            ++pos;
        }
        if (pos == index.size()) break;
    }
    return acc;
}

StirlingTriangle stirling_from_moments(const FiniteSupport& d, int nmax) {
    validate_finite(d);
    // E W_j^n for 0 <= j, n <= nmax
    std::vector<std::vector<Rational>> w(static_cast<std::size_t>(nmax) + 1);
    for (int j = 0; j <= nmax; ++j) {
        w[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(nmax) + 1);
        for (int n = 0; n <= nmax; ++n)
            w[static_cast<std::size_t>(j)].push_back(moment_oracle(d, j, n));
    }
    StirlingTriangle t(StirlingKind::Second, nmax);
    for (int n = 0; n <= nmax; ++n)
        for (int r = 0; r <= n; ++r) {
            Rational acc(0);
            for (int j = 0; j <= r; ++j) {
                Rational term = Rational(binomial(static_cast<unsigned long>(r),
                                                  static_cast<unsigned long>(j))) *
                                w[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
                acc += (r - j) % 2 == 0 ? term : -term;
            }
            t.set_entry(n, r, acc / Rational(factorial(static_cast<unsigned long>(r))));
        }
    return t;
}

}  // namespace bstirling
