#include "bstirling/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "bstirling/errors.hpp"

namespace bstirling {

namespace {

[[noreturn]] void bad_schema(const std::string& detail) {
    throw UsageError("invalid JSON input: " + detail);
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) bad_schema("expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad_schema("missing field '" + std::string(key) + "'");
    return *it;
}

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad_schema(std::string(what) + " must be an integer");
    return j.get<int>();
}

Rational require_rational(const Json& j, const char* what) {
    if (!j.is_string()) bad_schema(std::string(what) + " must be a rational string");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const Error&) {
        bad_schema(std::string(what) + ": bad rational literal '" +
                   j.get<std::string>() + "'");
    }
}

RationalVector require_rational_array(const Json& j, int expected, const char* what) {
    if (!j.is_array()) bad_schema(std::string(what) + " must be an array");
    if (static_cast<int>(j.size()) != expected)
        bad_schema(std::string(what) + " must have " + std::to_string(expected) +
                   " entries, got " + std::to_string(static_cast<int>(j.size())));
    RationalVector v(expected);
    for (int i = 0; i < expected; ++i) v(i) = require_rational(j[static_cast<std::size_t>(i)], what);
    return v;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

/// Render a grid of cells as an aligned Markdown table with right-aligned
/// columns; the first row is the header.
std::string markdown_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width(cells.empty() ? 0 : cells[0].size(), 2);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << '|';
        for (std::size_t c = 0; c < cells[r].size(); ++c)
            out << ' ' << pad_left(cells[r][c], width[c]) << " |";
        out << '\n';
        if (r == 0) {
            out << '|';
            for (std::size_t c = 0; c < cells[0].size(); ++c)
                out << ' ' << std::string(width[c] - 1, '-') << ": |";
            out << '\n';
        }
    }
    return out.str();
}

std::string csv_table(const std::vector<std::vector<std::string>>& cells) {
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::vector<std::string>> triangle_cells(const StirlingTriangle& t,
                                                     bool pad_rectangular) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    header.push_back("n\\k");
    for (int k = 0; k <= t.nmax(); ++k) header.push_back(std::to_string(k));
    cells.push_back(std::move(header));
    for (int n = 0; n <= t.nmax(); ++n) {
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        for (int k = 0; k <= n; ++k) row.push_back(t.entry(n, k).str());
        if (pad_rectangular) row.resize(static_cast<std::size_t>(t.nmax()) + 2, "");
        cells.push_back(std::move(row));
    }
    return cells;
}

std::vector<std::vector<std::string>> series_cells(const EgfSeries& s) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "U_n", "U_n/n!"});
    for (int n = 0; n <= s.order(); ++n)
        cells.push_back({std::to_string(n), s.coeff(n).str(), s.ordinary_coeff(n).str()});
    return cells;
}

std::vector<std::vector<std::string>> polynomial_cells(const PotentialPolynomial& p) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "x^k", "(x)_k"});
    for (int k = 0; k <= p.degree(); ++k)
        cells.push_back({std::to_string(k), p.monomial()(k).str(), p.falling()(k).str()});
    return cells;
}

}  // namespace

Json series_to_json(const EgfSeries& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

EgfSeries series_from_json(const Json& j) {
    int order = require_int(require_field(j, "order"), "order");
    if (order < 0) bad_schema("order must be >= 0");
    return EgfSeries(require_rational_array(require_field(j, "coeffs"), order + 1, "coeffs"));
}

Json triangle_to_json(const StirlingTriangle& t) {
    Json j;
    j["kind"] = kind_name(t.kind());
    j["nmax"] = t.nmax();
    Json rows = Json::array();
    for (int n = 0; n <= t.nmax(); ++n) {
        Json row = Json::array();
        for (int k = 0; k <= n; ++k) row.push_back(t.entry(n, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

StirlingTriangle triangle_from_json(const Json& j) {
    const Json& kind_field = require_field(j, "kind");
    if (!kind_field.is_string()) bad_schema("kind must be \"first\" or \"second\"");
    std::string kind_text = kind_field.get<std::string>();
    StirlingKind kind;
    if (kind_text == "first")
        kind = StirlingKind::First;
    else if (kind_text == "second")
        kind = StirlingKind::Second;
    else
        bad_schema("kind must be \"first\" or \"second\", got '" + kind_text + "'");
    int nmax = require_int(require_field(j, "nmax"), "nmax");
    if (nmax < 0) bad_schema("nmax must be >= 0");
    const Json& rows = require_field(j, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != nmax + 1)
        bad_schema("rows must be an array of nmax+1 rows");
    StirlingTriangle t(kind, nmax);
    for (int n = 0; n <= nmax; ++n) {
        RationalVector row = require_rational_array(rows[static_cast<std::size_t>(n)],
                                                    n + 1, "triangle row");
        for (int k = 0; k <= n; ++k) t.set_entry(n, k, row(k));
    }
    return t;
}

Json polynomial_to_json(const PotentialPolynomial& p) {
    Json j;
    j["degree"] = p.degree();
    Json mono = Json::array();
    Json fall = Json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        mono.push_back(p.monomial()(k).str());
        fall.push_back(p.falling()(k).str());
    }
    j["monomial"] = std::move(mono);
    j["falling"] = std::move(fall);
    return j;
}

PotentialPolynomial polynomial_from_json(const Json& j) {
    int degree = require_int(require_field(j, "degree"), "degree");
    if (degree < 0) bad_schema("degree must be >= 0");
    RationalVector mono =
        require_rational_array(require_field(j, "monomial"), degree + 1, "monomial");
    RationalVector fall =
        require_rational_array(require_field(j, "falling"), degree + 1, "falling");
    PotentialPolynomial p = PotentialPolynomial::from_monomial(mono);
    for (int k = 0; k <= degree; ++k)
        if (p.falling()(k) != fall(k))
            bad_schema("monomial and falling bases describe different polynomials");
    return p;
}

EgfSeries series_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) bad_schema("not valid JSON");
    return series_from_json(j);
}

EgfSeries read_series_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open series file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return series_from_json_text(buf.str());
}

std::string triangle_markdown(const StirlingTriangle& t) {
    return markdown_table(triangle_cells(t, /*pad_rectangular=*/true));
}

std::string triangle_csv(const StirlingTriangle& t) {
    return csv_table(triangle_cells(t, /*pad_rectangular=*/true));
}

std::string series_markdown(const EgfSeries& s) { return markdown_table(series_cells(s)); }

std::string series_csv(const EgfSeries& s) { return csv_table(series_cells(s)); }

std::string polynomial_markdown(const PotentialPolynomial& p) {
    return "P(x) = " + polynomial_pretty(p) + "\n\n" + markdown_table(polynomial_cells(p));
}

std::string polynomial_csv(const PotentialPolynomial& p) {
    return csv_table(polynomial_cells(p));
}

std::string polynomial_pretty(const PotentialPolynomial& p) {
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.monomial()(k);
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << '-';
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = !(mag.is_one() && k > 0);
        if (need_coeff) {
            if (mag.is_integer())
                out << mag.str();
            else
                out << '(' << mag.str() << ')';
        }
        if (k > 0) {
            out << 'x';
            if (k > 1) out << '^' << k;
        }
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace bstirling
