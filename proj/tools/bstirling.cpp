#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bstirling/bell.hpp"
#include "bstirling/catalog.hpp"
#include "bstirling/egf.hpp"
#include "bstirling/errors.hpp"
#include "bstirling/format.hpp"
#include "bstirling/potential.hpp"
#include "bstirling/probabilistic.hpp"
#include "bstirling/stirling.hpp"
#include "bstirling/verify.hpp"

namespace {

using namespace bstirling;

constexpr int kDefaultMaxOrder = 256;

int max_order_cap() {
    const char* env = std::getenv("BSTIRLING_MAX_ORDER");
    if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
    try {
        Rational r = Rational::from_string(env);
        if (!r.is_integer() || r.sign() <= 0) throw Error("not a positive integer");
        return static_cast<int>(r.to_long());
    } catch (const Error&) {
        throw UsageError(std::string("BSTIRLING_MAX_ORDER must be a positive integer, got '") +
                         env + "'");
    }
}

void check_cap(int value, const char* flag) {
    int cap = max_order_cap();
    if (value < 0) throw UsageError(std::string(flag) + " must be >= 0");
    if (value > cap)
        throw UsageError(std::string(flag) + " exceeds the maximum order " + std::to_string(cap) +
                         " (override with BSTIRLING_MAX_ORDER)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + out_path + "'");
    f << text;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::from_string(text);
    } catch (const Error&) {
        throw UsageError(std::string(flag) + ": bad rational literal '" + text + "'");
    }
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational_flag(item, flag));
    if (out.empty()) throw UsageError(std::string(flag) + " needs at least one value");
    return out;
}

/// Resolve the series inputs shared by triangle/potential/prob: a catalog
/// grammar expression or a JSON coefficient file, evaluated/truncated to
/// `order` coefficients.
EgfSeries obtain_series(const std::string& spec, const std::string& file, int order) {
    if (!spec.empty() && !file.empty())
        throw UsageError("pass either --series or --series-file, not both");
    if (!spec.empty()) return eval_expr(parse_series(spec), order);
    if (!file.empty()) {
        EgfSeries s = read_series_file(file);
        if (s.order() < order)
            throw OrderTooSmall("series file carries order " + std::to_string(s.order()) +
                                " but order " + std::to_string(order) + " is required");
        return s.truncated(order);
    }
    throw UsageError("a series is required: --series EXPR or --series-file PATH");
}

StirlingKind parse_kind(const std::string& text) {
    return text == "first" ? StirlingKind::First : StirlingKind::Second;
}

struct SharedFlags {
    int order = 16;
    std::string format = "md";
    std::string series;
    std::string series_file;
    std::string out;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& f, bool with_series = true) {
    cmd->add_option("--order", f.order, "Series truncation order")->capture_default_str();
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", f.out, "Write output to this file instead of stdout");
    if (with_series) {
        cmd->add_option("--series", f.series, "Series expression in the catalog grammar");
        cmd->add_option("--series-file", f.series_file, "JSON series file");
    }
}

int cmd_triangle(const SharedFlags& f, const std::string& kind_text, int nmax_flag) {
    check_cap(f.order, "--order");
    int nmax = nmax_flag >= 0 ? nmax_flag : f.order;
    check_cap(nmax, "--nmax");
    EgfSeries b = obtain_series(f.series, f.series_file, std::max(f.order, nmax));
    StirlingTriangle t = triangle_from_series(b, parse_kind(kind_text), nmax);
    if (f.format == "json")
        emit(dump_json(triangle_to_json(t)), f.out);
    else if (f.format == "csv")
        emit(triangle_csv(t), f.out);
    else
        emit(triangle_markdown(t), f.out);
    return 0;
}

int cmd_potential(const SharedFlags& f, int n) {
    check_cap(f.order, "--order");
    check_cap(n, "--n");
    EgfSeries b = obtain_series(f.series, f.series_file, std::max(f.order, n));
    PotentialPolynomial p = potential(b, n);
    if (f.format == "json")
        emit(dump_json(polynomial_to_json(p)), f.out);
    else if (f.format == "csv")
        emit(polynomial_csv(p), f.out);
    else
        emit(polynomial_markdown(p), f.out);
    return 0;
}

int cmd_bell(const SharedFlags& f, const std::string& args_text, int n, int k) {
    check_cap(n, "--n");
    BellArguments args = parse_rational_list(args_text, "--args");
    if (k >= 0) {
        if (k > n) throw BadIndices("partial Bell needs k <= n");
        Rational value = k == 0 ? Rational(n == 0 ? 1 : 0) : partial_bell(args, n, k);
        if (f.format == "json") {
            Json j;
            j["n"] = n;
            j["k"] = k;
            j["value"] = value.str();
            emit(dump_json(j), f.out);
        } else {
            emit(value.str() + "\n", f.out);
        }
        return 0;
    }
    std::vector<Rational> row;
    for (int i = 0; i <= n; ++i)
        row.push_back(i == 0 ? Rational(n == 0 ? 1 : 0) : partial_bell(args, n, i));
    Rational complete = complete_bell(args, n);
    if (f.format == "json") {
        Json j;
        j["n"] = n;
        Json partial = Json::array();
        for (const Rational& v : row) partial.push_back(v.str());
        j["partial"] = std::move(partial);
        j["complete"] = complete.str();
        emit(dump_json(j), f.out);
    } else if (f.format == "csv") {
        std::ostringstream out;
        out << "k,partial\n";
        for (int i = 0; i <= n; ++i) out << i << ',' << row[static_cast<std::size_t>(i)].str() << '\n';
        out << "complete," << complete.str() << '\n';
        emit(out.str(), f.out);
    } else {
        std::ostringstream out;
        out << "| k | B_{" << n << ",k} |\n|--:|--:|\n";
        for (int i = 0; i <= n; ++i)
            out << "| " << i << " | " << row[static_cast<std::size_t>(i)].str() << " |\n";
        out << "\ncomplete B_" << n << " = " << complete.str() << "\n";
        emit(out.str(), f.out);
    }
    return 0;
}

int cmd_prob(const SharedFlags& f, const std::string& dist_text, int nmax_flag, int m, int n,
             const std::string& kind_text) {
    DistributionSpec d = parse_distribution(dist_text);
    if (m >= 0 || n >= 0) {
        if (m < 0 || n < 0) throw UsageError("moment mode needs both --m and --n");
        check_cap(n, "--n");
        Rational value = moment(d, m, n);
        if (f.format == "json") {
            Json j;
            j["m"] = m;
            j["n"] = n;
            j["moment"] = value.str();
            emit(dump_json(j), f.out);
        } else {
            emit(value.str() + "\n", f.out);
        }
        return 0;
    }
    int nmax = nmax_flag >= 0 ? nmax_flag : f.order;
    check_cap(nmax, "--nmax");
    auto [first, second] = probabilistic_triangles(d, nmax);
    bool want_first = kind_text == "first" || kind_text == "both";
    bool want_second = kind_text == "second" || kind_text == "both";
    if (f.format == "json") {
        if (want_first && want_second) {
            Json j;
            j["first"] = triangle_to_json(first);
            j["second"] = triangle_to_json(second);
            emit(dump_json(j), f.out);
        } else {
            emit(dump_json(triangle_to_json(want_first ? first : second)), f.out);
        }
    } else {
        std::ostringstream out;
        bool md = f.format == "md";
        if (want_first) {
            if (want_second) out << (md ? "first kind\n\n" : "kind,first\n");
            out << (md ? triangle_markdown(first) : triangle_csv(first));
        }
        if (want_second) {
            if (want_first) out << (md ? "\nsecond kind\n\n" : "\nkind,second\n");
            out << (md ? triangle_markdown(second) : triangle_csv(second));
        }
        emit(out.str(), f.out);
    }
    return 0;
}

int cmd_verify(const SharedFlags& f, const std::string& identity, const std::string& lambda_text,
               const std::string& family, int nmax_flag) {
    check_cap(f.order, "--order");
    Rational lambda = parse_rational_flag(lambda_text, "--lambda");
    std::vector<CheckResult> results;
    if (!family.empty()) {
        if (family != "restricted")
            throw UsageError("unknown check family '" + family + "' (expected 'restricted')");
        int nmax = nmax_flag >= 0 ? nmax_flag : std::min(f.order, 10);
        check_cap(nmax, "--nmax");
        results = verify_restricted(nmax);
    } else if (!identity.empty()) {
        results = run_check(identity, f.order, lambda);
    } else {
        results = verify_suite(f.order, lambda);
    }
    bool all_pass = true;
    for (const CheckResult& r : results) all_pass = all_pass && r.pass;
    if (f.format == "json") {
        Json arr = Json::array();
        for (const CheckResult& r : results) {
            Json j;
            j["tag"] = r.tag;
            j["display"] = display_tag(r.tag);
            j["statement"] = r.statement;
            j["pass"] = r.pass;
            j["notes"] = r.notes;
            arr.push_back(std::move(j));
        }
        emit(dump_json(arr), f.out);
    } else {
        std::ostringstream out;
        for (const CheckResult& r : results) out << format_check_line(r) << '\n';
        emit(out.str(), f.out);
    }
    return all_pass ? 0 : 1;
}

int cmd_parse(const SharedFlags& f) {
    check_cap(f.order, "--order");
    if (f.series.empty()) throw UsageError("parse needs --series EXPR");
    SeriesExpr e = parse_series(f.series);
    std::string canonical = to_string(e);
    if (f.format == "json") {
        Json j;
        j["canonical"] = canonical;
        j["series"] = series_to_json(eval_expr(e, f.order));
        emit(dump_json(j), f.out);
    } else {
        emit(canonical + "\n", f.out);
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Stirling triangles, potential polynomials, and identity checks\n"
                 "for EGF series with unit constant term"};
    app.require_subcommand(1);

    SharedFlags tri_flags;
    std::string tri_kind = "second";
    int tri_nmax = -1;
    CLI::App* tri = app.add_subcommand("triangle", "Tabulate a Stirling triangle");
    add_shared_flags(tri, tri_flags);
    tri->add_option("--kind", tri_kind, "Triangle kind")
        ->check(CLI::IsMember({"first", "second"}))
        ->capture_default_str();
    tri->add_option("--nmax", tri_nmax, "Largest row (defaults to --order)");

    SharedFlags pot_flags;
    int pot_n = 0;
    CLI::App* pot = app.add_subcommand("potential", "Print a potential polynomial");
    add_shared_flags(pot, pot_flags);
    pot->add_option("--n", pot_n, "Polynomial index n")->required();

    SharedFlags bell_flags;
    std::string bell_args;
    int bell_n = 0, bell_k = -1;
    CLI::App* bell = app.add_subcommand("bell", "Evaluate Bell polynomials");
    add_shared_flags(bell, bell_flags, /*with_series=*/false);
    bell->add_option("--args", bell_args, "Comma-separated rational arguments x_1,x_2,...")
        ->required();
    bell->add_option("--n", bell_n, "Row index n")->required();
    bell->add_option("--k", bell_k, "Partial index k (omit for the whole row)");

    SharedFlags prob_flags;
    std::string prob_dist, prob_kind = "both";
    int prob_nmax = -1, prob_m = -1, prob_n = -1;
    CLI::App* prob = app.add_subcommand("prob", "Probabilistic Stirling numbers and moments");
    add_shared_flags(prob, prob_flags, /*with_series=*/false);
    prob->add_option("--dist", prob_dist,
                     "Distribution: finite:v:p,v:p,... or poisson:mu")
        ->required();
    prob->add_option("--nmax", prob_nmax, "Largest triangle row (defaults to --order)");
    prob->add_option("--m", prob_m, "Number of summands for moment mode");
    prob->add_option("--n", prob_n, "Moment degree for moment mode");
    prob->add_option("--kind", prob_kind, "Which triangles to print")
        ->check(CLI::IsMember({"first", "second", "both"}))
        ->capture_default_str();

    SharedFlags ver_flags;
    std::string ver_identity, ver_lambda = "1/2", ver_family;
    int ver_nmax = -1;
    CLI::App* ver = app.add_subcommand("verify", "Check the library's identities");
    add_shared_flags(ver, ver_flags, /*with_series=*/false);
    ver->add_option("--identity", ver_identity, "Run a single named check (eq6, ..., thm4)");
    ver->add_option("--lambda", ver_lambda, "Parameter for the degenerate-family checks")
        ->capture_default_str();
    ver->add_option("--family", ver_family, "Named check family: restricted");
    ver->add_option("--nmax", ver_nmax, "Depth for the restricted checks");

    SharedFlags parse_flags;
    CLI::App* parse_cmd = app.add_subcommand("parse", "Parse and canonicalize a series expression");
    add_shared_flags(parse_cmd, parse_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e);  // --help and friends
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (tri->parsed()) return cmd_triangle(tri_flags, tri_kind, tri_nmax);
    if (pot->parsed()) return cmd_potential(pot_flags, pot_n);
    if (bell->parsed()) return cmd_bell(bell_flags, bell_args, bell_n, bell_k);
    if (prob->parsed()) return cmd_prob(prob_flags, prob_dist, prob_nmax, prob_m, prob_n, prob_kind);
    if (ver->parsed()) return cmd_verify(ver_flags, ver_identity, ver_lambda, ver_family, ver_nmax);
    if (parse_cmd->parsed()) return cmd_parse(parse_flags);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bstirling::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bstirling::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const bstirling::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
