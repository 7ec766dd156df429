#include "bstirling/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

#include "bstirling/errors.hpp"

namespace bstirling {

namespace {

long integer_param(const std::string& name, const Rational& value) {
    if (!value.is_integer())
        throw BadArity("family '" + name + "' expects integer parameters, got " + value.str());
    return value.to_long();
}

long restricted_size(const std::string& name, const std::vector<Rational>& params) {
    long m = integer_param(name, params[0]);
    if (m < 1) throw BadArity("family '" + name + "' needs a size parameter >= 1");
    return m;
}

Rational lambda_param(const std::string& name, const std::vector<Rational>& params) {
    if (params[0].is_zero()) throw ZeroLambda(name);
    return params[0];
}

EgfSeries build_identity(int order) {
    EgfSeries s = one_series(order);
    if (order >= 1) s.set_coeff(1, Rational(1));
    return s;
}

EgfSeries build_blambda(const Rational& lambda, int order) {
    // (1 + lambda z)^(1/lambda) = exp((1/lambda) log(1 + lambda z))
    EgfSeries base = one_series(order);
    if (order >= 1) base.set_coeff(1, lambda);
    return exp_series(scale(log_series(base), Rational(1) / lambda));
}

EgfSeries build_clambda(const Rational& lambda, int order) {
    // exp((1/lambda)((1+z)^lambda - 1))
    EgfSeries inner = shift_constant(pow_scalar(build_identity(order), lambda), Rational(-1));
    return exp_series(scale(inner, Rational(1) / lambda));
}

const std::vector<CatalogEntry>& entries_impl() {
    static const std::vector<CatalogEntry> entries = {
        {"I", 0, 0, ParamKind::Rational, "1 + z",
         [](const std::vector<Rational>&, int order) { return build_identity(order); }},
        {"E", 0, 0, ParamKind::Rational, "e^z",
         [](const std::vector<Rational>&, int order) {
             EgfSeries s(order);
             for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(1));
             return s;
         }},
        {"Blambda", 1, 1, ParamKind::Rational, "(1 + lambda z)^(1/lambda)",
         [](const std::vector<Rational>& p, int order) {
             return build_blambda(lambda_param("Blambda", p), order);
         }},
        {"Clambda", 1, 1, ParamKind::Rational, "exp((1/lambda)((1+z)^lambda - 1))",
         [](const std::vector<Rational>& p, int order) {
             return build_clambda(lambda_param("Clambda", p), order);
         }},
        {"cosh", 0, 0, ParamKind::Rational, "cosh z (even block sizes)",
         [](const std::vector<Rational>&, int order) {
             EgfSeries s(order);
             for (int n = 0; n <= order; n += 2) s.set_coeff(n, Rational(1));
             return s;
         }},
        {"geom", 0, 0, ParamKind::Rational, "1/(1 - z) (ordered lists / Lah)",
         [](const std::vector<Rational>&, int order) {
             EgfSeries s(order);
             for (int n = 0; n <= order; ++n)
                 s.set_coeff(n, Rational(factorial(static_cast<unsigned long>(n))));
             return s;
         }},
        {"involution", 0, 0, ParamKind::Rational, "1 + z + z^2/2 (involutions)",
         [](const std::vector<Rational>&, int order) {
             EgfSeries s = one_series(order);
             if (order >= 1) s.set_coeff(1, Rational(1));
             if (order >= 2) s.set_coeff(2, Rational(1));
             return s;
         }},
        {"pairing", 0, 0, ParamKind::Rational, "1 + z^2/2 (perfect matchings)",
         [](const std::vector<Rational>&, int order) {
             EgfSeries s = one_series(order);
             if (order >= 2) s.set_coeff(2, Rational(1));
             return s;
         }},
        {"Rle", 1, 1, ParamKind::Integer, "1 + sum_{i<=m} z^i/i! (blocks of size <= m)",
         [](const std::vector<Rational>& p, int order) {
             long m = restricted_size("Rle", p);
             EgfSeries s = one_series(order);
             for (int n = 1; n <= order && n <= m; ++n) s.set_coeff(n, Rational(1));
             return s;
         }},
        {"Rge", 1, 1, ParamKind::Integer, "1 + sum_{i>=m} z^i/i! (blocks of size >= m)",
         [](const std::vector<Rational>& p, int order) {
             long m = restricted_size("Rge", p);
             EgfSeries s = one_series(order);
             for (int n = static_cast<int>(m); n <= order; ++n)
                 if (n >= 1) s.set_coeff(n, Rational(1));
             return s;
         }},
        {"Ple", 1, 1, ParamKind::Integer, "1 + sum_{i<=m} z^i/i (cycles of length <= m)",
         [](const std::vector<Rational>& p, int order) {
             long m = restricted_size("Ple", p);
             EgfSeries s = one_series(order);
             for (int n = 1; n <= order && n <= m; ++n)
                 s.set_coeff(n, Rational(factorial(static_cast<unsigned long>(n - 1))));
             return s;
         }},
        {"Pge", 1, 1, ParamKind::Integer, "1 + sum_{i>=m} z^i/i (cycles of length >= m)",
         [](const std::vector<Rational>& p, int order) {
             long m = restricted_size("Pge", p);
             EgfSeries s = one_series(order);
             for (int n = std::max(1, static_cast<int>(m)); n <= order; ++n)
                 s.set_coeff(n, Rational(factorial(static_cast<unsigned long>(n - 1))));
             return s;
         }},
        {"bellargs", 1, -1, ParamKind::Rational, "1 + sum x_m z^m/m! (Bell arguments)",
         [](const std::vector<Rational>& p, int order) {
             EgfSeries s = one_series(order);
             for (std::size_t m = 1; m <= p.size() && static_cast<int>(m) <= order; ++m)
                 s.set_coeff(static_cast<int>(m), p[m - 1]);
             return s;
         }},
        {"custom", 1, -1, ParamKind::Rational, "series from an explicit coefficient list",
         [](const std::vector<Rational>& p, int order) {
             if (!p[0].is_one())
                 throw NotInClassB("custom series must start with coefficient 1");
             EgfSeries s(order);
             for (std::size_t i = 0; i < p.size() && static_cast<int>(i) <= order; ++i)
                 s.set_coeff(static_cast<int>(i), p[i]);
             s.set_coeff(0, Rational(1));
             return s;
         }},
    };
    return entries;
}

void check_arity(const CatalogEntry& entry, std::size_t count, std::size_t offset = 0) {
    bool ok = count >= static_cast<std::size_t>(entry.min_params) &&
              (entry.max_params < 0 || count <= static_cast<std::size_t>(entry.max_params));
    if (!ok) {
        std::string expected =
            entry.max_params < 0
                ? "at least " + std::to_string(entry.min_params)
                : (entry.min_params == entry.max_params
                       ? std::to_string(entry.min_params)
                       : std::to_string(entry.min_params) + ".." + std::to_string(entry.max_params));
        throw BadArity("family '" + entry.name + "' takes " + expected + " parameter(s), got " +
                           std::to_string(count),
                       offset);
    }
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() { return entries_impl(); }

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : entries_impl())
        if (e.name == name) return &e;
    return nullptr;
}

EgfSeries build(const std::string& name, const std::vector<Rational>& params, int order) {
    const CatalogEntry* entry = find_catalog_entry(name);
    if (entry == nullptr) throw UnknownName(name);
    check_arity(*entry, params.size());
    if (entry->param_kind == ParamKind::Integer)
        for (const Rational& p : params) integer_param(entry->name, p);
    return entry->builder(params, order);
}

SeriesExpr SeriesExpr::atom(std::string name, std::vector<Rational> params) {
    SeriesExpr e;
    e.tag_ = Tag::Atom;
    e.name_ = std::move(name);
    e.params_ = std::move(params);
    return e;
}

SeriesExpr SeriesExpr::circ_node(SeriesExpr left, SeriesExpr right) {
    SeriesExpr e;
    e.tag_ = Tag::Circ;
    e.left_ = std::make_shared<const SeriesExpr>(std::move(left));
    e.right_ = std::make_shared<const SeriesExpr>(std::move(right));
    return e;
}

SeriesExpr SeriesExpr::diamond_node(SeriesExpr left, SeriesExpr right) {
    SeriesExpr e = circ_node(std::move(left), std::move(right));
    e.tag_ = Tag::Diamond;
    return e;
}

const std::string& SeriesExpr::name() const {
    if (tag_ != Tag::Atom) throw Error("name() called on a non-atom expression");
    return name_;
}

const std::vector<Rational>& SeriesExpr::params() const {
    if (tag_ != Tag::Atom) throw Error("params() called on a non-atom expression");
    return params_;
}

const SeriesExpr& SeriesExpr::left() const {
    if (tag_ == Tag::Atom) throw Error("left() called on an atom");
    return *left_;
}

const SeriesExpr& SeriesExpr::right() const {
    if (tag_ == Tag::Atom) throw Error("right() called on an atom");
    return *right_;
}

namespace {

struct Token {
    enum class Type { Name, Int, LParen, RParen, Comma, Slash, End };
    Type type;
    std::string text;
    std::size_t offset;  // 0-based byte position in the input
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::Type::End, "end of input", start};
        char c = text_[pos_];
        if (c == '(') return ++pos_, Token{Token::Type::LParen, "(", start};
        if (c == ')') return ++pos_, Token{Token::Type::RParen, ")", start};
        if (c == ',') return ++pos_, Token{Token::Type::Comma, ",", start};
        if (c == '/') return ++pos_, Token{Token::Type::Slash, "/", start};
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Type::Name, std::string(text_.substr(start, pos_ - start)), start};
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t digits_start = pos_;
            if (c == '-' || c == '+') ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(start + 1, std::string(1, c), "expected digits after sign");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Type::Int, std::string(text_.substr(digits_start, pos_ - digits_start)),
                    start};
        }
        throw SyntaxError(start + 1, std::string(1, c), "unexpected character");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    SeriesExpr parse() {
        SeriesExpr e = parse_expr();
        if (current_.type != Token::Type::End)
            throw SyntaxError(offset1(), current_.text, "trailing input after expression");
        return e;
    }

private:
    void advance() { current_ = lexer_.next(); }

    std::size_t offset1() const { return current_.offset + 1; }

    Token expect(Token::Type type, const std::string& what) {
        if (current_.type != type)
            throw SyntaxError(offset1(), current_.text, "expected " + what);
        Token t = current_;
        advance();
        return t;
    }

    SeriesExpr parse_expr() {
        if (current_.type != Token::Type::Name)
            throw SyntaxError(offset1(), current_.text, "expected a series expression");
        if (current_.text == "circ" || current_.text == "diamond") {
            bool is_circ = current_.text == "circ";
            advance();
            expect(Token::Type::LParen, "'('");
            SeriesExpr left = parse_expr();
            expect(Token::Type::Comma, "','");
            SeriesExpr right = parse_expr();
            expect(Token::Type::RParen, "')'");
            return is_circ ? SeriesExpr::circ_node(std::move(left), std::move(right))
                           : SeriesExpr::diamond_node(std::move(left), std::move(right));
        }
        return parse_atom();
    }

    SeriesExpr parse_atom() {
        Token name = expect(Token::Type::Name, "a family name");
        const CatalogEntry* entry = find_catalog_entry(name.text);
        if (entry == nullptr) throw UnknownName(name.text, name.offset + 1);
        std::vector<Rational> params;
        if (current_.type == Token::Type::LParen) {
            advance();
            params.push_back(parse_param(*entry));
            while (current_.type == Token::Type::Comma) {
                advance();
                params.push_back(parse_param(*entry));
            }
            expect(Token::Type::RParen, "')'");
        }
        check_arity(*entry, params.size(), name.offset + 1);
        return SeriesExpr::atom(name.text, std::move(params));
    }

    Rational parse_param(const CatalogEntry& entry) {
        Token num = expect(Token::Type::Int, "a parameter");
        if (current_.type == Token::Type::Slash) {
            if (entry.param_kind == ParamKind::Integer)
                throw BadArity("family '" + entry.name + "' expects integer parameters",
                               num.offset + 1);
            advance();
            Token den = expect(Token::Type::Int, "a denominator");
            Rational d = Rational::from_string(den.text);
            if (d.is_zero())
                throw SyntaxError(den.offset + 1, den.text, "zero denominator");
            return Rational::from_string(num.text) / d;
        }
        return Rational::from_string(num.text);
    }

    Lexer lexer_;
    Token current_{Token::Type::End, "", 0};
};

}  // namespace

SeriesExpr parse_series(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const SeriesExpr& e) {
    switch (e.tag()) {
        case SeriesExpr::Tag::Circ:
            return "circ(" + to_string(e.left()) + "," + to_string(e.right()) + ")";
        case SeriesExpr::Tag::Diamond:
            return "diamond(" + to_string(e.left()) + "," + to_string(e.right()) + ")";
        case SeriesExpr::Tag::Atom:
        default: {
            std::string out = e.name();
            if (!e.params().empty()) {
                out += '(';
                for (std::size_t i = 0; i < e.params().size(); ++i) {
                    if (i > 0) out += ',';
                    out += e.params()[i].str();
                }
                out += ')';
            }
            return out;
        }
    }
}

EgfSeries eval_expr(const SeriesExpr& e, int order) {
    switch (e.tag()) {
        case SeriesExpr::Tag::Circ:
            return circ(eval_expr(e.left(), order), eval_expr(e.right(), order));
        case SeriesExpr::Tag::Diamond:
            return diamond(eval_expr(e.left(), order), eval_expr(e.right(), order));
        case SeriesExpr::Tag::Atom:
        default:
            return build(e.name(), e.params(), order);
    }
}

}  // namespace bstirling
