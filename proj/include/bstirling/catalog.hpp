#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bstirling/egf.hpp"
#include "bstirling/rational.hpp"

namespace bstirling {

enum class ParamKind { Integer, Rational };

/// One named series family.  All parameters of an entry share a kind.
struct CatalogEntry {
    std::string name;
    int min_params;
    int max_params;  // -1: unbounded
    ParamKind param_kind;
    std::string summary;
    std::function<EgfSeries(const std::vector<Rational>&, int)> builder;
};

/// The closed list of families, in display order.
const std::vector<CatalogEntry>& catalog_entries();

/// nullptr when the name is not in the catalog.
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Build a catalog series at the given truncation order.
EgfSeries build(const std::string& name, const std::vector<Rational>& params, int order);

/// Expression tree over the catalog: an atom or one of the two inner
/// operations applied to subexpressions.
class SeriesExpr {
public:
    enum class Tag { Atom, Circ, Diamond };

    static SeriesExpr atom(std::string name, std::vector<Rational> params);
    static SeriesExpr circ_node(SeriesExpr left, SeriesExpr right);
    static SeriesExpr diamond_node(SeriesExpr left, SeriesExpr right);

    Tag tag() const { return tag_; }
    const std::string& name() const;
    const std::vector<Rational>& params() const;
    const SeriesExpr& left() const;
    const SeriesExpr& right() const;

private:
    SeriesExpr() = default;

    Tag tag_ = Tag::Atom;
    std::string name_;
    std::vector<Rational> params_;
    std::shared_ptr<const SeriesExpr> left_;
    std::shared_ptr<const SeriesExpr> right_;
};

/// Parse the series grammar
///   expr  := atom | 'circ' '(' expr ',' expr ')' | 'diamond' '(' expr ',' expr ')'
///   atom  := NAME ['(' param {',' param} ')']
///   param := INT ['/' INT]
/// Whitespace is insignificant; names are case-sensitive.  Catalog names,
/// arity, and parameter kinds are validated here; parameter values (such as
/// lambda != 0) are validated when the series is built.
SeriesExpr parse_series(std::string_view text);

/// Canonical text form; parse(to_string(e)) reproduces e.
std::string to_string(const SeriesExpr& e);

/// Bottom-up evaluation at the given order.
EgfSeries eval_expr(const SeriesExpr& e, int order);

}  // namespace bstirling
