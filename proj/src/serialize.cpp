#include "derlie/serialize.hpp"

#include "derlie/text.hpp"

namespace derlie {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

json expr_to_json(const BracketExpr& expr) {
    if (auto* leaf = std::get_if<BracketExpr::Leaf>(&expr.node)) {
        json j = {{"kind", "leaf"}, {"derivation", to_string(leaf->derivation)}};
        if (auto* in = std::get_if<InSpec>(&leaf->claim)) {
            j["claim"] = "in_spec";
            j["spec"] = to_string(in->spec);
        } else {
            j["claim"] = "given";
        }
        return j;
    }
    if (auto* br = std::get_if<BracketExpr::Bracket>(&expr.node))
        return {{"kind", "bracket"}, {"left", expr_to_json(*br->left)}, {"right", expr_to_json(*br->right)}};
    json terms = json::array();
    for (const auto& [c, e] : std::get<BracketExpr::LinComb>(expr.node).terms)
        terms.push_back({{"scalar", to_string(c)}, {"expr", expr_to_json(*e)}});
    return {{"kind", "lincomb"}, {"terms", terms}};
}

ExprPtr expr_from_json(const json& j, std::size_t n) {
    const std::string kind = string_field(j, "kind");
    if (kind == "leaf") {
        Derivation d = parse_derivation(string_field(j, "derivation"), n);
        const std::string claim = string_field(j, "claim");
        if (claim == "given") return make_leaf(std::move(d), TheGivenD{});
        if (claim == "in_spec") return make_leaf(std::move(d), InSpec{parse_spec(string_field(j, "spec"))});
        throw FormatError("unknown leaf claim '" + claim + "'");
    }
    if (kind == "bracket") return make_bracket(expr_from_json(field(j, "left"), n), expr_from_json(field(j, "right"), n));
    if (kind == "lincomb") {
        const json& terms = field(j, "terms");
        if (!terms.is_array() || terms.empty()) throw FormatError("lincomb needs a nonempty 'terms' array");
        std::vector<std::pair<Rational, ExprPtr>> out;
        for (const auto& t : terms) out.emplace_back(parse_rational(string_field(t, "scalar")), expr_from_json(field(t, "expr"), n));
        return make_lincomb(std::move(out));
    }
    throw FormatError("unknown expression kind '" + kind + "'");
}

json certificate_to_json(const Certificate& cert) {
    return {
        {"kind", "certificate"},
        {"discipline", cert.discipline == Discipline::Ideal ? "ideal" : "subalgebra"},
        {"n", cert.context.dimension()},
        {"context", to_string(cert.context)},
        {"given", cert.given ? json(to_string(*cert.given)) : json(nullptr)},
        {"target", to_string(cert.target)},
        {"expr", expr_to_json(*cert.expr)},
    };
}

Certificate certificate_from_json(const json& j) {
    if (string_field(j, "kind") != "certificate") throw FormatError("not a certificate document");
    SubalgebraSpec context = parse_spec(string_field(j, "context"));
    const std::size_t n = context.dimension();
    if (j.contains("n") && j.at("n") != n) throw FormatError("'n' disagrees with the context spec");

    const std::string discipline = string_field(j, "discipline");
    if (discipline != "ideal" && discipline != "subalgebra") throw FormatError("unknown discipline '" + discipline + "'");

    std::optional<Derivation> given;
    if (j.contains("given") && !j.at("given").is_null()) given = parse_derivation(string_field(j, "given"), n);

    return {parse_derivation(string_field(j, "target"), n), expr_from_json(field(j, "expr"), n), std::move(context),
            std::move(given), discipline == "ideal" ? Discipline::Ideal : Discipline::Subalgebra};
}

json witness_to_json(const DerivedWitness& w) {
    json j = {{"kind", "derived_witness"}, {"spec", to_string(w.spec)}, {"depth", w.depth}, {"tree", expr_to_json(*w.tree)}};
    j["value"] = to_string(evaluate_expr(*w.tree));
    return j;
}

DerivedWitness witness_from_json(const json& j) {
    if (string_field(j, "kind") != "derived_witness") throw FormatError("not a derived witness document");
    SubalgebraSpec spec = parse_spec(string_field(j, "spec"));
    const json& depth = field(j, "depth");
    if (!depth.is_number_unsigned()) throw FormatError("'depth' must be a non-negative integer");
    ExprPtr tree = expr_from_json(field(j, "tree"), spec.dimension());
    return {std::move(spec), depth.get<unsigned>(), std::move(tree)};
}

json rank_report_to_json(const RankReport& r) {
    json rows = json::array();
    json cols = json::array();
    for (auto i : r.pivot_rows) rows.push_back(i + 1);
    for (auto i : r.pivot_cols) cols.push_back(i + 1);
    return {{"rank", r.rank}, {"pivot_rows", rows}, {"pivot_cols", cols}, {"final_pivot", to_string(r.final_pivot)}};
}

}  // namespace derlie
