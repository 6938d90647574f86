#include "derlie/certificate.hpp"

#include <stdexcept>

namespace derlie {

ExprPtr make_leaf(Derivation d, LeafClaim claim) {
    return std::make_shared<const BracketExpr>(BracketExpr{BracketExpr::Leaf{std::move(d), std::move(claim)}});
}

ExprPtr make_bracket(ExprPtr left, ExprPtr right) {
    if (!left || !right) throw std::invalid_argument("bracket with a missing operand");
    return std::make_shared<const BracketExpr>(BracketExpr{BracketExpr::Bracket{std::move(left), std::move(right)}});
}

ExprPtr make_lincomb(std::vector<std::pair<Rational, ExprPtr>> terms) {
    if (terms.empty()) throw std::invalid_argument("empty linear combination");
    for (const auto& [c, e] : terms)
        if (!e) throw std::invalid_argument("linear combination with a missing term");
    return std::make_shared<const BracketExpr>(BracketExpr{BracketExpr::LinComb{std::move(terms)}});
}

bool same_expr(const BracketExpr& a, const BracketExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (auto* la = std::get_if<BracketExpr::Leaf>(&a.node)) {
        const auto& lb = std::get<BracketExpr::Leaf>(b.node);
        return la->derivation == lb.derivation && la->claim == lb.claim;
    }
    if (auto* ba = std::get_if<BracketExpr::Bracket>(&a.node)) {
        const auto& bb = std::get<BracketExpr::Bracket>(b.node);
        return same_expr(*ba->left, *bb.left) && same_expr(*ba->right, *bb.right);
    }
    const auto& ca = std::get<BracketExpr::LinComb>(a.node);
    const auto& cb = std::get<BracketExpr::LinComb>(b.node);
    if (ca.terms.size() != cb.terms.size()) return false;
    for (std::size_t i = 0; i < ca.terms.size(); ++i)
        if (ca.terms[i].first != cb.terms[i].first || !same_expr(*ca.terms[i].second, *cb.terms[i].second))
            return false;
    return true;
}

Derivation evaluate_expr(const BracketExpr& expr) {
    if (auto* leaf = std::get_if<BracketExpr::Leaf>(&expr.node)) return leaf->derivation;
    if (auto* br = std::get_if<BracketExpr::Bracket>(&expr.node))
        return bracket(evaluate_expr(*br->left), evaluate_expr(*br->right));
    const auto& comb = std::get<BracketExpr::LinComb>(expr.node);
    if (comb.terms.empty()) throw std::invalid_argument("empty linear combination");
    Derivation sum = evaluate_expr(*comb.terms.front().second) * comb.terms.front().first;
    for (std::size_t i = 1; i < comb.terms.size(); ++i)
        sum += evaluate_expr(*comb.terms[i].second) * comb.terms[i].first;
    return sum;
}

std::string to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::Membership: return "membership";
        case FailureKind::Context: return "context";
        case FailureKind::Given: return "given";
        case FailureKind::Evaluation: return "evaluation";
        case FailureKind::Discipline: return "discipline";
        case FailureKind::Malformed: return "malformed";
    }
    return "unknown";
}

}  // namespace derlie
