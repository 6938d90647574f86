// Trusted checker for certificates and derived-length witnesses. Relies only
// on bracket evaluation and the membership predicates.

#include <optional>

#include "derlie/certificate.hpp"
#include "derlie/errors.hpp"
#include "derlie/text.hpp"

namespace derlie {

namespace {

// Pure: built only from context members, hence itself a context member.
// Descendant: lies in the ideal generated by the adjoined element.
enum class Role { Pure, Descendant };

class CertificateChecker {
public:
    explicit CertificateChecker(const Certificate& cert) : cert_(cert) {}

    VerificationReport run() {
        if (!cert_.expr) {
            fail(FailureKind::Malformed, "certificate has no expression");
            return finish();
        }
        const Role root = walk(*cert_.expr);
        if (cert_.discipline == Discipline::Ideal && root != Role::Descendant)
            fail(FailureKind::Discipline, "ideal certificate does not descend from the adjoined element");

        try {
            const Derivation value = evaluate_expr(*cert_.expr);
            if (value != cert_.target)
                fail(FailureKind::Evaluation,
                     "expression evaluates to " + to_string(value) + ", target is " + to_string(cert_.target));
        } catch (const std::exception& e) {
            fail(FailureKind::Malformed, e.what());
        }
        return finish();
    }

private:
    void fail(FailureKind kind, std::string detail) { report_.failures.push_back({kind, std::move(detail)}); }

    VerificationReport finish() {
        report_.valid = report_.failures.empty();
        return std::move(report_);
    }

    Role check_leaf(const BracketExpr::Leaf& leaf) {
        if (std::holds_alternative<TheGivenD>(leaf.claim)) {
            if (!cert_.given)
                fail(FailureKind::Given, "leaf claims the adjoined element but the certificate has none");
            else if (leaf.derivation != *cert_.given)
                fail(FailureKind::Given, "leaf " + to_string(leaf.derivation) + " is not the adjoined element");
            return Role::Descendant;
        }
        const auto& spec = std::get<InSpec>(leaf.claim).spec;
        if (spec != cert_.context)
            fail(FailureKind::Context, "leaf claims " + to_string(spec) + ", context is " + to_string(cert_.context));
        try {
            if (!member(spec, leaf.derivation))
                fail(FailureKind::Membership, to_string(leaf.derivation) + " is not in " + to_string(spec));
        } catch (const std::exception& e) {
            fail(FailureKind::Membership, e.what());
        }
        return Role::Pure;
    }

    Role walk(const BracketExpr& e) {
        if (auto* leaf = std::get_if<BracketExpr::Leaf>(&e.node)) return check_leaf(*leaf);

        const bool ideal = cert_.discipline == Discipline::Ideal;
        if (auto* br = std::get_if<BracketExpr::Bracket>(&e.node)) {
            if (!br->left || !br->right) {
                fail(FailureKind::Malformed, "bracket with a missing operand");
                return Role::Pure;
            }
            const Role l = walk(*br->left);
            const Role r = walk(*br->right);
            if (l == Role::Pure && r == Role::Pure) return Role::Pure;
            if (ideal && l == Role::Descendant && r == Role::Descendant)
                fail(FailureKind::Discipline, "bracket pairs two ideal elements instead of an ideal element and a member");
            return Role::Descendant;
        }

        const auto& comb = std::get<BracketExpr::LinComb>(e.node);
        bool any_pure = false;
        bool any_desc = false;
        for (const auto& [c, term] : comb.terms) {
            if (!term) {
                fail(FailureKind::Malformed, "linear combination with a missing term");
                continue;
            }
            (walk(*term) == Role::Pure ? any_pure : any_desc) = true;
        }
        if (!any_desc) return Role::Pure;
        if (ideal && any_pure)
            fail(FailureKind::Discipline, "linear combination mixes ideal elements with bare members");
        return Role::Descendant;
    }

    const Certificate& cert_;
    VerificationReport report_;
};

// Depth of a perfectly balanced pure-bracket tree, or nullopt.
std::optional<unsigned> balanced_depth(const BracketExpr& e) {
    if (std::holds_alternative<BracketExpr::Leaf>(e.node)) return 0u;
    const auto* br = std::get_if<BracketExpr::Bracket>(&e.node);
    if (!br || !br->left || !br->right) return std::nullopt;
    auto l = balanced_depth(*br->left);
    auto r = balanced_depth(*br->right);
    if (!l || !r || *l != *r) return std::nullopt;
    return *l + 1;
}

bool leaves_in_spec(const BracketExpr& e, const SubalgebraSpec& spec) {
    if (auto* leaf = std::get_if<BracketExpr::Leaf>(&e.node)) {
        const auto* claim = std::get_if<InSpec>(&leaf->claim);
        return claim && claim->spec == spec && member(spec, leaf->derivation);
    }
    const auto& br = std::get<BracketExpr::Bracket>(e.node);
    return leaves_in_spec(*br.left, spec) && leaves_in_spec(*br.right, spec);
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert) { return CertificateChecker(cert).run(); }

bool verify_derived_witness(const DerivedWitness& w) {
    if (!w.tree || w.depth < 1) return false;
    try {
        auto depth = balanced_depth(*w.tree);
        if (!depth || *depth != w.depth) return false;
        if (!leaves_in_spec(*w.tree, w.spec)) return false;
        return !evaluate_expr(*w.tree).is_zero();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace derlie
