#pragma once

// Bracket expressions over concrete derivations, with a membership claim on
// every leaf, and the independent checker that validates them.
//
// A Certificate states: `target` lies in the subalgebra generated by the
// context spec together with the adjoined derivation `given` (subalgebra
// discipline), or in the ideal of the context spec generated by `given`
// (ideal discipline). The checker trusts only `bracket` and `member`.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/subalgebra.hpp"

namespace derlie {

struct BracketExpr;
using ExprPtr = std::shared_ptr<const BracketExpr>;

/// Leaf claim: the derivation is a member of `spec`.
struct InSpec {
    SubalgebraSpec spec;
    bool operator==(const InSpec&) const = default;
};
/// Leaf claim: the derivation is the certificate's adjoined element.
struct TheGivenD {
    bool operator==(const TheGivenD&) const = default;
};
using LeafClaim = std::variant<InSpec, TheGivenD>;

struct BracketExpr {
    struct Leaf {
        Derivation derivation;
        LeafClaim claim;
    };
    struct Bracket {
        ExprPtr left;
        ExprPtr right;
    };
    struct LinComb {
        std::vector<std::pair<Rational, ExprPtr>> terms;  // nonempty
    };
    std::variant<Leaf, Bracket, LinComb> node;
};

ExprPtr make_leaf(Derivation d, LeafClaim claim);
ExprPtr make_bracket(ExprPtr left, ExprPtr right);
ExprPtr make_lincomb(std::vector<std::pair<Rational, ExprPtr>> terms);

/// Structural equality (not equality of values).
bool same_expr(const BracketExpr& a, const BracketExpr& b);

/// Leaf -> its derivation, Bracket -> bracket of children, LinComb -> the
/// rational combination. Throws DimensionMismatch on mixed leaves and
/// std::invalid_argument on an empty LinComb.
Derivation evaluate_expr(const BracketExpr& expr);

enum class Discipline { Subalgebra, Ideal };

struct Certificate {
    Derivation target;
    ExprPtr expr;
    SubalgebraSpec context;
    std::optional<Derivation> given;
    Discipline discipline = Discipline::Subalgebra;
};

enum class FailureKind {
    Membership,  // an InSpec leaf is not a member of its spec
    Context,     // an InSpec leaf names a spec other than the context
    Given,       // a TheGivenD leaf differs from the adjoined element (or none is set)
    Evaluation,  // the expression does not evaluate to the target
    Discipline,  // ideal discipline violated
    Malformed,   // evaluation failed (mixed dimensions, empty combination, ...)
};

struct VerificationFailure {
    FailureKind kind;
    std::string detail;
};

struct VerificationReport {
    bool valid = true;
    std::vector<VerificationFailure> failures;
};

/// Never throws on bad certificates; every problem is reported.
VerificationReport verify_certificate(const Certificate& cert);

/// A perfectly balanced bracket tree of the given depth whose leaves all claim
/// membership in `spec`. A nonzero value shows the depth-th derived term of
/// spec is nonzero, i.e. its derived length exceeds `depth`.
struct DerivedWitness {
    SubalgebraSpec spec;
    unsigned depth;
    ExprPtr tree;
};

bool verify_derived_witness(const DerivedWitness& w);

std::string to_string(FailureKind kind);

}  // namespace derlie
