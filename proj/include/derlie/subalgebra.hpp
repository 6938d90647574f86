#pragma once

// Symbolic descriptors of the named subalgebras of W_n together with their
// membership predicates. All coordinate-defined families are decided exactly
// by inspecting which variables each coefficient involves.
//
//   FullWn(n)        all of W_n
//   Ms(n, s)         coefficients 0..s-1 lie in Q[x_0..x_{s-1}], the rest are free
//   Is(n, s)         coefficients 0..s-1 vanish (an ideal of Ms(n, s))
//   Sn(n)            coefficient i lies in P_i + x_i * P_i, P_i = Q[x_0..x_{i-1}]
//   MI(n, I)         coefficients indexed by I lie in Q[x_i : i in I]
//   Ms1s2(n, s1, s2) coefficients 0..s1-1 in P_{s1}, s1..s2-1 in P_{s2}
//   IlProduct        the module I*L for an ideal I and algebra L (no membership test)
//   SquareModule     the module spanned by n derivations with det != 0

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/polynomial.hpp"

namespace derlie {

class SubalgebraSpec {
public:
    struct FullWn {
        std::size_t n;
        bool operator==(const FullWn&) const = default;
    };
    struct Ms {
        std::size_t n, s;
        bool operator==(const Ms&) const = default;
    };
    struct Is {
        std::size_t n, s;
        bool operator==(const Is&) const = default;
    };
    struct Sn {
        std::size_t n;
        bool operator==(const Sn&) const = default;
    };
    struct MI {
        std::size_t n;
        std::vector<std::size_t> index_set;  // sorted, 0-based
        bool operator==(const MI&) const = default;
    };
    struct Ms1s2 {
        std::size_t n, s1, s2;
        bool operator==(const Ms1s2&) const = default;
    };
    struct IlProduct {
        std::vector<Polynomial> ideal_gens;
        std::vector<Derivation> algebra_gens;
        /// {h * D : h in ideal_gens, D in algebra_gens}, ideal-major order.
        std::vector<Derivation> module_gens;
        bool operator==(const IlProduct&) const = default;
    };
    struct SquareModule {
        std::vector<Derivation> gens;
        bool operator==(const SquareModule&) const = default;
    };

    using Kind = std::variant<FullWn, Ms, Is, Sn, MI, Ms1s2, IlProduct, SquareModule>;

    // Factories validate index bounds (std::invalid_argument on failure).
    static SubalgebraSpec full(std::size_t n);
    static SubalgebraSpec ms(std::size_t n, std::size_t s);
    static SubalgebraSpec is(std::size_t n, std::size_t s);
    static SubalgebraSpec sn(std::size_t n);
    /// `index_set` is 0-based, nonempty and proper; duplicates are rejected.
    static SubalgebraSpec mi(std::size_t n, std::vector<std::size_t> index_set);
    static SubalgebraSpec ms1s2(std::size_t n, std::size_t s1, std::size_t s2);
    /// Requires exactly n derivations whose coefficient matrix is nonsingular.
    static SubalgebraSpec square_module(std::vector<Derivation> gens);

    const Kind& kind() const { return kind_; }
    std::size_t dimension() const;

    bool operator==(const SubalgebraSpec&) const = default;

private:
    friend SubalgebraSpec il_product(std::vector<Polynomial>, std::vector<Derivation>);
    explicit SubalgebraSpec(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

/// Exact membership. Throws UnsupportedQuery for IlProduct and
/// DimensionMismatch when dimensions differ.
bool member(const SubalgebraSpec& spec, const Derivation& d);

/// Quotient map m_s -> W_s: keeps coefficients 0..s-1 and reinterprets them
/// in s variables. Throws std::invalid_argument if d is not in Ms(n, s).
Derivation project_quotient(const Derivation& d, std::size_t s);

/// All monomial members x^a d/dx_j with |a| <= degree_bound, ordered by basis
/// index j and then by ascending graded-lex monomial. Supported for FullWn,
/// Ms, Is, Sn, MI and Ms1s2; UnsupportedQuery otherwise.
std::vector<Derivation> generators(const SubalgebraSpec& spec, unsigned degree_bound);

/// I*L with module generators h*D. Throws std::invalid_argument on empty or
/// mixed-dimension input.
SubalgebraSpec il_product(std::vector<Polynomial> ideal_gens, std::vector<Derivation> algebra_gens);

struct ContainmentReport {
    bool holds;
    std::optional<Derivation> counterexample;
};

/// Checks member(outer, g) for every g in generators(inner, degree_bound).
ContainmentReport containment_sample(const SubalgebraSpec& inner, const SubalgebraSpec& outer,
                                     unsigned degree_bound);

}  // namespace derlie
