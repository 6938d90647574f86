#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Polynomial of dimension n is an element of Q[x_0, ..., x_{n-1}] (printed
// 1-based as x1..xn). Terms are kept in a std::map ordered by graded
// lexicographic order with x_0 > x_1 > ... > x_{n-1}; the last entry is the
// leading term. Zero coefficients are never stored, so the zero polynomial
// is the empty map.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace derlie {

using Rational = mpq_class;

class Monomial {
public:
    explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
    explicit Monomial(std::vector<unsigned> exponents);

    static Monomial variable(std::size_t dimension, std::size_t var);

    std::size_t dimension() const { return exps_.size(); }
    unsigned operator[](std::size_t var) const { return exps_[var]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned degree() const { return degree_; }

    Monomial operator*(const Monomial& other) const;
    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    Monomial cofactor(const Monomial& other) const;
    Monomial with_exponent(std::size_t var, unsigned e) const;

    /// Graded lexicographic order.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Polynomial(std::size_t dimension);

    static Polynomial constant(std::size_t dimension, const Rational& c);
    static Polynomial variable(std::size_t dimension, std::size_t var);
    static Polynomial term(const Monomial& m, const Rational& c = 1);

    std::size_t dimension() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Highest exponent of `var` over all terms (0 for the zero polynomial).
    unsigned degree_in(std::size_t var) const;
    /// Coefficient of `m` (zero if absent).
    Rational coefficient(const Monomial& m) const;
    /// Leading term in graded-lex order; requires !is_zero().
    const std::pair<const Monomial, Rational>& leading_term() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial operator-() const;

    bool operator==(const Polynomial& q) const { return dim_ == q.dim_ && terms_ == q.terms_; }

private:
    std::size_t dim_;
    Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Formal antiderivative in `var` with zero integration constant:
/// x^a -> x^a * x_var / (a_var + 1).
Polynomial antiderivative(const Polynomial& p, std::size_t var);

struct HomogeneousPart {
    int degree;
    Polynomial part;
    bool operator==(const HomogeneousPart&) const = default;
};

/// Nonzero homogeneous parts, strictly increasing in degree, summing to p.
std::vector<HomogeneousPart> homogeneous_parts(const Polynomial& p);

bool is_homogeneous(const Polynomial& p);

bool depends_on(const Polynomial& p, std::size_t var);

/// True iff p only involves variables x_0..x_{k-1}.
bool in_prefix_ring(const Polynomial& p, std::size_t k);

/// Exact quotient p / q, or nullopt if q does not divide p.
/// Throws std::invalid_argument when q is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Substitutes x_j -> x_{sigma[j]}. sigma must be a permutation of 0..n-1.
Polynomial rename_variables(const Polynomial& p, std::span<const std::size_t> sigma);

/// Reinterprets p in `dimension` variables. Shrinking requires p to involve
/// only the first `dimension` variables.
Polynomial change_dimension(const Polynomial& p, std::size_t dimension);

/// All monomials of total degree <= max_degree in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t dimension, unsigned max_degree);

}  // namespace derlie
