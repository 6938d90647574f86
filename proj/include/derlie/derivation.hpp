#pragma once

// Derivations of Q[x_0..x_{n-1}]: D = sum_i f_i d/dx_i, stored as the
// coefficient vector (f_0, ..., f_{n-1}). W_n is a free module over the
// polynomial ring with basis d/dx_i, so this representation is unique.

#include <cstddef>
#include <span>
#include <vector>

#include "derlie/polynomial.hpp"

namespace derlie {

class Derivation {
public:
    /// The zero derivation of the given dimension.
    explicit Derivation(std::size_t dimension);
    explicit Derivation(std::vector<Polynomial> coeffs);

    /// d/dx_var
    static Derivation basis(std::size_t dimension, std::size_t var);
    /// f * d/dx_var
    static Derivation single(const Polynomial& f, std::size_t var);

    std::size_t dimension() const { return coeffs_.size(); }
    const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// Largest total degree among the coefficients, -1 for zero.
    int max_coefficient_degree() const;

    Derivation& operator+=(const Derivation& other);
    Derivation& operator-=(const Derivation& other);
    Derivation& operator*=(const Rational& c);

    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(Derivation a, const Rational& c) { return a *= c; }
    friend Derivation operator*(const Rational& c, Derivation a) { return a *= c; }
    /// Module action of the polynomial ring.
    friend Derivation operator*(const Polynomial& f, const Derivation& d);
    Derivation operator-() const;

    bool operator==(const Derivation&) const = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// D(f) = sum_i coeffs[i] * df/dx_i
Polynomial apply(const Derivation& d, const Polynomial& f);

/// [D1, D2]_j = D1(coeffs2[j]) - D2(coeffs1[j])
Derivation bracket(const Derivation& d1, const Derivation& d2);

/// Euler derivation sum_j x_j d/dx_j.
Derivation euler(std::size_t n);

/// A homogeneous piece of the standard grading: every nonzero coefficient of
/// `part` is homogeneous of total degree degree + 1, so degree >= -1.
struct HomogeneousComponent {
    int degree;
    Derivation part;
    bool operator==(const HomogeneousComponent&) const = default;
};

/// Direct regrouping of coefficient terms by total degree.
std::vector<HomogeneousComponent> homogeneous_components(const Derivation& d);

/// True iff d is zero or lies in a single graded piece.
bool is_homogeneous(const Derivation& d);

struct EulerPeel {
    std::vector<HomogeneousComponent> components;
    /// Number of D -> [E_n, D] - l*D reductions performed.
    std::size_t steps = 0;
};

/// Recovers the homogeneous components of d using only brackets with the
/// Euler derivation and rational linear combinations.
///
/// The top degree l is stripped by D' = [E_n, D] - l*D, which multiplies each
/// lower component of degree m by (m - l). The lower components are peeled
/// from D' recursively and rescaled; the top component is what remains of D.
/// Only the set of degrees present is read off directly.
EulerPeel peel_via_euler(const Derivation& d);

std::vector<HomogeneousComponent> peel_components_via_euler(const Derivation& d);

/// k-fold nested bracket [A, [A, ... [A, D]]].
Derivation ad_power(const Derivation& a, const Derivation& d, unsigned k);

/// Pushforward under x_j -> x_{sigma[j]}: coefficient sigma[j] of the result
/// is coeffs[j] with its variables renamed by sigma.
Derivation permute_variables(const Derivation& d, std::span<const std::size_t> sigma);

/// Inverse of a permutation given as an image vector.
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> sigma);

}  // namespace derlie
