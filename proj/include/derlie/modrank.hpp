#pragma once

// Module-theoretic computations on families of derivations, viewed as rows of
// a polynomial matrix. Rank is the rank over the rational-function field,
// obtained by fraction-free (Bareiss) elimination so every intermediate entry
// stays a polynomial: each entry after step k equals a (k+1)x(k+1) minor of the
// input, and the division by the previous pivot is exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/polynomial.hpp"

namespace derlie {

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dimension);

    /// One row per derivation, one column per basis element d/dx_i.
    static PolyMatrix from_derivations(std::span<const Derivation> gens);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dimension() const { return dim_; }

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

struct RankReport {
    std::size_t rank = 0;
    /// Indices into the input rows / columns, in elimination order.
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    /// Last fraction-free pivot: a nonzero minor (up to sign) of size `rank`.
    /// The empty minor 1 when rank is 0.
    Polynomial final_pivot;
};

class NoConductor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RankReport rank(const PolyMatrix& m);
RankReport rank(std::span<const Derivation> gens);

Polynomial determinant(const PolyMatrix& m);

/// Maximum numeric rank of the coefficient matrix over `trials` random
/// integer points drawn uniformly from [-1000, 1000]^n. Never exceeds the
/// symbolic rank.
std::size_t rank_numeric_oracle(std::span<const Derivation> gens, unsigned trials, std::uint64_t seed);

/// det of the n x n coefficient matrix of n derivations of rank n. Every
/// h * d/dx_i then lies in the module they generate, since
/// adj(A) * A = det(A) * Id.
Polynomial conductor(std::span<const Derivation> gens);

/// Polynomial coordinates h with sum_j h_j * gens_j = d, or nullopt when the
/// unique rational-function solution is not polynomial. Solved by Cramer's
/// rule. Throws std::invalid_argument if gens is not square and nonsingular.
std::optional<std::vector<Polynomial>> module_coordinates(std::span<const Derivation> gens,
                                                          const Derivation& d);

bool square_module_membership(std::span<const Derivation> gens, const Derivation& d);

}  // namespace derlie
