#pragma once

// Engines that construct certificates. Each engine checks its own output with
// verify_certificate before returning and throws std::logic_error if the
// check fails.

#include <cstddef>
#include <optional>
#include <span>

#include "derlie/certificate.hpp"
#include "derlie/derivation.hpp"
#include "derlie/subalgebra.hpp"

namespace derlie {

/// Certificate that `target` lies in the subalgebra generated by m_s and an
/// adjoined derivation `d` outside m_s (subalgebra discipline).
///
/// The expression is built as follows:
///   1. If d is not homogeneous, isolate its lowest-degree component outside
///      m_s: subtract the lower components (members of m_s), then strip the
///      higher ones with X -> [E_n, X] - l*X and rescale.
///   2. Take the smallest j0 < s and then the smallest i0 >= s such that
///      coefficient j0 of that component h involves x_{i0}.
///   3. Apply ad(d/dx_{i0}) (deg_{x_{i0}} h_{j0} - 1) times so coefficient j0
///      becomes v0 + v1*x_{i0}.
///   4. If v1 is not a constant, apply ad(d/dx_k)^{l_k} for the graded-lex
///      largest monomial x^l of v1. The result is a linear derivation.
///   5. Bracket with x_{i0} d/dx_{i0} and drop the components of index >= s,
///      leaving x_{i0} * sum_{i<s} c_i d/dx_i with c_{j0} != 0.
///   6. [ . , x_{j0} d/dx_{j0}] / c_{j0} gives x_{i0} d/dx_{j0}.
///   7. [x_{i0} d/dx_{j0}, x_{j0} d/dx_p] = x_{i0} d/dx_p for every p < s.
///   8. f d/dx_j = [f d/dx_{i0}, x_{i0} d/dx_j] + x_{i0} (df/dx_j) d/dx_{i0}
///      for each target coefficient j < s outside P_s; everything else of the
///      target is collected in one m_s leaf.
///
/// A target already in m_s yields a single-leaf certificate. Throws
/// std::invalid_argument if s is out of range, dimensions differ, or the
/// target is outside m_s while d is inside it.
Certificate maximality_certificate(std::size_t n, std::size_t s, const Derivation& d, const Derivation& target);

/// Certificate that `target` lies in the ideal of m_s generated by a nonzero
/// d in I_s (ideal discipline): every bracket pairs a descendant of d with an
/// m_s member.
///
/// d is reduced by ad(d/dx_i) operators along a graded-lex largest monomial of
/// top total degree to a nonzero constant field sum_j c_j d/dx_j; then
/// [that, c_k^{-1} x_k d/dx_k] = d/dx_k, and
/// f d/dx_i = [-(antiderivative of f in x_k) d/dx_i, d/dx_k].
///
/// Throws std::invalid_argument if d = 0, d is not in I_s, or the target is
/// not in I_s.
Certificate minimal_ideal_certificate(std::size_t n, std::size_t s, const Derivation& d, const Derivation& target);

struct DerivedSearchResult {
    std::optional<DerivedWitness> witness;
    unsigned depth = 0;
    unsigned degree_bound = 0;
    std::size_t pool_size = 0;
    /// Bracket evaluations performed.
    std::size_t nodes = 0;
    /// The node cap stopped the search before the space was exhausted.
    bool cap_reached = false;
};

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// Searches balanced bracket trees of the given depth over the leaf pool
/// generators(spec, degree_bound) (for a SquareModule: its module
/// generators of coefficient degree <= degree_bound). Returns the first tree
/// with a nonzero value.
///
/// Levels are built bottom-up. At each node only pairs (a, b) with b earlier
/// than a in level order are tried, since [a, a] = 0 and [b, a] = -[a, b];
/// zero values are pruned and values equal up to a scalar are kept once.
/// Neither reduction changes which depths admit a nonzero tree. Without a
/// witness, the result records the bounds that were exhausted; that is not a
/// proof of solvability at this depth.
DerivedSearchResult derived_lower_bound_witness(const SubalgebraSpec& spec, unsigned depth, unsigned degree_bound,
                                                std::size_t node_cap = kDefaultNodeCap);

/// Same search over an explicit leaf pool; every leaf must be a member of spec.
DerivedSearchResult derived_lower_bound_witness(const SubalgebraSpec& spec, std::span<const Derivation> pool,
                                                unsigned depth, std::size_t node_cap = kDefaultNodeCap);

}  // namespace derlie
