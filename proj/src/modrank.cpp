#include "derlie/modrank.hpp"

#include <random>
#include <utility>

#include "derlie/errors.hpp"

namespace derlie {

namespace {

std::size_t check_family(std::span<const Derivation> gens) {
    if (gens.empty()) throw std::invalid_argument("empty derivation family");
    const std::size_t n = gens.front().dimension();
    for (const auto& g : gens)
        if (g.dimension() != n) throw DimensionMismatch(n, g.dimension());
    return n;
}

// Nonzero entry in column c at or below row `from` whose leading monomial is
// graded-lex smallest; ties go to the lower row index.
std::optional<std::size_t> choose_pivot(const PolyMatrix& m, std::size_t from, std::size_t c) {
    std::optional<std::size_t> best;
    for (std::size_t r = from; r < m.rows(); ++r) {
        const Polynomial& e = m(r, c);
        if (e.is_zero()) continue;
        if (!best || e.leading_term().first < m(*best, c).leading_term().first) best = r;
    }
    return best;
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& q) {
    auto r = divide_exact(p, q);
    if (!r) throw std::logic_error("fraction-free elimination produced an inexact division");
    return std::move(*r);
}

struct Elimination {
    RankReport report;
    bool odd_swaps = false;
};

Elimination eliminate(PolyMatrix m) {
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    bool odd_swaps = false;
    std::vector<std::size_t> row_ids(m.rows());
    for (std::size_t i = 0; i < row_ids.size(); ++i) row_ids[i] = i;

    Polynomial prev = Polynomial::constant(m.dimension(), 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        auto p = choose_pivot(m, r, c);
        if (!p) continue;
        if (*p != r) {
            m.swap_rows(*p, r);
            std::swap(row_ids[*p], row_ids[r]);
            odd_swaps = !odd_swaps;
        }
        const Polynomial pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Polynomial factor = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = exact_quotient(pivot * m(i, j) - factor * m(r, j), prev);
            m(i, c) = Polynomial(m.dimension());
        }
        pivot_rows.push_back(row_ids[r]);
        pivot_cols.push_back(c);
        prev = pivot;
        ++r;
    }
    return {RankReport{r, std::move(pivot_rows), std::move(pivot_cols), std::move(prev)}, odd_swaps};
}

std::size_t numeric_rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

PolyMatrix square_matrix(std::span<const Derivation> gens) {
    const std::size_t n = check_family(gens);
    if (gens.size() != n)
        throw std::invalid_argument("expected exactly " + std::to_string(n) + " generators, got " +
                                    std::to_string(gens.size()));
    return PolyMatrix::from_derivations(gens);
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dimension)
    : rows_(rows), cols_(cols), dim_(dimension), entries_(rows * cols, Polynomial(dimension)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be nonempty");
}

PolyMatrix PolyMatrix::from_derivations(std::span<const Derivation> gens) {
    const std::size_t n = check_family(gens);
    PolyMatrix m(gens.size(), n, n);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = gens[r][c];
    return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RankReport rank(const PolyMatrix& m) { return eliminate(m).report; }

RankReport rank(std::span<const Derivation> gens) { return rank(PolyMatrix::from_derivations(gens)); }

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    auto e = eliminate(m);
    if (e.report.rank < m.rows()) return Polynomial(m.dimension());
    return e.odd_swaps ? -e.report.final_pivot : e.report.final_pivot;
}

std::size_t rank_numeric_oracle(std::span<const Derivation> gens, unsigned trials, std::uint64_t seed) {
    const std::size_t n = check_family(gens);
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    std::size_t best = 0;
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Rational> point(n);
        for (auto& x : point) x = coord(rng);
        std::vector<std::vector<Rational>> a(gens.size(), std::vector<Rational>(n));
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) a[r][c] = evaluate(gens[r][c], point);
        best = std::max(best, numeric_rank(std::move(a)));
    }
    return best;
}

Polynomial conductor(std::span<const Derivation> gens) {
    Polynomial h = determinant(square_matrix(gens));
    if (h.is_zero()) throw NoConductor("generators have rank below n; no conductor exists");
    return h;
}

std::optional<std::vector<Polynomial>> module_coordinates(std::span<const Derivation> gens,
                                                          const Derivation& d) {
    const PolyMatrix a = square_matrix(gens);
    const std::size_t n = a.rows();
    if (d.dimension() != n) throw DimensionMismatch(n, d.dimension());
    const Polynomial det = determinant(a);
    if (det.is_zero()) throw std::invalid_argument("singular generator matrix");

    std::vector<Polynomial> h;
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix replaced = a;
        for (std::size_t c = 0; c < n; ++c) replaced(j, c) = d[c];
        auto q = divide_exact(determinant(replaced), det);
        if (!q) return std::nullopt;
        h.push_back(std::move(*q));
    }

    Derivation check(n);
    for (std::size_t j = 0; j < n; ++j) check += h[j] * gens[j];
    if (check != d) throw std::logic_error("Cramer solution failed to reproduce the derivation");
    return h;
}

bool square_module_membership(std::span<const Derivation> gens, const Derivation& d) {
    return module_coordinates(gens, d).has_value();
}

}  // namespace derlie
