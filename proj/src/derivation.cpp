#include "derlie/derivation.hpp"

#include <set>
#include <stdexcept>

#include "derlie/errors.hpp"

namespace derlie {

namespace {

void check_same_dimension(const Derivation& a, const Derivation& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

std::set<int> degrees_present(const Derivation& d) {
    std::set<int> out;
    for (const auto& f : d.coeffs())
        for (const auto& [m, c] : f.terms()) out.insert(static_cast<int>(m.degree()) - 1);
    return out;
}

}  // namespace

Derivation::Derivation(std::size_t dimension) {
    if (dimension == 0) throw std::invalid_argument("derivation dimension must be positive");
    coeffs_.assign(dimension, Polynomial(dimension));
}

Derivation::Derivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("derivation dimension must be positive");
    for (const auto& f : coeffs_)
        if (f.dimension() != coeffs_.size()) throw DimensionMismatch(coeffs_.size(), f.dimension());
}

Derivation Derivation::basis(std::size_t dimension, std::size_t var) {
    return single(Polynomial::constant(dimension, 1), var);
}

Derivation Derivation::single(const Polynomial& f, std::size_t var) {
    if (var >= f.dimension())
        throw IndexOutOfRange("basis index " + std::to_string(var) + " out of range");
    Derivation d(f.dimension());
    d.coeffs_[var] = f;
    return d;
}

bool Derivation::is_zero() const {
    for (const auto& f : coeffs_)
        if (!f.is_zero()) return false;
    return true;
}

int Derivation::max_coefficient_degree() const {
    int d = -1;
    for (const auto& f : coeffs_) d = std::max(d, f.total_degree());
    return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
    check_same_dimension(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
    check_same_dimension(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
    for (auto& f : coeffs_) f *= c;
    return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
    if (f.dimension() != d.dimension()) throw DimensionMismatch(d.dimension(), f.dimension());
    Derivation r(d.dimension());
    for (std::size_t i = 0; i < d.dimension(); ++i) r.coeffs_[i] = f * d.coeffs_[i];
    return r;
}

Derivation Derivation::operator-() const {
    Derivation r(*this);
    for (auto& f : r.coeffs_) f = -f;
    return r;
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    if (d.dimension() != f.dimension()) throw DimensionMismatch(d.dimension(), f.dimension());
    Polynomial r(f.dimension());
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        if (d[i].is_zero()) continue;
        r += d[i] * partial_derivative(f, i);
    }
    return r;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
    check_same_dimension(d1, d2);
    std::vector<Polynomial> out;
    out.reserve(d1.dimension());
    for (std::size_t j = 0; j < d1.dimension(); ++j) out.push_back(apply(d1, d2[j]) - apply(d2, d1[j]));
    return Derivation(std::move(out));
}

Derivation euler(std::size_t n) {
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(Polynomial::variable(n, i));
    return Derivation(std::move(coeffs));
}

std::vector<HomogeneousComponent> homogeneous_components(const Derivation& d) {
    std::vector<HomogeneousComponent> out;
    for (int deg : degrees_present(d)) {
        std::vector<Polynomial> coeffs;
        for (const auto& f : d.coeffs()) {
            Polynomial part(d.dimension());
            for (const auto& [m, c] : f.terms())
                if (static_cast<int>(m.degree()) == deg + 1) part.add_term(m, c);
            coeffs.push_back(std::move(part));
        }
        out.push_back({deg, Derivation(std::move(coeffs))});
    }
    return out;
}

bool is_homogeneous(const Derivation& d) { return degrees_present(d).size() <= 1; }

EulerPeel peel_via_euler(const Derivation& d) {
    const auto degrees = degrees_present(d);
    if (degrees.empty()) return {};
    if (degrees.size() == 1) return {{{*degrees.begin(), d}}, 0};

    const int top = *degrees.rbegin();
    const Derivation reduced = bracket(euler(d.dimension()), d) - Rational(top) * d;
    EulerPeel lower = peel_via_euler(reduced);

    EulerPeel result;
    result.steps = lower.steps + 1;
    Derivation rest = d;
    for (auto& comp : lower.components) {
        Derivation part = comp.part * Rational(Rational(1) / (comp.degree - top));
        rest -= part;
        result.components.push_back({comp.degree, std::move(part)});
    }
    result.components.push_back({top, std::move(rest)});
    return result;
}

std::vector<HomogeneousComponent> peel_components_via_euler(const Derivation& d) {
    return peel_via_euler(d).components;
}

Derivation ad_power(const Derivation& a, const Derivation& d, unsigned k) {
    check_same_dimension(a, d);
    Derivation r = d;
    for (unsigned i = 0; i < k; ++i) r = bracket(a, r);
    return r;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> sigma) {
    std::vector<std::size_t> inv(sigma.size(), sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        if (sigma[j] >= sigma.size() || inv[sigma[j]] != sigma.size())
            throw std::invalid_argument("not a permutation");
        inv[sigma[j]] = j;
    }
    return inv;
}

Derivation permute_variables(const Derivation& d, std::span<const std::size_t> sigma) {
    if (sigma.size() != d.dimension()) throw DimensionMismatch(d.dimension(), sigma.size());
    inverse_permutation(sigma);  // validates
    std::vector<Polynomial> out(d.dimension(), Polynomial(d.dimension()));
    for (std::size_t j = 0; j < d.dimension(); ++j) out[sigma[j]] = rename_variables(d[j], sigma);
    return Derivation(std::move(out));
}

}  // namespace derlie
