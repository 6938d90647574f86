#include "derlie/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "derlie/errors.hpp"

namespace derlie {

namespace {

void check_var(const Polynomial& p, std::size_t var) {
    if (var >= p.dimension()) {
        throw IndexOutOfRange("variable index " + std::to_string(var) +
                              " out of range for dimension " + std::to_string(p.dimension()));
    }
}

void check_same_dimension(const Polynomial& p, const Polynomial& q) {
    if (p.dimension() != q.dimension()) throw DimensionMismatch(p.dimension(), q.dimension());
}

void compositions(std::size_t n, unsigned degree, std::vector<unsigned>& prefix,
                  std::vector<Monomial>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        prefix.push_back(e);
        compositions(n, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t dimension, std::size_t var) {
    std::vector<unsigned> e(dimension, 0);
    e.at(var) = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::cofactor(const Monomial& other) const {
    std::vector<unsigned> e(other.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t var, unsigned e) const {
    std::vector<unsigned> copy(exps_);
    copy.at(var) = e;
    return Monomial(std::move(copy));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return exps_ <=> other.exps_;
}

Polynomial::Polynomial(std::size_t dimension) : dim_(dimension) {
    if (dimension == 0) throw std::invalid_argument("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
    Polynomial p(dimension);
    p.add_term(Monomial(dimension), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t var) {
    Polynomial p(dimension);
    p.add_term(Monomial::variable(dimension, var), 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.dimension());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.dimension() != dim_) throw DimensionMismatch(dim_, m.dimension());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_dimension(*this, q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_dimension(*this, q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same_dimension(p, q);
    Polynomial r(p.dim_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r = Polynomial::constant(p.dimension(), 1);
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    check_var(p, var);
    Polynomial r(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m[var];
        if (e == 0) continue;
        r.add_term(m.with_exponent(var, e - 1), c * e);
    }
    return r;
}

Polynomial antiderivative(const Polynomial& p, std::size_t var) {
    check_var(p, var);
    Polynomial r(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m[var] + 1;
        r.add_term(m.with_exponent(var, e), c / e);
    }
    return r;
}

std::vector<HomogeneousPart> homogeneous_parts(const Polynomial& p) {
    std::vector<HomogeneousPart> parts;
    // Terms are already sorted by total degree.
    for (const auto& [m, c] : p.terms()) {
        const int d = static_cast<int>(m.degree());
        if (parts.empty() || parts.back().degree != d) parts.push_back({d, Polynomial(p.dimension())});
        parts.back().part.add_term(m, c);
    }
    return parts;
}

bool is_homogeneous(const Polynomial& p) {
    if (p.is_zero()) return true;
    return p.terms().begin()->first.degree() == p.terms().rbegin()->first.degree();
}

bool depends_on(const Polynomial& p, std::size_t var) {
    check_var(p, var);
    return std::any_of(p.terms().begin(), p.terms().end(),
                       [var](const auto& t) { return t.first[var] > 0; });
}

bool in_prefix_ring(const Polynomial& p, std::size_t k) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = k; i < m.dimension(); ++i)
            if (m[i] > 0) return false;
    return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    check_same_dimension(p, q);
    const auto& [lead_m, lead_c] = q.leading_term();
    Polynomial quotient(p.dimension());
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!lead_m.divides(rm)) return std::nullopt;
        Polynomial step = Polynomial::term(lead_m.cofactor(rm), rc / lead_c);
        quotient += step;
        rem -= step * q;
    }
    return quotient;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.dimension()) throw DimensionMismatch(p.dimension(), point.size());
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (std::size_t i = 0; i < m.dimension(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) value *= point[i];
        sum += value;
    }
    return sum;
}

Polynomial rename_variables(const Polynomial& p, std::span<const std::size_t> sigma) {
    if (sigma.size() != p.dimension()) throw DimensionMismatch(p.dimension(), sigma.size());
    Polynomial r(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(m.dimension(), 0);
        for (std::size_t j = 0; j < m.dimension(); ++j) e[sigma[j]] = m[j];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial change_dimension(const Polynomial& p, std::size_t dimension) {
    if (dimension < p.dimension() && !in_prefix_ring(p, dimension))
        throw std::invalid_argument("polynomial involves variables beyond the target dimension");
    Polynomial r(dimension);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(dimension, 0);
        for (std::size_t i = 0; i < std::min(dimension, m.dimension()); ++i) e[i] = m[i];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::vector<Monomial> monomials_up_to(std::size_t dimension, unsigned max_degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> prefix;
    for (unsigned d = 0; d <= max_degree; ++d) compositions(dimension, d, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace derlie
