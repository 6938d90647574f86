#include "derlie/witness.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "derlie/errors.hpp"
#include "derlie/text.hpp"

namespace derlie {

namespace {

// An expression together with its value, so each engine step can inspect
// what it has built so far.
struct Built {
    ExprPtr expr;
    Derivation value;
};

class Builder {
public:
    explicit Builder(SubalgebraSpec context) : context_(std::move(context)) {}

    Built member_leaf(const Derivation& d) const {
        if (!member(context_, d))
            throw std::logic_error("engine produced a non-member leaf: " + to_string(d));
        return {make_leaf(d, InSpec{context_}), d};
    }

    static Built given(const Derivation& d) { return {make_leaf(d, TheGivenD{}), d}; }

    static Built br(const Built& a, const Built& b) {
        return {make_bracket(a.expr, b.expr), bracket(a.value, b.value)};
    }

    static Built comb(const std::vector<std::pair<Rational, Built>>& terms) {
        std::vector<std::pair<Rational, ExprPtr>> parts;
        Derivation value(terms.front().second.value.dimension());
        for (const auto& [c, t] : terms) {
            parts.emplace_back(c, t.expr);
            value += t.value * c;
        }
        return {make_lincomb(std::move(parts)), std::move(value)};
    }

    const SubalgebraSpec& context() const { return context_; }

private:
    SubalgebraSpec context_;
};

Certificate checked(Certificate cert) {
    const auto report = verify_certificate(cert);
    if (!report.valid) {
        std::string why;
        for (const auto& f : report.failures) why += " [" + to_string(f.kind) + ": " + f.detail + "]";
        throw std::logic_error("engine built an invalid certificate:" + why);
    }
    return cert;
}

void check_dimensions(std::size_t n, const Derivation& d, const Derivation& target) {
    if (d.dimension() != n) throw DimensionMismatch(n, d.dimension());
    if (target.dimension() != n) throw DimensionMismatch(n, target.dimension());
}

Derivation monomial_field(std::size_t n, std::size_t coeff_var, std::size_t basis) {
    return Derivation::single(Polynomial::variable(n, coeff_var), basis);
}

// Coefficient of x_var^1 in q, as a polynomial not involving x_var.
Polynomial linear_coefficient(const Polynomial& q, std::size_t var) {
    Polynomial out(q.dimension());
    for (const auto& [m, c] : q.terms())
        if (m[var] == 1) out.add_term(m.with_exponent(var, 0), c);
    return out;
}

// Applies ad(d/dx_k)^{l_k} for k = 0..n-1 (x_0 innermost) to `cur`.
Built differentiate_along(const Builder& b, Built cur, const Monomial& l) {
    const std::size_t n = l.dimension();
    for (std::size_t k = 0; k < n; ++k)
        for (unsigned e = 0; e < l[k]; ++e) cur = Builder::br(b.member_leaf(Derivation::basis(n, k)), cur);
    return cur;
}

// Step 1 of the maximality engine: the lowest-degree homogeneous component of
// d outside m_s, expressed through d, E_n and m_s members.
Built isolate_component(const Builder& b, const Derivation& d) {
    const auto comps = homogeneous_components(d);
    std::size_t t = 0;
    while (t < comps.size() && member(b.context(), comps[t].part)) ++t;
    if (t == comps.size()) throw std::logic_error("no homogeneous component outside the context");

    Built cur = Builder::given(d);
    if (comps.size() == 1) return cur;

    Derivation lower(d.dimension());
    for (std::size_t i = 0; i < t; ++i) lower += comps[i].part;
    if (!lower.is_zero()) cur = Builder::comb({{1, cur}, {-1, b.member_leaf(lower)}});

    const Built e = b.member_leaf(euler(d.dimension()));
    Rational scale = 1;
    for (std::size_t i = comps.size(); i-- > t + 1;) {
        const int l = comps[i].degree;
        cur = Builder::comb({{1, Builder::br(e, cur)}, {-l, cur}});
        scale *= comps[t].degree - l;
    }
    if (scale != 1) cur = Builder::comb({{Rational(1 / scale), cur}});
    if (cur.value != comps[t].part) throw std::logic_error("Euler peeling did not isolate the component");
    return cur;
}

}  // namespace

Certificate maximality_certificate(std::size_t n, std::size_t s, const Derivation& d, const Derivation& target) {
    const SubalgebraSpec ms = SubalgebraSpec::ms(n, s);
    check_dimensions(n, d, target);
    Builder b(ms);

    if (member(ms, target)) return checked({target, b.member_leaf(target).expr, ms, d, Discipline::Subalgebra});
    if (member(ms, d)) throw std::invalid_argument("adjoined derivation already lies in m_s");

    // 1.
    Built cur = isolate_component(b, d);
    const Derivation h = cur.value;

    // 2.
    std::size_t j0 = s;
    std::size_t i0 = n;
    for (std::size_t j = 0; j < s && j0 == s; ++j)
        for (std::size_t i = s; i < n; ++i)
            if (depends_on(h[j], i)) {
                j0 = j;
                i0 = i;
                break;
            }
    if (j0 == s) throw std::logic_error("component outside m_s has no offending coefficient");

    // 3.
    const Built d_i0 = b.member_leaf(Derivation::basis(n, i0));
    for (unsigned k = 1; k < h[j0].degree_in(i0); ++k) cur = Builder::br(d_i0, cur);

    // 4.
    const Polynomial v1 = linear_coefficient(cur.value[j0], i0);
    if (!v1.is_constant()) cur = differentiate_along(b, cur, v1.leading_term().first);
    const Rational c = linear_coefficient(cur.value[j0], i0).coefficient(Monomial(n));
    if (c == 0) throw std::logic_error("linear coefficient vanished");

    // 5.
    cur = Builder::br(b.member_leaf(monomial_field(n, i0, i0)), cur);
    Derivation tail(n);
    for (std::size_t i = s; i < n; ++i) tail += Derivation::single(cur.value[i], i);
    if (!tail.is_zero()) cur = Builder::comb({{1, cur}, {-1, b.member_leaf(tail)}});

    // 6.
    const Built x_i0_d_j0 = Builder::comb({{Rational(1 / c), Builder::br(cur, b.member_leaf(monomial_field(n, j0, j0)))}});
    if (x_i0_d_j0.value != monomial_field(n, i0, j0)) throw std::logic_error("failed to isolate x_i0 d/dx_j0");

    // 7. and 8.
    std::vector<std::pair<Rational, Built>> terms;
    Derivation remainder = target;
    for (std::size_t j = 0; j < s; ++j) {
        if (in_prefix_ring(target[j], s)) continue;
        const Built x_i0_d_j =
            j == j0 ? x_i0_d_j0 : Builder::br(x_i0_d_j0, b.member_leaf(monomial_field(n, j0, j)));
        Built term = Builder::br(b.member_leaf(Derivation::single(target[j], i0)), x_i0_d_j);
        remainder -= term.value;
        terms.emplace_back(1, std::move(term));
    }
    if (!remainder.is_zero()) terms.emplace_back(1, b.member_leaf(remainder));
    const ExprPtr expr = terms.size() == 1 ? terms.front().second.expr : Builder::comb(terms).expr;
    return checked({target, expr, ms, d, Discipline::Subalgebra});
}

Certificate minimal_ideal_certificate(std::size_t n, std::size_t s, const Derivation& d, const Derivation& target) {
    const SubalgebraSpec ms = SubalgebraSpec::ms(n, s);
    const SubalgebraSpec is = SubalgebraSpec::is(n, s);
    check_dimensions(n, d, target);
    if (d.is_zero()) throw std::invalid_argument("ideal generator must be nonzero");
    if (!member(is, d)) throw std::invalid_argument("ideal generator is not in I_s");
    if (!member(is, target)) throw std::invalid_argument("target is not in I_s");

    Builder b(ms);
    Built cur = Builder::given(d);
    if (target == d) return checked({target, cur.expr, ms, d, Discipline::Ideal});
    if (target.is_zero()) return checked({target, Builder::comb({{0, cur}}).expr, ms, d, Discipline::Ideal});

    // Reduce to a constant field along a top-degree monomial.
    const int top = d.max_coefficient_degree();
    std::size_t k = n;
    for (std::size_t i = s; i < n && k == n; ++i)
        if (d[i].total_degree() == top) k = i;
    cur = differentiate_along(b, cur, d[k].leading_term().first);
    const Rational ck = cur.value[k].coefficient(Monomial(n));
    if (ck == 0 || cur.value.max_coefficient_degree() != 0)
        throw std::logic_error("reduction did not reach a constant field");

    const Derivation d_k = Derivation::basis(n, k);
    if (cur.value != d_k)
        cur = Builder::br(cur, b.member_leaf(Derivation::single(Polynomial::variable(n, k) * Rational(1 / ck), k)));
    if (cur.value != d_k) throw std::logic_error("failed to reach d/dx_k");
    if (target == d_k) return checked({target, cur.expr, ms, d, Discipline::Ideal});

    std::vector<std::pair<Rational, Built>> terms;
    for (std::size_t i = s; i < n; ++i) {
        if (target[i].is_zero()) continue;
        const Built anti = b.member_leaf(Derivation::single(-antiderivative(target[i], k), i));
        terms.emplace_back(1, Builder::br(anti, cur));
    }
    const ExprPtr expr = terms.size() == 1 ? terms.front().second.expr : Builder::comb(terms).expr;
    return checked({target, expr, ms, d, Discipline::Ideal});
}

namespace {

// Text of d scaled so its first nonzero coefficient has leading coefficient 1.
std::string projective_key(const Derivation& d) {
    for (std::size_t i = 0; i < d.dimension(); ++i)
        if (!d[i].is_zero()) return to_string(d * Rational(1 / d[i].leading_term().second));
    return "0";
}

}  // namespace

DerivedSearchResult derived_lower_bound_witness(const SubalgebraSpec& spec, std::span<const Derivation> pool,
                                                unsigned depth, std::size_t node_cap) {
    if (depth < 1) throw std::invalid_argument("witness depth must be at least 1");
    DerivedSearchResult result;
    result.depth = depth;
    result.pool_size = pool.size();

    std::vector<Built> level;
    std::unordered_set<std::string> seen;
    for (const auto& g : pool) {
        if (!member(spec, g)) throw std::invalid_argument("leaf pool element outside the spec: " + to_string(g));
        if (!g.is_zero() && seen.insert(projective_key(g)).second)
            level.push_back({make_leaf(g, InSpec{spec}), g});
    }

    for (unsigned lvl = 1; lvl <= depth && !level.empty(); ++lvl) {
        std::vector<Built> next;
        seen.clear();
        for (std::size_t a = 0; a < level.size(); ++a)
            for (std::size_t b = 0; b < a; ++b) {
                if (result.nodes >= node_cap) {
                    result.cap_reached = true;
                    return result;
                }
                ++result.nodes;
                Built v = Builder::br(level[a], level[b]);
                if (v.value.is_zero()) continue;
                if (lvl == depth) {
                    result.witness = DerivedWitness{spec, depth, v.expr};
                    return result;
                }
                if (seen.insert(projective_key(v.value)).second) next.push_back(std::move(v));
            }
        level = std::move(next);
    }
    return result;
}

DerivedSearchResult derived_lower_bound_witness(const SubalgebraSpec& spec, unsigned depth, unsigned degree_bound,
                                                std::size_t node_cap) {
    std::vector<Derivation> pool;
    if (const auto* sq = std::get_if<SubalgebraSpec::SquareModule>(&spec.kind())) {
        for (const auto& g : sq->gens)
            if (g.max_coefficient_degree() <= static_cast<int>(degree_bound)) pool.push_back(g);
    } else {
        pool = generators(spec, degree_bound);
    }
    auto result = derived_lower_bound_witness(spec, pool, depth, node_cap);
    result.degree_bound = degree_bound;
    return result;
}

}  // namespace derlie
