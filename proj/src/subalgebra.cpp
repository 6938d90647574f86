#include "derlie/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "derlie/errors.hpp"
#include "derlie/modrank.hpp"

namespace derlie {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// f involves only the variables flagged in `allowed`.
bool only_vars(const Polynomial& f, const std::vector<bool>& allowed) {
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.dimension(); ++i)
            if (m[i] > 0 && !allowed[i]) return false;
    return true;
}

bool member_ms(const Derivation& d, std::size_t s) {
    for (std::size_t i = 0; i < s; ++i)
        if (!in_prefix_ring(d[i], s)) return false;
    return true;
}

bool member_sn(const Derivation& d) {
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        if (!in_prefix_ring(d[i], i + 1)) return false;
        if (d[i].degree_in(i) > 1) return false;
    }
    return true;
}

}  // namespace

SubalgebraSpec SubalgebraSpec::full(std::size_t n) {
    require(n >= 1, "W_n needs n >= 1");
    return SubalgebraSpec(FullWn{n});
}

SubalgebraSpec SubalgebraSpec::ms(std::size_t n, std::size_t s) {
    require(s >= 1 && s + 1 <= n, "m_s(n) needs 1 <= s <= n-1");
    return SubalgebraSpec(Ms{n, s});
}

SubalgebraSpec SubalgebraSpec::is(std::size_t n, std::size_t s) {
    require(s >= 1 && s + 1 <= n, "I_s(n) needs 1 <= s <= n-1");
    return SubalgebraSpec(Is{n, s});
}

SubalgebraSpec SubalgebraSpec::sn(std::size_t n) {
    require(n >= 1, "s_n needs n >= 1");
    return SubalgebraSpec(Sn{n});
}

SubalgebraSpec SubalgebraSpec::mi(std::size_t n, std::vector<std::size_t> index_set) {
    std::sort(index_set.begin(), index_set.end());
    require(std::adjacent_find(index_set.begin(), index_set.end()) == index_set.end(),
            "m_I index set has duplicates");
    require(!index_set.empty() && index_set.size() < n, "m_I needs a nonempty proper index set");
    require(index_set.back() < n, "m_I index out of range");
    return SubalgebraSpec(MI{n, std::move(index_set)});
}

SubalgebraSpec SubalgebraSpec::ms1s2(std::size_t n, std::size_t s1, std::size_t s2) {
    require(s1 >= 1 && s1 < s2 && s2 < n, "m_{s1,s2} needs 1 <= s1 < s2 < n");
    return SubalgebraSpec(Ms1s2{n, s1, s2});
}

SubalgebraSpec SubalgebraSpec::square_module(std::vector<Derivation> gens) {
    require(!gens.empty(), "square module needs generators");
    const std::size_t n = gens.front().dimension();
    require(gens.size() == n, "square module needs exactly n generators");
    require(!determinant(PolyMatrix::from_derivations(gens)).is_zero(),
            "square module generators are singular");
    return SubalgebraSpec(SquareModule{std::move(gens)});
}

std::size_t SubalgebraSpec::dimension() const {
    return std::visit(overloaded{
                          [](const IlProduct& k) { return k.algebra_gens.front().dimension(); },
                          [](const SquareModule& k) { return k.gens.front().dimension(); },
                          [](const auto& k) { return k.n; },
                      },
                      kind_);
}

bool member(const SubalgebraSpec& spec, const Derivation& d) {
    if (d.dimension() != spec.dimension()) throw DimensionMismatch(spec.dimension(), d.dimension());
    return std::visit(
        overloaded{
            [](const SubalgebraSpec::FullWn&) { return true; },
            [&](const SubalgebraSpec::Ms& k) { return member_ms(d, k.s); },
            [&](const SubalgebraSpec::Is& k) {
                for (std::size_t i = 0; i < k.s; ++i)
                    if (!d[i].is_zero()) return false;
                return true;
            },
            [&](const SubalgebraSpec::Sn&) { return member_sn(d); },
            [&](const SubalgebraSpec::MI& k) {
                std::vector<bool> allowed(k.n, false);
                for (auto i : k.index_set) allowed[i] = true;
                for (auto i : k.index_set)
                    if (!only_vars(d[i], allowed)) return false;
                return true;
            },
            [&](const SubalgebraSpec::Ms1s2& k) {
                for (std::size_t i = 0; i < k.s2; ++i)
                    if (!in_prefix_ring(d[i], i < k.s1 ? k.s1 : k.s2)) return false;
                return true;
            },
            [](const SubalgebraSpec::IlProduct&) -> bool {
                throw UnsupportedQuery("membership in an I*L product is not decidable here");
            },
            [&](const SubalgebraSpec::SquareModule& k) { return square_module_membership(k.gens, d); },
        },
        spec.kind());
}

Derivation project_quotient(const Derivation& d, std::size_t s) {
    const std::size_t n = d.dimension();
    if (s < 1 || s >= n) throw std::invalid_argument("quotient needs 1 <= s <= n-1");
    if (!member_ms(d, s)) throw std::invalid_argument("derivation is not in m_s");
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < s; ++i) coeffs.push_back(change_dimension(d[i], s));
    return Derivation(std::move(coeffs));
}

std::vector<Derivation> generators(const SubalgebraSpec& spec, unsigned degree_bound) {
    if (std::holds_alternative<SubalgebraSpec::IlProduct>(spec.kind()) ||
        std::holds_alternative<SubalgebraSpec::SquareModule>(spec.kind()))
        throw UnsupportedQuery("generator enumeration is only defined for coordinate subalgebras");
    const std::size_t n = spec.dimension();
    const auto monomials = monomials_up_to(n, degree_bound);
    std::vector<Derivation> out;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& m : monomials) {
            Derivation g = Derivation::single(Polynomial::term(m), j);
            if (member(spec, g)) out.push_back(std::move(g));
        }
    return out;
}

SubalgebraSpec il_product(std::vector<Polynomial> ideal_gens, std::vector<Derivation> algebra_gens) {
    require(!ideal_gens.empty() && !algebra_gens.empty(), "I*L needs nonempty generator lists");
    const std::size_t n = algebra_gens.front().dimension();
    for (const auto& d : algebra_gens)
        if (d.dimension() != n) throw DimensionMismatch(n, d.dimension());
    for (const auto& h : ideal_gens)
        if (h.dimension() != n) throw DimensionMismatch(n, h.dimension());

    std::vector<Derivation> module_gens;
    for (const auto& h : ideal_gens)
        for (const auto& d : algebra_gens) module_gens.push_back(h * d);
    return SubalgebraSpec(SubalgebraSpec::IlProduct{std::move(ideal_gens), std::move(algebra_gens),
                                                    std::move(module_gens)});
}

ContainmentReport containment_sample(const SubalgebraSpec& inner, const SubalgebraSpec& outer,
                                     unsigned degree_bound) {
    for (auto& g : generators(inner, degree_bound))
        if (!member(outer, g)) return {false, std::move(g)};
    return {true, std::nullopt};
}

}  // namespace derlie
