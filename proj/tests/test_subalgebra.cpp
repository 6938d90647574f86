#include <algorithm>
#include <vector>

#include "doctest.h"

#include "derlie/errors.hpp"
#include "derlie/subalgebra.hpp"
#include "support/printing.hpp"
#include "support/random.hpp"

using namespace derlie;
using derlie::testing::D;
using derlie::testing::P;
using derlie::testing::Random;
using derlie::testing::S;

namespace {

// Independent of depends_on: a coefficient is free of x_i iff d/dx_i kills it.
bool free_of(const Polynomial& f, std::size_t i) { return partial_derivative(f, i).is_zero(); }

bool ms_oracle(const Derivation& d, std::size_t s) {
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = s; i < d.dimension(); ++i)
            if (!free_of(d[j], i)) return false;
    return true;
}

bool sn_oracle(const Derivation& d) {
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        if (!partial_derivative(partial_derivative(d[i], i), i).is_zero()) return false;
        for (std::size_t k = i + 1; k < d.dimension(); ++k)
            if (!free_of(d[i], k)) return false;
    }
    return true;
}

std::vector<SubalgebraSpec> closure_specs() {
    return {S("ms(3,1)"), S("ms(4,2)"), S("is(3,1)"), S("sn(3)"), S("mi(4;1,3)"), S("ms2(4,1,3)"), S("wn(2)")};
}

}  // namespace

TEST_SUITE("subalgebras") {

TEST_CASE("membership examples") {
    CHECK_FALSE(member(S("ms(2,1)"), D("x2*d1", 2)));
    CHECK(member(S("ms(2,1)"), D("x1*d1 + x1*x2*d2", 2)));
    CHECK(member(S("sn(2)"), D("x1^2*d2", 2)));
    CHECK_FALSE(member(S("sn(2)"), D("x1^2*d1", 2)));
    CHECK(member(S("sn(2)"), D("x1*x2*d2 + x1*d1 + d2", 2)));
    CHECK_FALSE(member(S("sn(2)"), D("x2^2*d2", 2)));
    CHECK(member(S("is(3,1)"), D("x1^5*d2 + x3*d3", 3)));
    CHECK_FALSE(member(S("is(3,1)"), D("d1", 3)));
    CHECK(member(S("mi(3;1,3)"), D("x3*d1 + x1*x3^2*d3 + x2*d2", 3)));
    CHECK_FALSE(member(S("mi(3;1,3)"), D("x2*d3", 3)));
    CHECK(member(S("ms2(3,1,2)"), D("x1*d1 + x1*x2*d2 + x3*d3", 3)));
    CHECK_FALSE(member(S("ms2(3,1,2)"), D("x3*d2", 3)));
    CHECK(member(S("wn(2)"), D("x2^7*d1", 2)));
    CHECK_THROWS_AS(member(S("ms(2,1)"), D("d1", 3)), DimensionMismatch);
}

TEST_CASE("factories validate their bounds") {
    CHECK_THROWS_AS(SubalgebraSpec::ms(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::ms(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::is(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::ms1s2(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::mi(3, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::mi(3, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::mi(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::square_module({D("d1", 2), D("2*d1", 2)}), std::invalid_argument);
    CHECK_THROWS_AS(SubalgebraSpec::square_module({D("d1", 2)}), std::invalid_argument);
    CHECK(SubalgebraSpec::mi(3, {2, 0}) == SubalgebraSpec::mi(3, {0, 2}));
}

TEST_CASE("square module membership through the spec") {
    const SubalgebraSpec sq = SubalgebraSpec::square_module({D("x1*d1", 2), D("d2", 2)});
    CHECK(member(sq, D("x1^2*d1 + x2*d2", 2)));
    CHECK_FALSE(member(sq, D("d1", 2)));
}

TEST_CASE("membership agrees with derivative-based oracles") {
    Random r(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + r.index(3);
        const std::size_t s = 1 + r.index(n - 1);
        // Sparse derivations hit both answers often.
        const Derivation d = r.derivation(n, 2, 1);
        CHECK(member(SubalgebraSpec::ms(n, s), d) == ms_oracle(d, s));
        CHECK(member(SubalgebraSpec::sn(n), d) == sn_oracle(d));
        bool low_zero = true;
        for (std::size_t j = 0; j < s; ++j) low_zero = low_zero && d[j].is_zero();
        CHECK(member(SubalgebraSpec::is(n, s), d) == (ms_oracle(d, s) && low_zero));
    }
}

TEST_CASE("the Euler derivation lies in every m_s") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t s = 1; s < n; ++s) CHECK(member(SubalgebraSpec::ms(n, s), euler(n)));
}

TEST_CASE("named sets are closed under the bracket") {
    Random r(42);
    for (const auto& spec : closure_specs())
        for (int trial = 0; trial < 100; ++trial) {
            const Derivation a = r.member_of(spec, 3);
            const Derivation b = r.member_of(spec, 3);
            REQUIRE(member(spec, a));
            CHECK(member(spec, bracket(a, b)));
        }
}

TEST_CASE("I_s is an ideal of m_s") {
    Random r(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + r.index(3);
        const std::size_t s = 1 + r.index(n - 1);
        const Derivation a = r.member_of(SubalgebraSpec::ms(n, s), 3);
        const Derivation b = r.member_of(SubalgebraSpec::is(n, s), 3);
        CHECK(member(SubalgebraSpec::is(n, s), bracket(a, b)));
    }
}

TEST_CASE("quotient projection") {
    CHECK(project_quotient(D("x1*d1 + x1*x2*d2", 2), 1) == D("x1*d1", 1));
    CHECK(project_quotient(D("x3*d2 + x1*d3", 3), 1) == Derivation(1));
    CHECK(project_quotient(D("x1*x2*d2 + d1 + x3*d3", 3), 2) == D("x1*x2*d2 + d1", 2));
    CHECK_THROWS_AS(project_quotient(D("x2*d1", 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(project_quotient(D("d1", 2), 2), std::invalid_argument);
}

TEST_CASE("quotient projection is a homomorphism with kernel I_s") {
    Random r(44);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + r.index(3);
        const std::size_t s = 1 + r.index(n - 1);
        const Derivation a = r.member_of(SubalgebraSpec::ms(n, s), 3);
        const Derivation b = r.member_of(SubalgebraSpec::ms(n, s), 3);
        CHECK(project_quotient(bracket(a, b), s) == bracket(project_quotient(a, s), project_quotient(b, s)));
        CHECK(project_quotient(r.member_of(SubalgebraSpec::is(n, s), 3), s).is_zero());
    }
}

TEST_CASE("generators") {
    CHECK(generators(S("is(2,1)"), 0) == std::vector<Derivation>{D("d2", 2)});
    CHECK(generators(S("wn(2)"), 0) == std::vector<Derivation>{D("d1", 2), D("d2", 2)});

    auto ms = generators(S("ms(2,1)"), 1);
    std::vector<Derivation> expected{D("d1", 2), D("x1*d1", 2), D("d2", 2), D("x1*d2", 2), D("x2*d2", 2)};
    CHECK(ms.size() == expected.size());
    for (const auto& e : expected) CHECK(std::count(ms.begin(), ms.end(), e) == 1);

    CHECK(generators(S("wn(3)"), 2).size() == 3 * 10);
    CHECK_THROWS_AS(generators(S("il(2;x1;d1)"), 1), UnsupportedQuery);
}

TEST_CASE("IL products") {
    const SubalgebraSpec il = il_product({P("x1", 2)}, {D("d1", 2), D("d2", 2)});
    const auto& mod = std::get<SubalgebraSpec::IlProduct>(il.kind()).module_gens;
    CHECK(mod == std::vector<Derivation>{D("x1*d1", 2), D("x1*d2", 2)});
    CHECK(bracket(mod[0], mod[1]) == D("x1*d2", 2));

    const std::vector<Derivation> algebra{D("x1*d1", 2), D("x2^2*d2 + d1", 2)};
    const SubalgebraSpec unit = il_product({P("1", 2)}, algebra);
    CHECK(std::get<SubalgebraSpec::IlProduct>(unit.kind()).module_gens == algebra);

    CHECK_THROWS_AS(member(il, D("x1*d1", 2)), UnsupportedQuery);
    CHECK_THROWS_AS(il_product({}, {D("d1", 2)}), std::invalid_argument);
    CHECK_THROWS_AS(il_product({P("x1", 2)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(il_product({P("x1", 3)}, {D("d1", 2)}), std::invalid_argument);
}

TEST_CASE("sampled containment") {
    CHECK(containment_sample(S("ms2(3,1,2)"), S("ms(3,1)"), 2).holds);
    const ContainmentReport rev = containment_sample(S("ms(3,1)"), S("ms2(3,1,2)"), 2);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.counterexample);
    CHECK(*rev.counterexample == D("x3*d2", 3));
    CHECK(containment_sample(S("sn(3)"), S("sn(3)"), 3).holds);
    CHECK(containment_sample(S("is(3,1)"), S("ms(3,1)"), 3).holds);
}

TEST_CASE("conjugation carries m_s onto m_I") {
    Random r(45);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + r.index(3);
        const std::size_t s = 1 + r.index(n - 1);
        const auto sigma = r.permutation(n);
        const SubalgebraSpec mi = SubalgebraSpec::mi(n, {sigma.begin(), sigma.begin() + static_cast<long>(s)});
        const Derivation d = r.coin() ? r.member_of(mi, 2) : r.derivation(n, 2, 1);
        CHECK(member(mi, d) == member(SubalgebraSpec::ms(n, s), permute_variables(d, inverse_permutation(sigma))));
    }
}

}  // TEST_SUITE
