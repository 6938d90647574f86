#include <vector>

#include "doctest.h"

#include "derlie/derivation.hpp"
#include "derlie/errors.hpp"
#include "support/printing.hpp"
#include "support/random.hpp"

using namespace derlie;
using derlie::testing::D;
using derlie::testing::P;
using derlie::testing::Random;

namespace {

// Constant-coefficient fields commute with each other.
Derivation constant_field(Random& r, std::size_t n) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::constant(n, r.coin() ? r.rational() : Rational(0)));
    return Derivation(std::move(c));
}

}  // namespace

TEST_SUITE("derlie-core") {

TEST_CASE("apply examples") {
    CHECK(apply(euler(2), P("x1^2*x2", 2)) == P("3*x1^2*x2", 2));
    CHECK(apply(Derivation::basis(2, 0), P("x2", 2)).is_zero());
    CHECK(apply(D("x1*d1", 1), P("x1^3", 1)) == P("3*x1^3", 1));
}

TEST_CASE("bracket examples") {
    CHECK(bracket(D("d1", 2), D("d2", 2)).is_zero());
    CHECK(bracket(euler(2), D("x1^2*d2", 2)) == D("x1^2*d2", 2));
    CHECK(bracket(D("x1*d2", 2), D("x2*d1", 2)) == D("x1*d1 - x2*d2", 2));
    CHECK_THROWS_AS(bracket(D("d1", 1), D("d1", 2)), DimensionMismatch);
}

TEST_CASE("euler derivation") {
    CHECK(euler(1) == D("x1*d1", 1));
    CHECK(euler(2) == D("x1*d1 + x2*d2", 2));
}

TEST_CASE("module action and basis constructors") {
    CHECK(P("x1", 2) * Derivation::basis(2, 1) == D("x1*d2", 2));
    CHECK(Derivation::single(P("x2^2", 2), 0) == D("x2^2*d1", 2));
    CHECK(D("x1*d1 + d2", 2).max_coefficient_degree() == 1);
    CHECK(Derivation(2).max_coefficient_degree() == -1);
    CHECK_THROWS_AS(Derivation::basis(2, 2), IndexOutOfRange);
}

TEST_CASE("the bracket agrees with the commutator of operators") {
    Random r(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(3);
        const Derivation a = r.derivation(n, 3);
        const Derivation b = r.derivation(n, 3);
        const Polynomial f = r.polynomial(n, 3);
        CHECK(apply(bracket(a, b), f) == apply(a, apply(b, f)) - apply(b, apply(a, f)));
    }
}

TEST_CASE("antisymmetry, bilinearity and Jacobi") {
    Random r(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(4);
        const Derivation a = r.derivation(n, 3);
        const Derivation b = r.derivation(n, 3);
        const Derivation c = r.derivation(n, 3);
        const Rational q = r.rational();
        CHECK(bracket(a, b) == -bracket(b, a));
        CHECK(bracket(a, a).is_zero());
        CHECK(bracket(a * q + c, b) == bracket(a, b) * q + bracket(c, b));
        CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
    }
}

TEST_CASE("bracket of multiples expands by the Leibniz rule") {
    Random r(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(4);
        const Derivation d1 = r.derivation(n, 2);
        const Derivation d2 = r.derivation(n, 2);
        const Polynomial f = r.polynomial(n, 2);
        const Polynomial g = r.polynomial(n, 2);
        CHECK(bracket(f * d1, g * d2) == (f * apply(d1, g)) * d2 - (g * apply(d2, f)) * d1 + (f * g) * bracket(d1, d2));
    }
}

TEST_CASE("commuting fields drop the last term") {
    Random r(24);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(4);
        const Derivation d1 = constant_field(r, n);
        const Derivation d2 = constant_field(r, n);
        REQUIRE(bracket(d1, d2).is_zero());
        const Polynomial f = r.polynomial(n, 3);
        const Polynomial g = r.polynomial(n, 3);
        CHECK(bracket(f * d1, g * d2) == (f * apply(d1, g)) * d2 - (g * apply(d2, f)) * d1);
    }
}

TEST_CASE("Euler derivation scales homogeneous polynomials and derivations by degree") {
    Random r(25);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(4);
        const unsigned m = static_cast<unsigned>(r.integer(0, 5));
        const Polynomial f = r.homogeneous(n, m);
        CHECK(apply(euler(n), f) == Rational(m) * f);
        const Monomial x = r.monomial(n, m);
        CHECK(apply(euler(n), Polynomial::term(x)) == Polynomial::term(x, x.degree()));

        const int k = r.integer(-1, 3);
        const Derivation d = r.homogeneous_derivation(n, k);
        CHECK(bracket(euler(n), d) == d * Rational(k));
    }
}

TEST_CASE("homogeneous components") {
    const auto comps = homogeneous_components(D("d1 + x1*d1 + x1*x2*d2", 2));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == HomogeneousComponent{-1, D("d1", 2)});
    CHECK(comps[1] == HomogeneousComponent{0, D("x1*d1", 2)});
    CHECK(comps[2] == HomogeneousComponent{1, D("x1*x2*d2", 2)});
    CHECK(homogeneous_components(Derivation(2)).empty());
    const Derivation h = D("x1^2*d2 + x1*x2*d1", 2);
    REQUIRE(homogeneous_components(h).size() == 1);
    CHECK(homogeneous_components(h)[0].part == h);
    CHECK(is_homogeneous(h));
    CHECK_FALSE(is_homogeneous(D("d1 + x1*d1", 2)));
}

TEST_CASE("Euler peeling") {
    const Derivation h = D("x1^2*d2", 2);
    const EulerPeel single = peel_via_euler(h);
    CHECK(single.steps == 0);
    REQUIRE(single.components.size() == 1);
    CHECK(single.components[0].part == h);

    const Derivation d = D("d1 + x2*d1 + x1^2*d2 - x1^3*d2", 2);
    const EulerPeel peel = peel_via_euler(d);
    CHECK(peel.steps == 3);
    CHECK(peel.components == homogeneous_components(d));
}

TEST_CASE("Euler peeling equals direct regrouping on random derivations") {
    Random r(26);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(3);
        Derivation d(n);
        const int count = r.integer(1, 5);
        for (int k = 0; k < count; ++k) d += r.homogeneous_derivation(n, r.integer(-1, 4));
        CHECK(peel_components_via_euler(d) == homogeneous_components(d));
    }
}

TEST_CASE("ad powers") {
    const Derivation d = D("x1*x2*d1 - d2", 2);
    CHECK(ad_power(D("d1", 2), d, 0) == d);
    CHECK(ad_power(D("d2", 2), D("x2^2*d1", 2), 2) == D("2*d1", 2));
    CHECK(ad_power(D("d1", 2), D("x1^2*x2*d2 + x1*d1", 2), 3).is_zero());
    CHECK(ad_power(D("d1", 2), d, 1) == bracket(D("d1", 2), d));
}

TEST_CASE("permuting variables") {
    const std::vector<std::size_t> swap{1, 0};
    const std::vector<std::size_t> id{0, 1};
    CHECK(permute_variables(D("x1*d1", 2), swap) == D("x2*d2", 2));
    CHECK(permute_variables(D("x1^2*d2 + d1", 2), id) == D("x1^2*d2 + d1", 2));
    CHECK(permute_variables(D("x1^2*d2", 2), swap) == D("x2^2*d1", 2));
    CHECK_THROWS(permute_variables(D("d1", 2), std::vector<std::size_t>{0, 0}));
    CHECK(inverse_permutation(std::vector<std::size_t>{2, 0, 1}) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("permuting variables is a Lie algebra automorphism") {
    Random r(27);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + r.index(4);
        const auto sigma = r.permutation(n);
        const Derivation a = r.derivation(n, 2);
        const Derivation b = r.derivation(n, 2);
        CHECK(permute_variables(bracket(a, b), sigma) ==
              bracket(permute_variables(a, sigma), permute_variables(b, sigma)));
        CHECK(permute_variables(permute_variables(a, sigma), inverse_permutation(sigma)) == a);
        // Conjugation also transports the action: (sigma D)(sigma f) = sigma(D f).
        const Polynomial f = r.polynomial(n, 3);
        CHECK(apply(permute_variables(a, sigma), rename_variables(f, sigma)) == rename_variables(apply(a, f), sigma));
    }
}

}  // TEST_SUITE
