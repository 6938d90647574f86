#pragma once

// Text grammar for polynomials, derivations and subalgebra specs.
//
//   expr    := unary (('+' | '-') unary-term)*      additive, lowest precedence
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' INT)?                       binds tightest
//   atom    := INT ('/' INT)? | 'x'INT | 'd'INT | '(' expr ')'
//
// Variables x1..xn and basis derivations d1..dn are 1-based; n is always
// supplied by the caller. A derivation is an additive combination of
// poly*d<i> terms. There is no implicit multiplication and '/' only appears
// inside rational literals.
//
// Spec keys: wn(n), ms(n,s), is(n,s), sn(n), mi(n;i1,...,ik), ms2(n,s1,s2),
// sq(n;D1,...,Dn), il(n;f1,...,fk;D1,...,Dm).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "derlie/derivation.hpp"
#include "derlie/polynomial.hpp"
#include "derlie/subalgebra.hpp"

namespace derlie {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

Rational parse_rational(std::string_view text);
Polynomial parse_polynomial(std::string_view text, std::size_t n);
Derivation parse_derivation(std::string_view text, std::size_t n);
SubalgebraSpec parse_spec(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const Derivation& d);
std::string to_string(const SubalgebraSpec& spec);

}  // namespace derlie
