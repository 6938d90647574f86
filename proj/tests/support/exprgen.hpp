#pragma once

#include <string>

#include "support/random.hpp"

namespace derlie::testing {

// Random expression text over the whole grammar: rationals, powers,
// parentheses, unary signs and the additive/multiplicative operators.
class ExprGen {
public:
    ExprGen(Random& r, std::size_t n) : r_(r), n_(n) {}

    std::string poly(int depth) {
        switch (depth <= 0 ? r_.integer(0, 1) : r_.integer(0, 5)) {
            case 0: return std::to_string(r_.integer(0, 12)) + (r_.coin() ? "/" + std::to_string(r_.integer(1, 6)) : "");
            case 1: return "x" + std::to_string(1 + r_.index(n_));
            case 2: return "(" + poly(depth - 1) + ")^" + std::to_string(r_.integer(0, 3));
            case 3: return poly(depth - 1) + " * " + poly(depth - 1);
            case 4: return poly(depth - 1) + (r_.coin() ? " + " : " - ") + poly(depth - 1);
            default: return "-(" + poly(depth - 1) + ")";
        }
    }

    std::string derivation(int depth) {
        std::string out;
        const int terms = r_.integer(1, 3);
        for (int t = 0; t < terms; ++t) {
            if (t) out += r_.coin() ? " + " : " - ";
            const std::string basis = "d" + std::to_string(1 + r_.index(n_));
            switch (r_.integer(0, 2)) {
                case 0: out += basis; break;
                case 1: out += "(" + poly(depth) + ")*" + basis; break;
                default: out += basis + " * (" + poly(depth) + ")"; break;
            }
        }
        return out;
    }

private:
    Random& r_;
    std::size_t n_;
};

}  // namespace derlie::testing
