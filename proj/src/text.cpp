#include "derlie/text.hpp"

#include <cctype>
#include <variant>
#include <vector>

#include "derlie/errors.hpp"

namespace derlie {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void fail_at(std::string_view text, std::size_t pos, const std::string& message) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError(message, line, col);
}

// Recursive-descent parser over text[begin, end). Positions in errors are
// absolute offsets into `text`, so sub-ranges of spec keys report correctly.
class ExprParser {
public:
    using Value = std::variant<Polynomial, Derivation>;

    ExprParser(std::string_view text, std::size_t n, std::size_t begin, std::size_t end)
        : text_(text), n_(n), pos_(begin), end_(end) {}

    Value parse_all() {
        skip_ws();
        if (pos_ >= end_) error("empty expression");
        Value v = expr();
        skip_ws();
        if (pos_ < end_) error(std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

    Polynomial polynomial() {
        const std::size_t start = pos_;
        Value v = parse_all();
        if (auto* p = std::get_if<Polynomial>(&v)) return std::move(*p);
        fail_at(text_, start, "expected a polynomial, found a derivation");
    }

    Derivation derivation() {
        const std::size_t start = pos_;
        Value v = parse_all();
        if (auto* d = std::get_if<Derivation>(&v)) return std::move(*d);
        const auto& p = std::get<Polynomial>(v);
        if (p.is_zero()) return Derivation(n_);
        fail_at(text_, start, "expected a derivation, found a polynomial");
    }

private:
    [[noreturn]] void error(const std::string& message) const { fail_at(text_, pos_, message); }

    void skip_ws() {
        while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < end_ && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t index_after_letter(char letter) {
        const std::size_t at = pos_;
        ++pos_;  // the letter itself
        if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail_at(text_, at, std::string("expected an index after '") + letter + "'");
        const std::string s = digits();
        if (s.size() > 6 || std::stoul(s) == 0 || std::stoul(s) > n_)
            fail_at(text_, at, std::string(1, letter) + s + " out of range for n = " + std::to_string(n_));
        return std::stoul(s) - 1;
    }

    Value add(Value a, Value b, bool subtract, std::size_t at) {
        if (subtract) b = negate(std::move(b));
        if (auto* pa = std::get_if<Polynomial>(&a)) {
            if (auto* pb = std::get_if<Polynomial>(&b)) return *pa + *pb;
            if (pa->is_zero()) return b;
        } else if (auto* db = std::get_if<Derivation>(&b)) {
            return std::get<Derivation>(a) + *db;
        } else if (std::get<Polynomial>(b).is_zero()) {
            return a;
        }
        fail_at(text_, at, "cannot add a polynomial and a derivation");
    }

    static Value negate(Value v) {
        if (auto* p = std::get_if<Polynomial>(&v)) return -*p;
        return -std::get<Derivation>(v);
    }

    Value multiply(const Value& a, const Value& b, std::size_t at) {
        const auto* pa = std::get_if<Polynomial>(&a);
        const auto* pb = std::get_if<Polynomial>(&b);
        if (pa && pb) return *pa * *pb;
        if (pa) return *pa * std::get<Derivation>(b);
        if (pb) return *pb * std::get<Derivation>(a);
        fail_at(text_, at, "cannot multiply two derivations");
    }

    Value expr() {
        Value v = term();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (eat('+')) {
                v = add(std::move(v), term(), false, at);
            } else if (eat('-')) {
                v = add(std::move(v), term(), true, at);
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = unary();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (!eat('*')) return v;
            v = multiply(v, unary(), at);
        }
    }

    Value unary() {
        if (eat('-')) return negate(unary());
        if (eat('+')) return unary();
        return power();
    }

    Value power() {
        Value base = atom();
        skip_ws();
        const std::size_t at = pos_;
        if (!eat('^')) return base;
        const std::string e = digits();
        if (e.size() > 4) fail_at(text_, at, "exponent too large");
        auto* p = std::get_if<Polynomial>(&base);
        if (!p) fail_at(text_, at, "cannot raise a derivation to a power");
        return pow(*p, static_cast<unsigned>(std::stoul(e)));
    }

    Value atom() {
        skip_ws();
        if (pos_ >= end_) error("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (c == 'x') return Polynomial::variable(n_, index_after_letter('x'));
        if (c == 'd') return Derivation::basis(n_, index_after_letter('d'));
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            const std::size_t slash = pos_;
            if (eat('/')) {
                const std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) fail_at(text_, slash, "zero denominator");
                num += "/" + den;
            }
            Rational q(num, 10);
            q.canonicalize();
            return Polynomial::constant(n_, q);
        }
        error(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_;
    std::size_t end_;
};

struct Piece {
    std::size_t begin;
    std::size_t end;
};

// Splits text[begin, end) at top-level occurrences of `sep`.
std::vector<Piece> split_top(std::string_view text, Piece range, char sep) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = range.begin;
    for (std::size_t i = range.begin; i < range.end; ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == sep && depth == 0) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    out.push_back({start, range.end});
    return out;
}

std::size_t parse_count(std::string_view text, Piece p) {
    std::size_t b = p.begin;
    std::size_t e = p.end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) fail_at(text, p.begin, "expected an integer");
    for (std::size_t i = b; i < e; ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail_at(text, i, "expected an integer");
    if (e - b > 6) fail_at(text, b, "integer too large");
    return std::stoul(std::string(text.substr(b, e - b)));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// Coefficient c times monomial text `mono` (may be empty for 1), as a
// signed term such as "3/2*x1", "-x2" or "-1".
std::string signed_term(const Rational& c, const std::string& mono) {
    if (mono.empty()) return to_string(c);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return to_string(c) + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() == '-')
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Polynomial p = ExprParser(text, 1, 0, text.size()).polynomial();
    if (!p.is_constant()) fail_at(text, 0, "expected a rational constant");
    return p.coefficient(Monomial(1));
}

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    return ExprParser(text, n, 0, text.size()).polynomial();
}

Derivation parse_derivation(std::string_view text, std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    return ExprParser(text, n, 0, text.size()).derivation();
}

SubalgebraSpec parse_spec(std::string_view text) {
    std::size_t b = 0;
    while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    std::size_t name_end = b;
    while (name_end < text.size() && std::isalnum(static_cast<unsigned char>(text[name_end]))) ++name_end;
    const std::string name(text.substr(b, name_end - b));
    std::size_t open = name_end;
    while (open < text.size() && std::isspace(static_cast<unsigned char>(text[open]))) ++open;
    if (name.empty()) fail_at(text, b, "expected a spec name");
    if (open >= text.size() || text[open] != '(') fail_at(text, open, "expected '('");
    std::size_t close = text.size();
    while (close > open && std::isspace(static_cast<unsigned char>(text[close - 1]))) --close;
    if (close <= open + 1 || text[close - 1] != ')') fail_at(text, close, "expected ')' at end of spec");
    --close;

    const auto groups = split_top(text, {open + 1, close}, ';');
    auto numbers = [&](Piece p) {
        std::vector<std::size_t> out;
        for (auto piece : split_top(text, p, ',')) out.push_back(parse_count(text, piece));
        return out;
    };
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) fail_at(text, open, "malformed " + name + "(...): " + what);
    };

    try {
        if (name == "wn" || name == "ms" || name == "is" || name == "sn" || name == "ms2") {
            expect(groups.size() == 1, "unexpected ';'");
            const auto a = numbers(groups[0]);
            if (name == "wn") {
                expect(a.size() == 1, "expected wn(n)");
                return SubalgebraSpec::full(a[0]);
            }
            if (name == "sn") {
                expect(a.size() == 1, "expected sn(n)");
                return SubalgebraSpec::sn(a[0]);
            }
            if (name == "ms2") {
                expect(a.size() == 3, "expected ms2(n,s1,s2)");
                return SubalgebraSpec::ms1s2(a[0], a[1], a[2]);
            }
            expect(a.size() == 2, "expected " + name + "(n,s)");
            return name == "ms" ? SubalgebraSpec::ms(a[0], a[1]) : SubalgebraSpec::is(a[0], a[1]);
        }
        if (name == "mi") {
            expect(groups.size() == 2, "expected mi(n;i1,...,ik)");
            const std::size_t n = parse_count(text, groups[0]);
            std::vector<std::size_t> idx;
            for (auto i : numbers(groups[1])) {
                expect(i >= 1 && i <= n, "index out of range");
                idx.push_back(i - 1);
            }
            return SubalgebraSpec::mi(n, std::move(idx));
        }
        if (name == "sq") {
            expect(groups.size() == 2, "expected sq(n;D1,...,Dn)");
            const std::size_t n = parse_count(text, groups[0]);
            expect(n >= 1, "n must be positive");
            std::vector<Derivation> gens;
            for (auto p : split_top(text, groups[1], ','))
                gens.push_back(ExprParser(text, n, p.begin, p.end).derivation());
            return SubalgebraSpec::square_module(std::move(gens));
        }
        if (name == "il") {
            expect(groups.size() == 3, "expected il(n;f1,...;D1,...)");
            const std::size_t n = parse_count(text, groups[0]);
            expect(n >= 1, "n must be positive");
            std::vector<Polynomial> ideal;
            for (auto p : split_top(text, groups[1], ','))
                ideal.push_back(ExprParser(text, n, p.begin, p.end).polynomial());
            std::vector<Derivation> alg;
            for (auto p : split_top(text, groups[2], ','))
                alg.push_back(ExprParser(text, n, p.begin, p.end).derivation());
            return il_product(std::move(ideal), std::move(alg));
        }
    } catch (const std::invalid_argument& e) {
        fail_at(text, b, e.what());
    }
    fail_at(text, b, "unknown spec '" + name + "'");
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Monomial& m) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (m[i] == 0) continue;
        std::string f = "x" + std::to_string(i + 1);
        if (m[i] > 1) f += "^" + std::to_string(m[i]);
        factors.push_back(std::move(f));
    }
    return join(factors, "*");
}

std::string to_string(const Polynomial& p) {
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(signed_term(it->second, to_string(it->first)));
    return join_terms(terms);
}

std::string to_string(const Derivation& d) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        const std::string basis = "d" + std::to_string(i + 1);
        for (auto it = d[i].terms().rbegin(); it != d[i].terms().rend(); ++it) {
            const std::string mono = to_string(it->first);
            terms.push_back(signed_term(it->second, mono.empty() ? basis : mono + "*" + basis));
        }
    }
    return join_terms(terms);
}

std::string to_string(const SubalgebraSpec& spec) {
    using S = SubalgebraSpec;
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, S::FullWn>) {
                return "wn(" + std::to_string(k.n) + ")";
            } else if constexpr (std::is_same_v<T, S::Ms>) {
                return "ms(" + std::to_string(k.n) + "," + std::to_string(k.s) + ")";
            } else if constexpr (std::is_same_v<T, S::Is>) {
                return "is(" + std::to_string(k.n) + "," + std::to_string(k.s) + ")";
            } else if constexpr (std::is_same_v<T, S::Sn>) {
                return "sn(" + std::to_string(k.n) + ")";
            } else if constexpr (std::is_same_v<T, S::MI>) {
                std::vector<std::string> idx;
                for (auto i : k.index_set) idx.push_back(std::to_string(i + 1));
                return "mi(" + std::to_string(k.n) + ";" + join(idx, ",") + ")";
            } else if constexpr (std::is_same_v<T, S::Ms1s2>) {
                return "ms2(" + std::to_string(k.n) + "," + std::to_string(k.s1) + "," + std::to_string(k.s2) + ")";
            } else if constexpr (std::is_same_v<T, S::SquareModule>) {
                std::vector<std::string> g;
                for (const auto& d : k.gens) g.push_back(to_string(d));
                return "sq(" + std::to_string(k.gens.size()) + ";" + join(g, ",") + ")";
            } else {
                std::vector<std::string> f;
                for (const auto& p : k.ideal_gens) f.push_back(to_string(p));
                std::vector<std::string> g;
                for (const auto& d : k.algebra_gens) g.push_back(to_string(d));
                return "il(" + std::to_string(k.algebra_gens.front().dimension()) + ";" + join(f, ",") + ";" +
                       join(g, ",") + ")";
            }
        },
        spec.kind());
}

}  // namespace derlie
