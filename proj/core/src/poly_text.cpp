#include "reeslift/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace reeslift {

namespace {

void print_term(std::ostream& os, const Monomial& m, const Rat& c) {
    os << c.get_str();
    for (const auto& [v, e] : m.factors()) {
        os << "*" << v.to_string();
        if (e != 1) os << "^" << e;
    }
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (!done() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("polynomial parse error: expected '" +
                                        std::string(1, c) + "' at position " +
                                        std::to_string(pos));
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error: " + what + " at position " +
                                    std::to_string(pos));
    }
};

long parse_int(Cursor& cur, bool allow_sign) {
    std::size_t start = cur.pos;
    if (allow_sign && !cur.done() && (cur.peek() == '-' || cur.peek() == '+')) ++cur.pos;
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected integer");
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    return std::stol(cur.s.substr(start, cur.pos - start));
}

// Coefficient literal: [-]digits[/digits]. Digits may be arbitrarily long.
Rat parse_coeff(Cursor& cur) {
    std::size_t start = cur.pos;
    if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.eat('/')) {
        if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
            cur.fail("expected denominator");
        while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    }
    return parse_rational(cur.s.substr(start, cur.pos - start));
}

VarId parse_var(Cursor& cur) {
    const char head = cur.peek();
    ++cur.pos;
    cur.expect('[');
    long first = parse_int(cur, false);
    if (head == 'x') {
        cur.expect(',');
        long second = parse_int(cur, false);
        cur.expect(']');
        return VarId::x(static_cast<int>(first), static_cast<int>(second));
    }
    cur.expect(']');
    return VarId::t(static_cast<int>(first));
}

}  // namespace

std::string Poly::to_text() const { return poly_to_text(*this); }

std::string poly_to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // terms() is ascending in the monomial order; print leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        print_term(os, it->first, it->second);
    }
    return os.str();
}

Poly parse_poly(const std::string& text, std::optional<Shape> shape) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw std::invalid_argument("polynomial parse error: empty input");

    Cursor cur{compact};
    PolyBuilder acc(shape);
    while (true) {
        // term := coeff? ('*'? varpow)* with at least one of the two pieces
        Rat coeff(1);
        bool have_coeff = false;
        if (cur.done()) cur.fail("expected term");
        const char c0 = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c0))) {
            coeff = parse_coeff(cur);
            have_coeff = true;
        } else if (c0 == '-' || c0 == '+') {
            const char next = cur.pos + 1 < compact.size() ? compact[cur.pos + 1] : '\0';
            if (std::isdigit(static_cast<unsigned char>(next))) {
                coeff = parse_coeff(cur);
            } else if (next == 'x' || next == 'T') {
                coeff = (c0 == '-') ? Rat(-1) : Rat(1);
                ++cur.pos;
            } else {
                cur.fail("dangling sign");
            }
            have_coeff = true;
        }
        std::vector<std::pair<VarId, int>> factors;
        while (!cur.done()) {
            const bool star = cur.eat('*');
            if (cur.done() || (cur.peek() != 'x' && cur.peek() != 'T')) {
                if (star) cur.fail("expected variable after '*'");
                break;
            }
            VarId v = parse_var(cur);
            if (shape) v.validate(*shape);
            int exp = 1;
            if (cur.eat('^')) exp = static_cast<int>(parse_int(cur, true));
            if (exp <= 0) cur.fail("exponent must be positive");
            factors.emplace_back(v, exp);
        }
        if (!have_coeff && factors.empty()) cur.fail("expected term");
        acc.add(Monomial::from_factors(std::move(factors)), coeff);
        if (cur.done()) break;
        if (!cur.eat('+')) cur.fail("expected '+' between terms");
    }
    return acc.take();
}

}  // namespace reeslift
