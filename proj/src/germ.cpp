// Germ parsing/rendering and weighted multiplicity.
#include "wbu/germ.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"

namespace wbu {

GermModel make_germ(std::vector<std::pair<i64, i64>> terms) {
    if (terms.empty())
        throw InvalidInputError("germ needs at least one f-term besides xy");
    std::sort(terms.begin(), terms.end());
    for (size_t i = 0; i < terms.size(); ++i) {
        auto [p, q] = terms[i];
        if (p < 0 || q < 0)
            throw InvalidInputError("germ exponents must be non-negative");
        if (p + q < 2)
            throw InvalidInputError("each f-term needs total degree >= 2");
        if (i > 0 && terms[i] == terms[i - 1])
            throw InvalidInputError("duplicate f-term in germ");
    }
    return GermModel{std::move(terms)};
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", (long)pos);
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, (long)pos); }

    i64 integer() {
        skip_ws();
        size_t start = pos;
        i64 value = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            value = checked_add(checked_mul(value, 10), i64(s[pos] - '0'));
            ++pos;
        }
        if (pos == start) fail("expected an integer");
        return value;
    }
};

// var ('^' INT)? — returns the exponent (default 1).
i64 parse_exponent(Scanner& sc) {
    if (sc.peek() == '^') {
        sc.take();
        i64 e = sc.integer();
        if (e < 1) sc.fail("exponent must be positive");
        return e;
    }
    return 1;
}

std::pair<i64, i64> parse_monomial(Scanner& sc) {
    i64 p = 0, q = 0;
    size_t at = sc.pos;
    char v = sc.peek();
    if (v == 'z') {
        sc.take();
        p = parse_exponent(sc);
        if (sc.peek() == 'z') sc.fail("variable z repeated in monomial");
        if (sc.peek() == 'u') {
            sc.take();
            q = parse_exponent(sc);
        }
    } else if (v == 'u') {
        sc.take();
        q = parse_exponent(sc);
        if (sc.peek() == 'u') sc.fail("variable u repeated in monomial");
        if (sc.peek() == 'z') sc.fail("write mixed monomials as z^P u^Q");
    } else {
        sc.fail("expected a monomial in z, u");
    }
    if (p + q < 2) throw ParseError("f-term needs total degree >= 2", (long)at);
    return {p, q};
}

} // namespace

GermModel parse_germ(const std::string& text) {
    Scanner sc{text};
    if (sc.peek() != 'x') sc.fail("germ must start with the term xy");
    sc.take();
    if (sc.peek() != 'y') sc.fail("germ must start with the term xy");
    sc.take();

    std::vector<std::pair<i64, i64>> terms;
    while (!sc.done()) {
        if (sc.peek() != '+') sc.fail("expected '+'");
        sc.take();
        size_t at = sc.pos;
        auto term = parse_monomial(sc);
        if (std::find(terms.begin(), terms.end(), term) != terms.end())
            throw ParseError("duplicate monomial in germ", (long)at);
        terms.push_back(term);
    }
    if (terms.empty()) throw ParseError("germ needs at least one f-term", (long)sc.pos);
    std::sort(terms.begin(), terms.end());
    return GermModel{std::move(terms)};
}

namespace {

std::string monomial_string(i64 p, i64 q) {
    std::ostringstream out;
    if (p > 0) {
        out << 'z';
        if (p > 1) out << '^' << p;
    }
    if (q > 0) {
        out << 'u';
        if (q > 1) out << '^' << q;
    }
    return out.str();
}

} // namespace

std::string render_germ(const GermModel& g) {
    std::ostringstream out;
    out << "xy";
    for (auto [p, q] : g.terms) out << " + " << monomial_string(p, q);
    return out.str();
}

i64 deg_min(const GermModel& g) {
    i64 best = -1;
    for (auto [p, q] : g.terms) {
        i64 total = checked_add(p, q);
        if (best < 0 || total < best) best = total;
    }
    return best;
}

WeightVector make_weights(i64 a, i64 b, i64 c, i64 d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw InvalidInputError("weights must be positive");
    i64 g = std::gcd(std::gcd(a, b), std::gcd(c, d));
    if (g != 1)
        throw InvalidInputError("weights must have gcd 1");
    return WeightVector{a, b, c, d};
}

WeightVector parse_weights(const std::string& text) {
    std::vector<i64> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        size_t idx = 0;
        i64 value = 0;
        try {
            value = std::stoll(piece, &idx);
        } catch (const std::exception&) {
            throw ParseError("weights must be integers \"a,b,c,d\"", (long)pos);
        }
        while (idx < piece.size() && (piece[idx] == ' ' || piece[idx] == '\t')) ++idx;
        if (idx != piece.size())
            throw ParseError("weights must be integers \"a,b,c,d\"", (long)pos);
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.size() != 4)
        throw ParseError("expected four weights \"a,b,c,d\"", 0);
    return make_weights(parts[0], parts[1], parts[2], parts[3]);
}

std::string render_weights(const WeightVector& w) {
    std::ostringstream out;
    out << '(' << w.a << ',' << w.b << ',' << w.c << ',' << w.d << ')';
    return out.str();
}

i64 weighted_mult(const GermModel& g, const WeightVector& w) {
    i64 best = checked_add(w.a, w.b);
    for (auto [p, q] : g.terms) {
        i64 weight = checked_add(checked_mul(p, w.c), checked_mul(q, w.d));
        best = std::min(best, weight);
    }
    return best;
}

bool is_zu_symmetric(const GermModel& g) {
    for (auto [p, q] : g.terms) {
        if (std::find(g.terms.begin(), g.terms.end(), std::make_pair(q, p)) ==
            g.terms.end())
            return false;
    }
    return true;
}

} // namespace wbu
