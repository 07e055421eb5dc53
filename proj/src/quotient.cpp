// Cyclic quotient terminality tests and surface quotient recognition.
#include "wbu/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"
#include "wbu/hj.hpp"

namespace wbu {

CyclicQuotient make_quotient(i64 order, std::vector<i64> raw_weights,
                             std::optional<i64> equation_weight) {
    if (order < 1) throw InvalidInputError("quotient order must be >= 1");
    if (raw_weights.size() < 2 || raw_weights.size() > 4)
        throw InvalidInputError("quotient needs between 2 and 4 weights");
    CyclicQuotient q;
    q.order = order;
    q.weights.reserve(raw_weights.size());
    for (i64 w : raw_weights) q.weights.push_back(mod_floor(w, order));
    if (equation_weight) q.equation_weight = mod_floor(*equation_weight, order);
    return q;
}

bool is_isolated_action(const CyclicQuotient& q) {
    if (q.order == 1) return true;
    for (i64 w : q.weights)
        if (std::gcd(w, q.order) != 1) return false;
    return true;
}

bool is_terminal_quotient(const CyclicQuotient& q) {
    if (q.weights.size() != 3)
        throw InvalidInputError("terminal-quotient test needs exactly 3 weights");
    i64 r = q.order;
    if (r == 1) return true;
    // Normal form 1/r(1, r-1, b), gcd(b, r) = 1: equivalently some pair of
    // weights sums to 0 mod r while all three are coprime to r.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int k = 3 - i - j;
            if ((q.weights[i] + q.weights[j]) % r != 0) continue;
            if (std::gcd(q.weights[i], r) != 1) continue;
            if (std::gcd(q.weights[j], r) != 1) continue;
            if (std::gcd(q.weights[k], r) != 1) continue;
            return true;
        }
    return false;
}

bool reid_tai_terminal_oracle(const CyclicQuotient& q) {
    if (q.weights.size() != 3)
        throw InvalidInputError("terminal-quotient oracle needs exactly 3 weights");
    i64 r = q.order;
    if (r == 1) return true;
    if (!is_isolated_action(q)) return false;
    for (i64 k = 1; k < r; ++k) {
        i64 age = 0;
        for (i64 w : q.weights) age += (k * w) % r;
        if (age <= r) return false;
    }
    return true;
}

i64 terminality_agreement_mismatches(i64 r_max) {
    i64 mismatches = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : mismatches)
    for (i64 r = 1; r <= r_max; ++r) {
        std::vector<i64> units;
        for (i64 w = 0; w < r; ++w)
            if (std::gcd(w, r) == 1) units.push_back(w);
        for (i64 w1 : units)
            for (i64 w2 : units)
                for (i64 w3 : units) {
                    CyclicQuotient q{r, {w1, w2, w3}, std::nullopt};
                    if (is_terminal_quotient(q) != reid_tai_terminal_oracle(q))
                        ++mismatches;
                }
    }
    return mismatches;
}

bool is_terminal_hyperquotient(const CyclicQuotient& q) {
    if (q.weights.size() != 4)
        throw InvalidInputError("hyperquotient test needs exactly 4 weights");
    if (!q.equation_weight)
        throw InvalidInputError("hyperquotient test needs the equation weight");
    i64 r = q.order;
    i64 e = *q.equation_weight;
    if ((q.weights[0] + q.weights[1]) % r != e % r)
        throw InvalidInputError("hyperquotient equation must contain xy: w1+w2 == e mod r");
    for (i64 k = 1; k < r; ++k) {
        i64 sum = 0;
        for (i64 w : q.weights) sum += (k * w) % r;
        if (sum - (k * e) % r <= r) return false;
    }
    return true;
}

bool is_terminal_cA_hyperquotient(const CyclicQuotient& q,
                                  const std::vector<Monomial2>& g_terms) {
    if (q.weights.size() != 4)
        throw InvalidInputError("hyperquotient test needs exactly 4 weights");
    if (g_terms.empty())
        throw InvalidInputError("hyperquotient test needs the residual monomials");
    i64 r = q.order;
    for (i64 k = 1; k < r; ++k) {
        // Minimal positive lifts of the twisted weights; n_i/r are the
        // coordinates of a monomial valuation centred at the point.
        i64 n[4];
        for (int i = 0; i < 4; ++i) {
            n[i] = (k * q.weights[i]) % r;
            if (n[i] == 0) n[i] = r;
        }
        i64 vg = -1;
        for (const auto& m : g_terms) {
            i64 v = checked_add(checked_mul(m.p, n[2]), checked_mul(m.q, n[3]));
            if (vg < 0 || v < vg) vg = v;
        }
        i64 value = std::min(checked_add(n[0], n[1]), vg);
        i64 a = n[0] + n[1] + n[2] + n[3] - r - value;
        if (a <= 0) return false;
    }
    return true;
}

DuvalResult duval_of_surface_quotient(const CyclicQuotient& q) {
    if (q.weights.size() != 2)
        throw InvalidInputError("surface quotient needs exactly 2 weights");
    if (!is_isolated_action(q))
        throw InvalidInputError("surface quotient action must be isolated");
    DuvalResult res;
    res.order = q.order;
    i64 r = q.order;
    if (r == 1) {
        res.smooth = true;
        res.label = "smooth";
        return res;
    }
    // Normalize to 1/r(1, qq); both normalizations (using either coordinate
    // first) are isomorphic, keep the smaller qq for a stable label.
    i64 inv1 = 0, inv2 = 0;
    for (i64 t = 1; t < r; ++t) {
        if ((t * q.weights[0]) % r == 1) inv1 = t;
        if ((t * q.weights[1]) % r == 1) inv2 = t;
    }
    i64 qa = (inv1 * q.weights[1]) % r;
    i64 qb = (inv2 * q.weights[0]) % r;
    i64 qq = std::min(qa, qb);
    res.chain = hj_expand(r, qq);
    res.discrepancies = hj_discrepancies(res.chain);
    res.is_du_val = (qq == r - 1);
    std::ostringstream label;
    if (res.is_du_val) {
        label << "A_" << (r - 1);
    } else {
        label << "non-Du-Val cyclic 1/" << r << "(1," << qq << ")";
    }
    res.label = label.str();
    return res;
}

std::vector<i64> canonical_weights(const CyclicQuotient& q) {
    i64 r = q.order;
    std::vector<i64> best = q.weights;
    std::sort(best.begin(), best.end());
    for (i64 t = 1; t < std::max<i64>(r, 2); ++t) {
        if (r > 1 && std::gcd(t, r) != 1) continue;
        std::vector<i64> cand;
        cand.reserve(q.weights.size());
        for (i64 w : q.weights) cand.push_back((t * w) % std::max<i64>(r, 1));
        std::sort(cand.begin(), cand.end());
        if (cand < best) best = cand;
    }
    return best;
}

std::string render_quotient(const CyclicQuotient& q) {
    std::ostringstream out;
    out << "1/" << q.order << '(';
    for (size_t i = 0; i < q.weights.size(); ++i) {
        if (i) out << ',';
        out << q.weights[i];
    }
    out << ')';
    return out.str();
}

CyclicQuotient parse_quotient(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' in quotient literal",
                             (long)pos);
        ++pos;
    };
    auto integer = [&]() -> i64 {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        i64 value = 0;
        size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = checked_add(checked_mul(value, 10), i64(text[pos] - '0'));
            ++pos;
        }
        if (pos == digits) throw ParseError("expected an integer", (long)start);
        return neg ? -value : value;
    };

    expect('1');
    expect('/');
    i64 r = integer();
    expect('(');
    std::vector<i64> weights;
    weights.push_back(integer());
    while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            weights.push_back(integer());
        } else {
            break;
        }
    }
    expect(')');
    skip_ws();
    if (pos != text.size())
        throw ParseError("trailing characters after quotient literal", (long)pos);
    return make_quotient(r, std::move(weights));
}

} // namespace wbu
