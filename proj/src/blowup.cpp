// Chart construction, discrepancy and the exceptional divisor's lowest part.
#include "wbu/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"
#include "poly_util.hpp"

namespace wbu {

namespace {

// xy and the f-terms as exponent vectors over (x, y, z, u).
std::vector<ChartTerm> source_terms(const GermModel& g) {
    std::vector<ChartTerm> terms;
    terms.push_back(ChartTerm{{1, 1, 0, 0}});
    for (auto [p, q] : g.terms) terms.push_back(ChartTerm{{0, 0, p, q}});
    return terms;
}

i64 term_weight(const ChartTerm& t, const WeightVector& w) {
    i64 sum = 0;
    for (int j = 0; j < 4; ++j) sum = checked_add(sum, checked_mul(t.e[j], w[j]));
    return sum;
}

bool descending_lex(const ChartTerm& lhs, const ChartTerm& rhs) {
    return lhs.e > rhs.e;
}

} // namespace

std::vector<Chart> make_charts(const GermModel& g, const WeightVector& w) {
    const i64 mu = weighted_mult(g, w);
    const auto src = source_terms(g);
    std::vector<Chart> charts;
    charts.reserve(4);
    for (int i = 0; i < 4; ++i) {
        Chart chart;
        chart.index = i + 1;
        const i64 r = w[i];
        for (const auto& s : src) {
            ChartTerm t = s;
            i64 excess = term_weight(s, w) - mu;
            if (excess < 0) throw InconsistencyError("term below weighted multiplicity");
            t.e[i] = excess;
            chart.terms.push_back(t);
        }
        std::sort(chart.terms.begin(), chart.terms.end(), descending_lex);

        chart.display_weights = {-w.a, -w.b, -w.c, -w.d};
        chart.display_weights[i] = 1;
        std::vector<i64> gw(chart.display_weights.begin(), chart.display_weights.end());
        chart.group = make_quotient(r, gw);

        // Semi-invariance: all chart terms share one weight class mod r.
        i64 residue = -1;
        for (const auto& t : chart.terms) {
            i64 cls = 0;
            for (int j = 0; j < 4; ++j)
                cls = mod_floor(cls + mod_floor(t.e[j], r) * chart.group.weights[j], r);
            if (residue < 0) residue = cls;
            if (cls != residue)
                throw InconsistencyError("chart equation is not semi-invariant");
        }
        chart.group.equation_weight = residue;

        chart.origin_in_exceptional =
            std::none_of(chart.terms.begin(), chart.terms.end(), [](const ChartTerm& t) {
                return t.e == std::array<i64, 4>{0, 0, 0, 0};
            });
        charts.push_back(std::move(chart));
    }
    return charts;
}

i64 discrepancy(const GermModel& g, const WeightVector& w) {
    return w.sum() - 1 - weighted_mult(g, w);
}

ExceptionalDivisor exceptional_part(const GermModel& g, const WeightVector& w) {
    const i64 mu = weighted_mult(g, w);
    ExceptionalDivisor div;
    div.ambient_weights = {w.a, w.b, w.c, w.d};
    for (const auto& t : source_terms(g))
        if (term_weight(t, w) == mu) div.lowest_part.push_back(t);
    std::sort(div.lowest_part.begin(), div.lowest_part.end(), descending_lex);

    const bool has_xy = std::any_of(
        div.lowest_part.begin(), div.lowest_part.end(),
        [](const ChartTerm& t) { return t.e[0] == 1; });

    if (has_xy) {
        if (div.lowest_part.size() == 1) {
            // xy alone: two reduced hyperplanes.
            div.irreducible = false;
            div.reduced = true;
        } else {
            // xy + g(z,u) with g != 0: any factor free of x would divide
            // both y and g, so the part is irreducible (hence reduced).
            div.irreducible = true;
            div.reduced = true;
        }
        return div;
    }

    // Pure (z,u)-part: split off the common monomial z^A u^B.
    i64 A = div.lowest_part.front().e[2], B = div.lowest_part.front().e[3];
    for (const auto& t : div.lowest_part) {
        A = std::min(A, t.e[2]);
        B = std::min(B, t.e[3]);
    }
    const bool monomial_trivial = (A == 0 && B == 0);
    const bool monomial_squarefree = (A <= 1 && B <= 1);

    if (div.lowest_part.size() == 1) {
        i64 p = div.lowest_part.front().e[2], q = div.lowest_part.front().e[3];
        div.irreducible = (p + q == 1);
        div.reduced = (p <= 1 && q <= 1);
        return div;
    }

    // Cofactor is a weighted-homogeneous binary form; its exponent pairs lie
    // on an arithmetic progression with step (d/gamma, -c/gamma).
    i64 gamma = std::gcd(w.c, w.d);
    i64 step_p = w.d / gamma;
    std::vector<i64> ts;
    for (const auto& t : div.lowest_part) {
        i64 pp = t.e[2] - A;
        if (pp % step_p != 0)
            throw InconsistencyError("lowest part is not weighted-homogeneous");
        ts.push_back(pp / step_p);
    }
    std::sort(ts.begin(), ts.end());
    i64 G = 0;
    for (i64 t : ts) G = std::gcd(G, t);

    div.irreducible = monomial_trivial && div.lowest_part.size() == 2 && G == 1;
    bool form_squarefree;
    if (div.lowest_part.size() == 2) {
        // z^p + u^q factors into gcd(p,q) distinct irreducible pieces.
        form_squarefree = true;
    } else {
        form_squarefree = detail::exponents_squarefree(ts);
    }
    div.reduced = monomial_squarefree && form_squarefree;
    return div;
}

namespace {

const char* kVarNames = "xyzu";

std::string term_string(const ChartTerm& t) {
    std::ostringstream out;
    bool any = false;
    for (int j = 0; j < 4; ++j) {
        if (t.e[j] == 0) continue;
        any = true;
        out << kVarNames[j];
        if (t.e[j] > 1) out << '^' << t.e[j];
    }
    if (!any) out << '1';
    return out.str();
}

} // namespace

std::string render_terms(const std::vector<ChartTerm>& terms) {
    std::ostringstream out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out << " + ";
        out << term_string(terms[i]);
    }
    return out.str();
}

std::string render_chart(const Chart& chart) {
    std::ostringstream out;
    out << 'U' << chart.index << " = { " << render_terms(chart.terms) << " } / Z_"
        << chart.group.order << '(';
    for (int j = 0; j < 4; ++j) {
        if (j) out << ',';
        out << chart.display_weights[j];
    }
    out << ')';
    return out.str();
}

std::vector<AmbientChart> quotient_blowup_charts(i64 m, const std::vector<i64>& weights) {
    if (m < 1) throw InvalidInputError("quotient order must be >= 1");
    if (weights.size() < 2)
        throw InvalidInputError("blow-up needs at least 2 weights");
    i64 g = 0;
    for (i64 w : weights) {
        if (w < 1) throw InvalidInputError("blow-up weights must be positive");
        g = std::gcd(g, w);
    }
    if (g != 1) throw InvalidInputError("blow-up weights must have gcd 1");

    std::vector<AmbientChart> charts;
    for (size_t i = 0; i < weights.size(); ++i) {
        AmbientChart chart;
        chart.index = (int)i + 1;
        chart.dimension = (i64)weights.size();
        chart.group_order = weights[i];
        for (size_t j = 0; j < weights.size(); ++j)
            chart.display_weights.push_back(i == j ? m : -weights[j]);
        charts.push_back(std::move(chart));
    }
    return charts;
}

std::string render_ambient_chart(const AmbientChart& chart) {
    std::ostringstream out;
    out << 'U' << chart.index << " = C^" << chart.dimension << " / Z_"
        << chart.group_order << '(';
    for (size_t j = 0; j < chart.display_weights.size(); ++j) {
        if (j) out << ',';
        out << chart.display_weights[j];
    }
    out << ')';
    return out.str();
}

} // namespace wbu
