// Invariants of the exceptional surface E = { lowest part of xy + f } in
// P(a,b,c,d): K^2, the singular points with their minimal-resolution chains,
// Noether/Picard bookkeeping for the resolution, and the curve cut by the
// smaller quadric coordinate.
//
// Soundness layout.  After the irreducible/reduced gate and the requirement
// that the lowest part contain xy (mu == a+b), charts 1 and 2 restrict to
// global graphs y = -h(z,u) (resp. x), so E there is C^2/Z_r on the germ
// variables and the only possible singular point is the chart origin.  The
// remaining points of E lie on the z,u-stratum: corners are the chart 3/4
// origins, probed below, and interior points are smooth as long as the
// cofactor form of the lowest germ part is squarefree and the stratum is not
// stabilized (gcd(c,d) = 1 whenever the form has interior zeros at all).
// Shapes violating any of this throw UnsupportedShapeError; no invariant is
// ever reported for a surface we cannot certify chart by chart.
#include "wbu/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"
#include "wbu/hj.hpp"
#include "poly_util.hpp"

namespace wbu {

namespace {

void require_exceptional_gate(const GermModel& g, const WeightVector& w) {
    ExceptionalDivisor exc = exceptional_part(g, w);
    if (!exc.irreducible || !exc.reduced)
        throw InvalidInputError(
            "surface invariants need an irreducible reduced exceptional divisor");
}

// f-terms of minimal weight p*c + q*d (the germ part of the lowest part of
// xy + f).  Nonempty for every germ.
std::vector<std::pair<i64, i64>> lowest_f_terms(const GermModel& g, const WeightVector& w) {
    i64 best = -1;
    for (const auto& [p, q] : g.terms) {
        i64 wt = checked_add(checked_mul(p, w.c), checked_mul(q, w.d));
        if (best < 0 || wt < best) best = wt;
    }
    std::vector<std::pair<i64, i64>> out;
    for (const auto& [p, q] : g.terms) {
        i64 wt = checked_add(checked_mul(p, w.c), checked_mul(q, w.d));
        if (wt == best) out.push_back({p, q});
    }
    return out;
}

// Exponents t_i of the cofactor psi(v) = sum_i v^{t_i} after stripping the
// common z^A u^B from an equal-weight family of monomials: consecutive
// members differ by (d/gamma, -c/gamma), so t_i = (p_i - A) / (d/gamma).
std::vector<i64> cofactor_exponents(const std::vector<std::pair<i64, i64>>& part,
                                    const WeightVector& w) {
    i64 min_p = part.front().first;
    for (const auto& [p, q] : part) min_p = std::min(min_p, p);
    i64 step = w.d / std::gcd(w.c, w.d);
    std::vector<i64> ts;
    ts.reserve(part.size());
    for (const auto& [p, q] : part) ts.push_back((p - min_p) / step);
    std::sort(ts.begin(), ts.end());
    return ts;
}

std::string duval_surface_label(const DuvalResult& d) {
    if (d.is_du_val) return d.label;
    static const std::string prefix = "non-Du-Val ";
    if (d.label.rfind(prefix, 0) == 0) return d.label.substr(prefix.size());
    return d.label;
}

SurfaceSingularity quotient_point(int chart_index, const CyclicQuotient& pair_action) {
    DuvalResult d = duval_of_surface_quotient(pair_action);
    SurfaceSingularity s;
    s.chart_index = chart_index;
    s.order = d.order;
    s.du_val = d.is_du_val;
    s.chain = d.chain;
    s.label = duval_surface_label(d);
    return s;
}

} // namespace

Rational surface_k2(const GermModel& g, const WeightVector& w) {
    require_exceptional_gate(g, w);
    i64 mu = weighted_mult(g, w);
    i64 diff = checked_sub(mu, w.sum());
    i64 num = checked_mul(checked_mul(diff, diff), mu);
    i64 den = checked_mul(checked_mul(w.a, w.b), checked_mul(w.c, w.d));
    return Rational(num, den);
}

std::vector<SurfaceSingularity> surface_singularities(const GermModel& g,
                                                      const WeightVector& w) {
    require_exceptional_gate(g, w);
    i64 mu = weighted_mult(g, w);
    // A pure lowest part cuts a surface singular along the whole x,y-curve
    // (the germ part has degree >= 2 transverse to it).
    if (mu != checked_add(w.a, w.b))
        throw UnsupportedShapeError("exceptional surface is singular along a curve");
    std::vector<std::pair<i64, i64>> g0 = lowest_f_terms(g, w);
    if (g0.size() >= 2) {
        // Interior points of E on the z,u-stratum are the zeros of the
        // cofactor form; they must be simple and unstabilized.
        if (!detail::exponents_squarefree(cofactor_exponents(g0, w)))
            throw UnsupportedShapeError(
                "exceptional surface with singular points away from chart origins");
        if (std::gcd(w.c, w.d) > 1)
            throw UnsupportedShapeError(
                "exceptional surface with singular points away from chart origins");
    }

    std::vector<SurfaceSingularity> out;
    for (const Chart& chart : make_charts(g, w)) {
        int ci = chart.index - 1;
        std::vector<ChartTerm> restricted;
        for (const ChartTerm& t : chart.terms)
            if (t.e[(size_t)ci] == 0) restricted.push_back(t);
        bool has_const = false;
        for (const ChartTerm& t : restricted)
            has_const |= (t.e[0] == 0 && t.e[1] == 0 && t.e[2] == 0 && t.e[3] == 0);
        if (has_const) continue; // E misses this chart origin
        i64 r = chart.group.order;

        if (chart.index <= 2) {
            // With xy in the lowest part the other quadric variable is a bare
            // unit here: E is globally the graph over (z,u) divided by Z_r.
            if (r == 1) continue;
            CyclicQuotient pair =
                make_quotient(r, {chart.group.weights[2], chart.group.weights[3]});
            if (!is_isolated_action(pair))
                throw UnsupportedShapeError(
                    "exceptional surface chart with a non-isolated quotient action");
            out.push_back(quotient_point(chart.index, pair));
            continue;
        }

        // Charts 3 and 4: the restriction is xy plus powers of the other germ
        // variable.  A unit power makes the origin a smooth point of E with a
        // residual action on the quadric pair; otherwise xy + v^k is the
        // A_{k-1} equation (higher powers are absorbed into the unit factor).
        int v = chart.index == 3 ? 3 : 2;
        i64 k_min = -1;
        for (const ChartTerm& t : restricted)
            if (t.e[0] == 0 && t.e[1] == 0)
                k_min = k_min < 0 ? t.e[(size_t)v] : std::min(k_min, t.e[(size_t)v]);
        if (k_min < 0)
            throw InconsistencyError("germ part missing from an exceptional restriction");
        if (k_min == 1) {
            if (r == 1) continue;
            CyclicQuotient pair =
                make_quotient(r, {chart.group.weights[0], chart.group.weights[1]});
            if (!is_isolated_action(pair))
                throw UnsupportedShapeError(
                    "exceptional surface chart with a non-isolated quotient action");
            out.push_back(quotient_point(chart.index, pair));
            continue;
        }
        if (r != 1)
            throw UnsupportedShapeError(
                "exceptional surface chart outside the catalogued shapes");
        SurfaceSingularity s;
        s.chart_index = chart.index;
        s.order = k_min;
        s.du_val = true;
        s.chain = hj_expand(k_min, k_min - 1);
        s.label = "A_" + std::to_string(k_min - 1);
        out.push_back(s);
    }
    return out;
}

CurveSection x_section_curves(const GermModel& g, const WeightVector& w) {
    std::vector<SurfaceSingularity> sings = surface_singularities(g, w);
    if (w.c != w.d)
        throw UnsupportedShapeError(
            "section curve analysis needs equal germ-variable weights");

    auto end_correction_at = [&](int chart_index) -> Rational {
        for (const SurfaceSingularity& s : sings)
            if (s.chart_index == chart_index) return hj_end_correction(s.chain);
        return Rational(0);
    };

    i64 mu = weighted_mult(g, w);
    i64 section_weight = std::min(w.a, w.b);
    int other_quadric_chart = w.a <= w.b ? 2 : 1;
    i64 corner_order = w.a <= w.b ? w.b : w.a;

    std::vector<std::pair<i64, i64>> g0 = lowest_f_terms(g, w);
    i64 min_p = g0.front().first, min_q = g0.front().second;
    for (const auto& [p, q] : g0) {
        min_p = std::min(min_p, p);
        min_q = std::min(min_q, q);
    }

    CurveSection cs;
    cs.total_section =
        Rational(checked_mul(checked_mul(section_weight, section_weight), mu),
                 checked_mul(checked_mul(w.a, w.b), checked_mul(w.c, w.d)));

    if (g0.size() == 1) {
        // z^M or u^M: one line of multiplicity M through the other quadric
        // corner and the corner of the absent germ variable.
        if (min_p > 0 && min_q > 0)
            throw UnsupportedShapeError("section curve with two distinct multiple components");
        i64 m = checked_add(min_p, min_q);
        int germ_chart = min_p > 0 ? 4 : 3;
        cs.component_count = 1;
        cs.section_multiplicity = m;
        cs.pairwise_intersection = Rational(0);
        cs.self_intersection = cs.total_section / Rational(checked_mul(m, m));
        cs.resolved_self_intersection = cs.self_intersection -
                                        end_correction_at(other_quadric_chart) -
                                        end_correction_at(germ_chart);
        return cs;
    }

    if (min_p != 0 || min_q != 0)
        throw UnsupportedShapeError("section curve with components of unequal multiplicity");
    // Squarefree form with both extreme monomials: deg(psi) distinct reduced
    // lines through the other quadric corner, pairwise transverse there.
    i64 deg = 0;
    for (const auto& [p, q] : g0) deg = std::max(deg, p);
    cs.component_count = deg;
    cs.section_multiplicity = 1;
    cs.pairwise_intersection = Rational(1, corner_order);
    Rational crossings =
        Rational(checked_mul(deg, checked_sub(deg, 1))) * cs.pairwise_intersection;
    cs.self_intersection = (cs.total_section - crossings) / Rational(deg);
    cs.resolved_self_intersection =
        cs.self_intersection - end_correction_at(other_quadric_chart);
    return cs;
}

SurfaceReport surface_report(const GermModel& g, const WeightVector& w) {
    SurfaceReport rep;
    rep.k2 = surface_k2(g, w);
    rep.singular_points = surface_singularities(g, w);
    Rational k2res = rep.k2;
    i64 total_curves = 0;
    for (const SurfaceSingularity& s : rep.singular_points) {
        k2res += hj_k2_correction(s.chain);
        total_curves = checked_add(total_curves, (i64)s.chain.size());
    }
    rep.k2_resolution = k2res;
    Rational euler = Rational(12) - k2res;
    if (!euler.is_integer())
        throw InconsistencyError("Noether's formula gives a non-integral Euler number");
    rep.euler_resolution = euler.num;
    rep.b2_resolution = checked_sub(rep.euler_resolution, 2);
    rep.picard = checked_sub(rep.b2_resolution, total_curves);
    if (w.c == w.d) rep.curve = x_section_curves(g, w);
    return rep;
}

std::string render_surface_report(const SurfaceReport& r, const GermModel& g,
                                  const WeightVector& w) {
    std::ostringstream out;
    out << "germ: " << render_germ(g) << '\n';
    out << "weights: " << render_weights(w) << '\n';
    out << "K^2 of E: " << r.k2.str() << '\n';
    if (r.singular_points.empty()) {
        out << "singular points of E: none\n";
    } else {
        out << "singular points of E:\n";
        for (const SurfaceSingularity& s : r.singular_points) {
            out << "  chart " << s.chart_index << ": " << s.label << ", chain [";
            for (size_t i = 0; i < s.chain.size(); ++i) {
                if (i) out << ',';
                out << s.chain[i];
            }
            out << "]\n";
        }
    }
    out << "K^2 of the minimal resolution: " << r.k2_resolution.str() << '\n';
    out << "Euler number of the resolution: " << r.euler_resolution << '\n';
    out << "b_2 of the resolution: " << r.b2_resolution << '\n';
    out << "Picard rank of E: " << r.picard << '\n';
    if (r.curve) {
        const CurveSection& c = *r.curve;
        out << "section curve: " << c.component_count << " component"
            << (c.component_count == 1 ? "" : "s") << ", multiplicity "
            << c.section_multiplicity << '\n';
        out << "  total section square: " << c.total_section.str() << '\n';
        out << "  pairwise intersection: " << c.pairwise_intersection.str() << '\n';
        out << "  component self-intersection: " << c.self_intersection.str() << '\n';
        out << "  resolved self-intersection: " << c.resolved_self_intersection.str() << '\n';
    } else {
        out << "section curve: not computed (unequal germ-variable weights)\n";
    }
    return out.str();
}

} // namespace wbu
