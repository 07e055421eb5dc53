// Singularity analysis of blow-up charts and the accept/reject verdict.
//
// A chart carries a semi-invariant equation in (x, y, z, u) with unit
// coefficients and a cyclic group action.  The analysis dispatches on the
// shape of the equation:
//   - a variable occurring exactly once, linearly and alone, makes the chart
//     a graph: smooth ambient space with a residual 3-weight quotient;
//   - a constant term pushes the hypersurface off the origin; only points
//     with nontrivial stabilizer (on coordinate axes and planes) can be
//     singular in the quotient;
//   - the proper hyperbolic shape x*y + g(z,u) is analysed at the origin
//     (hypersurface or hyperquotient point) and along stabilized axes;
//   - degenerate hyperbolic shapes x^s*y, x*y*v^s are singular along a
//     hyperbolic axis.
// Shapes outside this catalogue throw UnsupportedShapeError rather than
// guessing.  Soundness of the positive-dimensional verdicts rests on the
// weights having gcd 1: a group element fixing all three non-chart
// coordinate classes would have order dividing gcd(a,b,c,d), so transverse
// pseudo-reflections (which could smooth a quotient) are impossible in
// every place the code concludes "singular along a curve".
#include "wbu/terminality.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"
#include "poly_util.hpp"

namespace wbu {

const char* point_kind_name(PointKind kind) {
    switch (kind) {
        case PointKind::SmoothEverywhere: return "smooth";
        case PointKind::HypersurfaceCA: return "cA hypersurface point";
        case PointKind::CyclicQuotientPoint: return "cyclic quotient point";
        case PointKind::HyperquotientPoint: return "hyperquotient point";
        case PointKind::PositiveDimensionalLocus:
            return "positive-dimensional singular locus";
    }
    return "unknown";
}

namespace {

enum class TripleClass { Isolated, NonIsolated, Reflection };

// Fixed-point structure of Z_m acting on C^3 with the given weights.
// Reflection (an element fixing a plane pointwise) is reported in
// preference to NonIsolated (an element fixing only an axis): a
// pseudo-reflection can smooth the quotient, while a reflection-free
// non-isolated action never does.  An element killing all three weights
// would make the action non-faithful, which no caller can produce.
TripleClass classify_triple(i64 m, const std::array<i64, 3>& w) {
    std::array<i64, 3> red{};
    for (int j = 0; j < 3; ++j) red[j] = mod_floor(w[j], m);
    bool reflection = false, non_isolated = false;
    for (i64 k = 1; k < m; ++k) {
        int zeros = 0;
        for (i64 wj : red)
            if (mod_floor(checked_mul(k, wj), m) == 0) ++zeros;
        if (zeros == 3)
            throw InconsistencyError("triple quotient action has a kernel");
        if (zeros == 2) reflection = true;
        else if (zeros == 1) non_isolated = true;
    }
    if (reflection) return TripleClass::Reflection;
    if (non_isolated) return TripleClass::NonIsolated;
    return TripleClass::Isolated;
}

// C^2 / Z_m(alpha, beta) is smooth iff the action is generated by
// pseudo-reflections, i.e. lcm(gcd(m, alpha), gcd(m, beta)) == m.
bool pair_smooth(i64 m, i64 alpha, i64 beta) {
    const i64 g1 = std::gcd(m, mod_floor(alpha, m));
    const i64 g2 = std::gcd(m, mod_floor(beta, m));
    return g1 / std::gcd(g1, g2) * g2 == m;
}

bool is_const_term(const ChartTerm& t) {
    return t.e == std::array<i64, 4>{0, 0, 0, 0};
}

bool is_unit_at(const ChartTerm& t, int v) {
    for (int j = 0; j < 4; ++j)
        if (t.e[j] != (j == v ? 1 : 0)) return false;
    return true;
}

std::string equation_string(const std::vector<Monomial2>& g) {
    std::ostringstream out;
    out << "xy";
    for (const auto& mono : g) {
        out << " + ";
        if (mono.p == 0 && mono.q == 0) { out << '1'; continue; }
        if (mono.p > 0) { out << 'z'; if (mono.p > 1) out << '^' << mono.p; }
        if (mono.q > 0) { out << 'u'; if (mono.q > 1) out << '^' << mono.q; }
    }
    return out.str();
}

std::string group_string(const CyclicQuotient& q) {
    std::ostringstream out;
    out << "Z_" << q.order << '(';
    for (size_t j = 0; j < q.weights.size(); ++j) {
        if (j) out << ',';
        out << q.weights[j];
    }
    out << ')';
    return out.str();
}

std::string describe(const SingularPoint& p) {
    const std::string tail = p.terminal ? ", terminal" : ", non-terminal";
    switch (p.kind) {
        case PointKind::SmoothEverywhere:
            return "smooth";
        case PointKind::PositiveDimensionalLocus:
            return "positive-dimensional singular locus, non-terminal";
        case PointKind::CyclicQuotientPoint:
            if (p.orbit_count > 1)
                return "orbit of " + std::to_string(p.orbit_count) +
                       " cyclic quotient points " + render_quotient(p.quotient) + tail;
            return "cyclic quotient point " + render_quotient(p.quotient) + tail;
        case PointKind::HypersurfaceCA:
            return "hypersurface point " + equation_string(p.local_equation) +
                   " = 0" + tail;
        case PointKind::HyperquotientPoint:
            return "hyperquotient point { " + equation_string(p.local_equation) +
                   " = 0 } / " + group_string(p.quotient) + tail;
    }
    return "";
}

SingularPoint smooth_entry(int chart_index) {
    SingularPoint p;
    p.chart_index = chart_index;
    p.kind = PointKind::SmoothEverywhere;
    p.terminal = true;
    p.description = describe(p);
    return p;
}

SingularPoint posdim_entry(int chart_index) {
    SingularPoint p;
    p.chart_index = chart_index;
    p.kind = PointKind::PositiveDimensionalLocus;
    p.terminal = false;
    p.description = describe(p);
    return p;
}

SingularPoint quotient_point_entry(int chart_index, i64 m,
                                   const std::array<i64, 3>& triple,
                                   i64 orbit_count) {
    SingularPoint p;
    p.chart_index = chart_index;
    p.kind = PointKind::CyclicQuotientPoint;
    p.quotient = make_quotient(m, {triple[0], triple[1], triple[2]});
    p.orbit_count = orbit_count;
    p.terminal = is_terminal_quotient(p.quotient);
    p.description = describe(p);
    return p;
}

} // namespace

std::vector<SingularPoint> chart_singularities(const Chart& chart) {
    const i64 r = chart.group.order;
    const auto& gw = chart.group.weights;  // reduced into [0, r)
    const int ci = chart.index - 1;        // chart variable position

    // ---- graph shape: some variable occurs exactly once, as a unit -------
    int bare = -1;
    for (int v = 0; v < 4 && bare < 0; ++v) {
        bool unit = false;
        int occurrences = 0;
        for (const auto& t : chart.terms) {
            if (is_unit_at(t, v)) unit = true;
            if (t.e[v] >= 1) ++occurrences;
        }
        if (unit && occurrences == 1) bare = v;
    }
    if (bare >= 0) {
        // Solving for the bare variable exhibits the hypersurface as the
        // graph of a semi-invariant function: smooth, with the residual
        // action on the remaining three coordinates.
        if (r == 1) return {smooth_entry(chart.index)};
        std::array<i64, 3> triple{};
        i64 common = r;
        for (int j = 0, idx = 0; j < 4; ++j)
            if (j != bare) {
                triple[idx++] = gw[j];
                common = std::gcd(common, gw[j]);
            }
        if (common != 1)
            throw InconsistencyError("residual action of a graph chart is not faithful");
        switch (classify_triple(r, triple)) {
            case TripleClass::Reflection:
                throw UnsupportedShapeError("graph chart with a residual pseudo-reflection");
            case TripleClass::NonIsolated:
                return {posdim_entry(chart.index)};
            case TripleClass::Isolated:
                return {quotient_point_entry(chart.index, r, triple, 1)};
        }
    }

    // ---- shared scans over stabilized axes and planes --------------------

    // For each non-chart coordinate axis stabilized by a subgroup Z_m, the
    // terms supported on the axis alone restrict to t^{e_min} * phi(t); the
    // roots of phi are smooth points of the hypersurface (when phi is
    // squarefree) carrying a residual 3-weight Z_m quotient.  An empty
    // restriction means the whole axis lies inside the hypersurface; that
    // only occurs for the proper hyperbolic shape, whose germ part is
    // passed in as `mixed_g`.
    auto scan_axis_families = [&](const std::vector<ChartTerm>& eq,
                                  const std::vector<Monomial2>* mixed_g,
                                  std::vector<SingularPoint>& out) {
        for (int v = 0; v < 4; ++v) {
            if (v == ci) continue;
            const i64 m = std::gcd(r, gw[v]);
            if (m == 1) continue;
            std::vector<i64> exps;
            for (const auto& t : eq) {
                bool on_axis_alone = true;
                for (int j = 0; j < 4; ++j)
                    if (j != v && t.e[j] != 0) { on_axis_alone = false; break; }
                if (on_axis_alone) exps.push_back(t.e[v]);
            }
            std::sort(exps.begin(), exps.end());
            exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

            if (exps.empty()) {
                if (mixed_g == nullptr)
                    throw InconsistencyError("constant term missing from an axis restriction");
                if (v <= 1) {
                    // Hyperbolic axis inside x*y + g = 0: punctured axis is
                    // smooth on the hypersurface, transverse pair (z, u).
                    if (!pair_smooth(m, gw[2], gw[3]))
                        out.push_back(posdim_entry(chart.index));
                    continue;
                }
                // Germ axis inside the hypersurface: smoothness along it is
                // governed by the terms with minimal exponent in the other
                // germ variable.
                i64 alpha_min = -1;
                std::vector<i64> achiever_exponents;  // axis-variable exponents
                for (const auto& mono : *mixed_g) {
                    const i64 other_e = (v == 2) ? mono.q : mono.p;
                    const i64 axis_e = (v == 2) ? mono.p : mono.q;
                    if (alpha_min < 0 || other_e < alpha_min) {
                        alpha_min = other_e;
                        achiever_exponents = {axis_e};
                    } else if (other_e == alpha_min) {
                        achiever_exponents.push_back(axis_e);
                    }
                }
                std::sort(achiever_exponents.begin(), achiever_exponents.end());
                achiever_exponents.erase(std::unique(achiever_exponents.begin(),
                                                     achiever_exponents.end()),
                                         achiever_exponents.end());
                if (achiever_exponents.size() >= 2)
                    throw UnsupportedShapeError(
                        "degenerate leading coefficient along a stabilized axis");
                if (alpha_min == 1) {
                    // Punctured axis smooth on the hypersurface; transverse
                    // pair is the hyperbolic one.
                    if (!pair_smooth(m, gw[0], gw[1]))
                        out.push_back(posdim_entry(chart.index));
                } else {
                    // The hypersurface itself is singular along the axis.  A
                    // transverse pseudo-reflection could smooth the quotient,
                    // but it would fix both hyperbolic classes and the axis
                    // class, forcing a common divisor of all four blow-up
                    // weights.
                    if (std::gcd(std::gcd(m, gw[0]), gw[1]) > 1)
                        throw InconsistencyError(
                            "stabilized singular axis with a hyperbolic pseudo-reflection");
                    out.push_back(posdim_entry(chart.index));
                }
                continue;
            }

            if (exps.size() == 1) continue;  // axis meets X in at most the origin
            const i64 e_min = exps.front();
            const i64 N = exps.back() - e_min;
            std::vector<i64> cofactor;
            for (i64 e : exps) {
                if (mod_floor(checked_mul(e - e_min, gw[v]), r) != 0)
                    throw InconsistencyError("axis restriction is not semi-invariant");
                cofactor.push_back(e - e_min);
            }
            if (cofactor.size() > 2 && !detail::exponents_squarefree(cofactor))
                throw UnsupportedShapeError("multiple root on a stabilized axis");
            if (checked_mul(N, m) % r != 0)
                throw InconsistencyError("axis root orbits do not close up");
            const i64 orbit_count = checked_mul(N, m) / r;
            std::array<i64, 3> triple{};
            for (int j = 0, idx = 0; j < 4; ++j)
                if (j != v) triple[idx++] = mod_floor(gw[j], m);
            switch (classify_triple(m, triple)) {
                case TripleClass::Reflection:
                    throw InconsistencyError(
                        "stabilized axis with a transverse pseudo-reflection");
                case TripleClass::NonIsolated:
                    out.push_back(posdim_entry(chart.index));
                    break;
                case TripleClass::Isolated:
                    out.push_back(quotient_point_entry(chart.index, m, triple, orbit_count));
                    break;
            }
        }
    };

    // Coordinate planes pointwise stabilized by a subgroup Z_{m'} > 1: any
    // term besides the constant one cuts a curve on the plane, every point
    // of which is singular in the quotient (a transverse pseudo-reflection
    // would again force a common divisor of all four weights).
    auto scan_planes = [&](std::vector<SingularPoint>& out) {
        std::array<int, 3> others{};
        for (int j = 0, idx = 0; j < 4; ++j)
            if (j != ci) others[idx++] = j;
        for (int i1 = 0; i1 < 3; ++i1)
            for (int i2 = i1 + 1; i2 < 3; ++i2) {
                const int v = others[i1], w = others[i2];
                const i64 mp = std::gcd(r, std::gcd(gw[v], gw[w]));
                if (mp == 1) continue;
                bool cuts_curve = false;
                for (const auto& t : chart.terms) {
                    if (is_const_term(t)) continue;
                    bool in_plane = true;
                    for (int j = 0; j < 4; ++j)
                        if (j != v && j != w && t.e[j] != 0) { in_plane = false; break; }
                    if (in_plane) { cuts_curve = true; break; }
                }
                if (cuts_curve) out.push_back(posdim_entry(chart.index));
            }
    };

    // ---- constant term: hypersurface misses the origin -------------------
    const bool has_const =
        std::any_of(chart.terms.begin(), chart.terms.end(), is_const_term);
    if (has_const) {
        int pure_count = 0;
        for (const auto& t : chart.terms) {
            if (is_const_term(t)) continue;
            if (t.e[0] >= 1 && t.e[1] >= 1) {
                if (!(t.e[0] == 1 && t.e[1] == 1 && (t.e[2] == 0 || t.e[3] == 0)))
                    throw UnsupportedShapeError(
                        "constant-term chart with an uncatalogued hyperbolic term");
            } else if (t.e[0] == 0 && t.e[1] == 0) {
                ++pure_count;
            } else {
                throw UnsupportedShapeError(
                    "constant-term chart mixing hyperbolic and germ variables");
            }
        }
        if (pure_count > 1)
            throw UnsupportedShapeError(
                "constant-term chart with several germ-variable terms");
        // With these shapes the hypersurface is smooth at every point of the
        // chart (from F = 0 and x F_x = 0 the remaining terms force 1 = 0),
        // so only the group contributes singular points.
        std::vector<SingularPoint> out;
        if (r > 1) {
            scan_axis_families(chart.terms, nullptr, out);
            scan_planes(out);
        }
        if (out.empty()) return {smooth_entry(chart.index)};
        return out;
    }

    // ---- hyperbolic shapes ------------------------------------------------
    const ChartTerm* hyp = nullptr;
    int hyp_count = 0;
    for (const auto& t : chart.terms)
        if (t.e[0] >= 1 && t.e[1] >= 1) { hyp = &t; ++hyp_count; }
    if (hyp_count != 1)
        throw UnsupportedShapeError("chart equation without a unique hyperbolic term");

    if (hyp->e != std::array<i64, 4>{1, 1, 0, 0}) {
        // Degenerate hyperbolic term x^s y, x y^s (s >= 2) or x y v^s
        // (s >= 1): the chart is singular along a hyperbolic axis, provided
        // no stray low-degree term smooths that axis.
        if (ci <= 1) {
            const int co = 1 - ci;
            if (!(hyp->e[co] == 1 && hyp->e[2] == 0 && hyp->e[3] == 0 &&
                  hyp->e[ci] >= 2))
                throw UnsupportedShapeError("uncatalogued hyperbolic term");
            // Singular along the co-variable's axis; terms vanishing there
            // to order < 2 would break that.
            for (const auto& t : chart.terms) {
                if (&t == hyp) continue;
                if (t.e[2] + t.e[3] == 0)
                    throw UnsupportedShapeError("pure hyperbolic power term");
                if (t.e[ci] == 0 && t.e[2] + t.e[3] == 1)
                    throw UnsupportedShapeError(
                        "degenerate hyperbolic shape with a linear germ term");
            }
            return {posdim_entry(chart.index)};
        }
        if (!(hyp->e[0] == 1 && hyp->e[1] == 1 && hyp->e[5 - ci] == 0 &&
              hyp->e[ci] >= 1))
            throw UnsupportedShapeError("uncatalogued hyperbolic term");
        // Singular along the x-axis or the y-axis; a term linear in the
        // germ variables and free of the respective other hyperbolic
        // variable would break the corresponding axis.
        bool x_axis_ok = true, y_axis_ok = true;
        for (const auto& t : chart.terms) {
            if (&t == hyp) continue;
            if (t.e[2] + t.e[3] == 0)
                throw UnsupportedShapeError("pure hyperbolic power term");
            if (t.e[2] + t.e[3] == 1) {
                if (t.e[1] == 0) x_axis_ok = false;
                if (t.e[0] == 0) y_axis_ok = false;
            }
        }
        if (!x_axis_ok && !y_axis_ok)
            throw UnsupportedShapeError(
                "degenerate hyperbolic shape with a linear germ term");
        return {posdim_entry(chart.index)};
    }

    // ---- proper shape x*y + g(z, u) ----------------------------------------
    std::vector<Monomial2> g;
    for (const auto& t : chart.terms) {
        if (&t == hyp) continue;
        if (t.e[0] >= 1 || t.e[1] >= 1) {
            // Image still carrying a hyperbolic power: absorbed by the
            // equivariant change y -> y + x^{e0-1} z^p u^q (resp. x -> ...),
            // after which it is gone from the equation; it never meets the
            // axes scanned below.
            if (t.e[2] + t.e[3] == 0)
                throw UnsupportedShapeError("pure hyperbolic power term");
            continue;
        }
        g.push_back(Monomial2{t.e[2], t.e[3]});
    }
    if (g.empty())  // x*y = 0: two planes crossing along a line
        return {posdim_entry(chart.index)};

    i64 common_p = g.front().p, common_q = g.front().q;
    i64 min_deg = g.front().p + g.front().q;
    for (const auto& mono : g) {
        common_p = std::min(common_p, mono.p);
        common_q = std::min(common_q, mono.q);
        min_deg = std::min(min_deg, mono.p + mono.q);
    }
    if (common_p >= 2 || common_q >= 2) {
        // g divisible by z^2 (resp. u^2): the hypersurface is singular along
        // the u-axis (resp. z-axis), and a transverse pseudo-reflection
        // would force a common divisor of all four weights.
        return {posdim_entry(chart.index)};
    }
    if (g.size() >= 3)
        throw UnsupportedShapeError("germ part with three or more monomials");

    std::vector<SingularPoint> out;
    if (min_deg >= 2) {
        // Origin is a cA hypersurface point (g squarefree by the gate
        // above), possibly divided by the chart group.
        SingularPoint p;
        p.chart_index = chart.index;
        p.local_equation = g;
        if (r == 1) {
            p.kind = PointKind::HypersurfaceCA;
            p.terminal = true;
        } else {
            p.kind = PointKind::HyperquotientPoint;
            p.quotient = chart.group;
            const bool refined = is_terminal_cA_hyperquotient(chart.group, g);
            const bool screen = is_terminal_hyperquotient(chart.group);
            p.terminal = refined;
            if (screen != refined)
                p.diagnostic =
                    std::string("fractional-inequality screen disagrees: would report ") +
                    (screen ? "terminal" : "non-terminal");
        }
        p.description = describe(p);
        out.push_back(std::move(p));
    } else if (r > 1) {
        // A linear germ monomial: the origin is a smooth hypersurface point
        // with a residual quotient on the complementary coordinates.  (If
        // both germ variables occur linearly their classes agree mod r and
        // the choice does not matter.)
        int lin_pos = -1;
        for (const auto& mono : g)
            if (mono.p + mono.q == 1) { lin_pos = (mono.p == 1) ? 2 : 3; break; }
        std::array<i64, 3> triple{};
        for (int j = 0, idx = 0; j < 4; ++j)
            if (j != lin_pos) triple[idx++] = gw[j];
        switch (classify_triple(r, triple)) {
            case TripleClass::Reflection:
                throw UnsupportedShapeError("origin slice with a residual pseudo-reflection");
            case TripleClass::NonIsolated:
                out.push_back(posdim_entry(chart.index));
                break;
            case TripleClass::Isolated:
                out.push_back(quotient_point_entry(chart.index, r, triple, 1));
                break;
        }
    }
    if (r > 1) {
        std::vector<ChartTerm> eq;
        eq.push_back(*hyp);
        for (const auto& mono : g)
            eq.push_back(ChartTerm{{0, 0, mono.p, mono.q}});
        scan_axis_families(eq, &g, out);
    }
    if (out.empty()) return {smooth_entry(chart.index)};
    return out;
}

BlowupVerdict blowup_verdict(const GermModel& g, const WeightVector& w) {
    BlowupVerdict v;
    v.weights = w;
    v.discrepancy_value = discrepancy(g, w);
    const auto exc = exceptional_part(g, w);
    v.exceptional_irreducible = exc.irreducible;
    v.exceptional_reduced = exc.reduced;

    if (v.discrepancy_value <= 0) {
        v.rejection_reason = "not an extraction with positive discrepancy";
        return v;
    }
    if (!v.exceptional_irreducible) {
        v.rejection_reason = "reducible exceptional divisor";
        return v;
    }
    if (!v.exceptional_reduced) {
        v.rejection_reason = "non-reduced exceptional divisor";
        return v;
    }

    const auto charts = make_charts(g, w);
    for (const auto& chart : charts) {
        bool pos_dim = false, non_terminal = false;
        for (auto& p : chart_singularities(chart)) {
            if (p.kind == PointKind::SmoothEverywhere) continue;
            if (p.kind == PointKind::PositiveDimensionalLocus) pos_dim = true;
            else if (!p.terminal) non_terminal = true;
            v.singular_points.push_back(std::move(p));
        }
        if (pos_dim) {
            v.rejection_reason =
                "positive-dimensional singular locus in chart " + std::to_string(chart.index);
            return v;
        }
        if (non_terminal) {
            v.rejection_reason =
                "non-terminal point in chart " + std::to_string(chart.index);
            return v;
        }
    }
    v.terminal = true;
    return v;
}

std::string render_singular_point(const SingularPoint& p) {
    std::string line = "chart " + std::to_string(p.chart_index) + ": " + p.description;
    if (!p.diagnostic.empty()) line += " (" + p.diagnostic + ")";
    return line;
}

std::string render_verdict(const BlowupVerdict& v, const GermModel& g) {
    std::ostringstream out;
    out << "germ: " << render_germ(g) << '\n';
    out << "weights: " << render_weights(v.weights) << '\n';
    out << "discrepancy: " << v.discrepancy_value << '\n';
    out << "exceptional divisor: "
        << (v.exceptional_irreducible ? "irreducible" : "reducible") << ", "
        << (v.exceptional_reduced ? "reduced" : "non-reduced") << '\n';
    for (const auto& p : v.singular_points)
        out << render_singular_point(p) << '\n';
    if (v.accepted())
        out << "verdict: accepted (terminal extraction with discrepancy "
            << v.discrepancy_value << ")\n";
    else
        out << "verdict: rejected (" << v.rejection_reason << ")\n";
    return out.str();
}

} // namespace wbu
