// JSON encodings with fixed key order.  Rational values are emitted as
// their exact "p/q" strings, never as floating point, so encoded reports
// are byte-stable and lossless.
#include "wbu/report_json.hpp"

namespace wbu {

namespace {

ordered_json weights_array(const WeightVector& w) {
    return ordered_json::array({w.a, w.b, w.c, w.d});
}

} // namespace

ordered_json charts_json(const GermModel& g, const WeightVector& w) {
    ordered_json j;
    j["germ"] = render_germ(g);
    j["weights"] = weights_array(w);
    j["weighted_multiplicity"] = weighted_mult(g, w);
    j["discrepancy"] = discrepancy(g, w);
    ordered_json charts = ordered_json::array();
    for (const Chart& chart : make_charts(g, w)) {
        ordered_json cj;
        cj["index"] = chart.index;
        cj["equation"] = render_terms(chart.terms);
        ordered_json grp;
        grp["order"] = chart.group.order;
        grp["weights"] = ordered_json::array({chart.display_weights[0], chart.display_weights[1],
                                              chart.display_weights[2], chart.display_weights[3]});
        cj["group"] = grp;
        cj["origin_in_exceptional"] = chart.origin_in_exceptional;
        cj["rendered"] = render_chart(chart);
        charts.push_back(cj);
    }
    j["charts"] = charts;
    return j;
}

ordered_json verdict_json(const BlowupVerdict& v, const GermModel& g) {
    ordered_json j;
    j["germ"] = render_germ(g);
    j["weights"] = weights_array(v.weights);
    j["discrepancy"] = v.discrepancy_value;
    ordered_json exc;
    exc["irreducible"] = v.exceptional_irreducible;
    exc["reduced"] = v.exceptional_reduced;
    j["exceptional"] = exc;
    j["terminal"] = v.terminal;
    ordered_json pts = ordered_json::array();
    for (const SingularPoint& p : v.singular_points) {
        ordered_json pj;
        pj["chart"] = p.chart_index;
        pj["kind"] = point_kind_name(p.kind);
        pj["description"] = p.description;
        pj["orbit_count"] = p.orbit_count;
        pj["terminal"] = p.terminal;
        pj["diagnostic"] = p.diagnostic;
        pts.push_back(pj);
    }
    j["singular_points"] = pts;
    j["rejection_reason"] = v.rejection_reason;
    return j;
}

ordered_json surface_json(const SurfaceReport& r, const GermModel& g, const WeightVector& w) {
    ordered_json j;
    j["germ"] = render_germ(g);
    j["weights"] = weights_array(w);
    j["k2"] = r.k2.str();
    ordered_json pts = ordered_json::array();
    for (const SurfaceSingularity& s : r.singular_points) {
        ordered_json sj;
        sj["chart"] = s.chart_index;
        sj["label"] = s.label;
        sj["order"] = s.order;
        sj["du_val"] = s.du_val;
        sj["chain"] = s.chain;
        pts.push_back(sj);
    }
    j["singular_points"] = pts;
    j["k2_resolution"] = r.k2_resolution.str();
    j["euler_resolution"] = r.euler_resolution;
    j["b2_resolution"] = r.b2_resolution;
    j["picard"] = r.picard;
    if (r.curve) {
        ordered_json cj;
        cj["components"] = r.curve->component_count;
        cj["multiplicity"] = r.curve->section_multiplicity;
        cj["total"] = r.curve->total_section.str();
        cj["pairwise"] = r.curve->pairwise_intersection.str();
        cj["self"] = r.curve->self_intersection.str();
        cj["resolved_self"] = r.curve->resolved_self_intersection.str();
        j["section_curve"] = cj;
    } else {
        j["section_curve"] = nullptr;
    }
    return j;
}

ordered_json classification_json(const ClassificationReport& r, i64 min_discrepancy,
                                 i64 max_discrepancy) {
    ordered_json j;
    j["germ"] = render_germ(r.germ);
    j["bound"] = r.bound;
    ordered_json acc = ordered_json::array();
    for (const AcceptedEntry& e : r.accepted) {
        if (e.discrepancy < min_discrepancy) continue;
        if (max_discrepancy >= 0 && e.discrepancy > max_discrepancy) continue;
        ordered_json ej;
        ej["weights"] = weights_array(e.weights);
        ej["discrepancy"] = e.discrepancy;
        acc.push_back(ej);
    }
    j["accepted"] = acc;
    j["discrepancy_one_count"] = r.discrepancy_one_count;
    ordered_json rej = ordered_json::object();
    for (const auto& [reason, count] : r.rejected_summary) rej[reason] = count;
    j["rejected_summary"] = rej;
    ordered_json orbits = ordered_json::array();
    for (const auto& orbit : r.orbits) {
        ordered_json oj = ordered_json::array();
        for (const WeightVector& w : orbit) oj.push_back(weights_array(w));
        orbits.push_back(oj);
    }
    j["orbits"] = orbits;
    return j;
}

std::string to_stable_string(const ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace wbu
