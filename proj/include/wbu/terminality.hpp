// Chart-by-chart singularity analysis and the accept/reject verdict for a
// weighted blow-up candidate.
#pragma once

#include <string>
#include <vector>

#include "wbu/blowup.hpp"

namespace wbu {

enum class PointKind {
    SmoothEverywhere,          // chart carries no singular point at all
    HypersurfaceCA,            // xy + g(z,u) = 0 with trivial group
    CyclicQuotientPoint,       // smooth ambient, cyclic quotient structure
    HyperquotientPoint,        // xy + g(z,u) = 0 divided by a cyclic group
    PositiveDimensionalLocus,  // singular along a curve; never terminal
};

const char* point_kind_name(PointKind kind);

// One singular point (or point orbit) found in a chart.  `quotient` holds
// the residual 3-weight action for quotient points, and the full 4-weight
// action plus equation weight for hyperquotient points.  `orbit_count`
// counts the points of an orbit family found on a stabilized axis.
struct SingularPoint {
    int chart_index = 1;
    PointKind kind = PointKind::SmoothEverywhere;
    CyclicQuotient quotient;
    std::vector<Monomial2> local_equation;  // residual g for (hyper)surface kinds
    i64 orbit_count = 1;
    bool terminal = true;
    std::string description;
    std::string diagnostic;  // nonempty when two terminality tests disagree
};

// Classifies everything singular in one chart.  Smooth charts yield a single
// SmoothEverywhere entry.  Chart shapes outside the catalogued family throw
// UnsupportedShapeError (analysis is never silently guessed).
std::vector<SingularPoint> chart_singularities(const Chart& chart);

struct BlowupVerdict {
    WeightVector weights;
    i64 discrepancy_value = 0;
    bool exceptional_irreducible = false;
    bool exceptional_reduced = false;
    bool terminal = false;
    std::vector<SingularPoint> singular_points;
    std::string rejection_reason;  // empty when accepted

    bool exceptional_ok() const { return exceptional_irreducible && exceptional_reduced; }
    bool accepted() const { return rejection_reason.empty(); }
};

// Gate order: positive discrepancy, then irreducible and reduced exceptional
// part, then chart scans 1..4.  Scanning stops at the first failing gate, and
// rejection_reason names that gate; charts after a failing chart are not
// visited.
BlowupVerdict blowup_verdict(const GermModel& g, const WeightVector& w);

std::string render_singular_point(const SingularPoint& p);
std::string render_verdict(const BlowupVerdict& v, const GermModel& g);

} // namespace wbu
