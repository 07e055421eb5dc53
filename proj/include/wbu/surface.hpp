// Invariants of the exceptional surface E = { lowest part = 0 } in
// P(a,b,c,d): K^2, Du Val / cyclic singularities, resolution invariants and
// the section-curve intersection numbers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbu/blowup.hpp"

namespace wbu {

struct SurfaceSingularity {
    int chart_index = 1;
    i64 order = 1;
    bool du_val = false;
    std::vector<i64> chain;  // minimal resolution chain self-intersections b_i
    std::string label;       // "A_1", "A_2", "cyclic 1/4(1,1)"
};

// (mu - sigma)^2 * mu / (a*b*c*d) with sigma = a+b+c+d.  Requires the
// exceptional part to be irreducible and reduced (InvalidInputError else).
Rational surface_k2(const GermModel& g, const WeightVector& w);

// Singular points of E, located at chart origins, with their resolution
// chains.  Shapes outside the catalogued family throw UnsupportedShapeError.
std::vector<SurfaceSingularity> surface_singularities(const GermModel& g,
                                                      const WeightVector& w);

// The reduced curve cut on E by the smaller of the two quadric coordinates.
struct CurveSection {
    i64 component_count = 0;
    i64 section_multiplicity = 1;        // divisor multiplicity of the section
    Rational total_section;              // (section weight)^2 * mu / (abcd)
    Rational pairwise_intersection;      // between distinct components
    Rational self_intersection;          // of one component on E
    Rational resolved_self_intersection; // of its strict transform upstairs
};

CurveSection x_section_curves(const GermModel& g, const WeightVector& w);

struct SurfaceReport {
    Rational k2;
    std::vector<SurfaceSingularity> singular_points;
    Rational k2_resolution;   // k2 + sum_i d_i (b_i - 2) over all chains
    i64 euler_resolution = 0; // 12 - k2_resolution (Noether)
    i64 b2_resolution = 0;    // euler_resolution - 2
    i64 picard = 0;           // b2_resolution - total exceptional curves
    std::optional<CurveSection> curve;
};

SurfaceReport surface_report(const GermModel& g, const WeightVector& w);

std::string render_surface_report(const SurfaceReport& r, const GermModel& g,
                                  const WeightVector& w);

} // namespace wbu
