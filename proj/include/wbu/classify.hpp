// Exhaustive classification of weight vectors up to a bound: which weighted
// blow-ups of the germ are terminal extractions, and with what discrepancy.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "wbu/terminality.hpp"

namespace wbu {

enum class ExecutionPolicy { Serial, Parallel };

struct AcceptedEntry {
    WeightVector weights;
    i64 discrepancy = 0;
    bool operator==(const AcceptedEntry&) const = default;
};

struct ClassificationReport {
    GermModel germ;
    i64 bound = 0;
    std::vector<AcceptedEntry> accepted;              // enumeration order
    i64 discrepancy_one_count = 0;
    std::map<std::string, i64> rejected_summary;      // reason -> count
    std::vector<std::vector<WeightVector>> orbits;    // accepted, grouped by
                                                      // germ symmetries
};

// All weight vectors with entries in [1, bound] and gcd 1, ascending
// lexicographic order.  The x<->y and (for z,u-symmetric germs) z<->u
// mirrors are enumerated separately: they define distinct valuations and
// are only grouped afterwards into the report's orbits.
std::vector<WeightVector> enumerate_weights(i64 bound);

// Runs blowup_verdict over the whole enumeration.  The parallel policy uses
// an OpenMP kernel over the flattened index space with a deterministic
// serial merge; the serial policy is the reference implementation and both
// produce identical reports.
ClassificationReport classify_extractions(const GermModel& g, i64 bound,
                                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Number of accepted vectors with discrepancy exactly 1.
i64 count_discrepancy_one(const GermModel& g, i64 bound);

// Applies the germ's symmetry group (a<->b always, c<->d when f is
// z,u-symmetric) to one weight vector; used for orbit grouping and tests.
std::vector<WeightVector> symmetry_images(const GermModel& g, const WeightVector& w);

std::string render_classification(const ClassificationReport& r,
                                  i64 min_discrepancy = 0, i64 max_discrepancy = -1);

} // namespace wbu
