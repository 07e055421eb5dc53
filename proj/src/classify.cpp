// Exhaustive sweep of weight vectors: which weighted blow-ups of the germ
// are terminal extractions, with what discrepancy.  The parallel policy runs
// blowup_verdict over the flattened enumeration with OpenMP and merges
// serially afterwards; the serial policy is the reference implementation and
// produces the identical report (the benchmark asserts this).
#include "wbu/classify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <sstream>

#include "wbu/errors.hpp"

namespace wbu {

std::vector<WeightVector> enumerate_weights(i64 bound) {
    if (bound < 1) throw InvalidInputError("enumeration bound must be >= 1");
    std::vector<WeightVector> out;
    for (i64 a = 1; a <= bound; ++a)
        for (i64 b = 1; b <= bound; ++b)
            for (i64 c = 1; c <= bound; ++c)
                for (i64 d = 1; d <= bound; ++d)
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) == 1)
                        out.push_back(WeightVector{a, b, c, d});
    return out;
}

std::vector<WeightVector> symmetry_images(const GermModel& g, const WeightVector& w) {
    std::vector<WeightVector> images{w, WeightVector{w.b, w.a, w.c, w.d}};
    if (is_zu_symmetric(g)) {
        images.push_back(WeightVector{w.a, w.b, w.d, w.c});
        images.push_back(WeightVector{w.b, w.a, w.d, w.c});
    }
    std::vector<WeightVector> out;
    for (const WeightVector& v : images)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

ClassificationReport classify_extractions(const GermModel& g, i64 bound,
                                          ExecutionPolicy policy) {
    std::vector<WeightVector> vecs = enumerate_weights(bound);
    const i64 n = (i64)vecs.size();
    std::vector<i64> disc(vecs.size(), 0);
    std::vector<char> accepted(vecs.size(), 0);
    std::vector<std::string> reasons(vecs.size());
    std::vector<std::exception_ptr> errors(vecs.size());

    auto run_one = [&](i64 i) {
        try {
            BlowupVerdict v = blowup_verdict(g, vecs[(size_t)i]);
            disc[(size_t)i] = v.discrepancy_value;
            accepted[(size_t)i] = v.accepted() ? 1 : 0;
            if (!v.accepted()) reasons[(size_t)i] = v.rejection_reason;
        } catch (...) {
            errors[(size_t)i] = std::current_exception();
        }
    };

    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
        for (i64 i = 0; i < n; ++i) run_one(i);
    } else {
        for (i64 i = 0; i < n; ++i) run_one(i);
    }
    // Deterministic error propagation: the failure at the smallest index wins
    // under either policy.
    for (i64 i = 0; i < n; ++i)
        if (errors[(size_t)i]) std::rethrow_exception(errors[(size_t)i]);

    ClassificationReport rep;
    rep.germ = g;
    rep.bound = bound;
    std::map<std::array<i64, 4>, size_t> orbit_of;
    for (i64 i = 0; i < n; ++i) {
        if (!accepted[(size_t)i]) {
            ++rep.rejected_summary[reasons[(size_t)i]];
            continue;
        }
        const WeightVector& w = vecs[(size_t)i];
        rep.accepted.push_back(AcceptedEntry{w, disc[(size_t)i]});
        if (disc[(size_t)i] == 1) ++rep.discrepancy_one_count;
        std::array<i64, 4> key{w.a, w.b, w.c, w.d};
        for (const WeightVector& im : symmetry_images(g, w))
            key = std::min(key, std::array<i64, 4>{im.a, im.b, im.c, im.d});
        auto [it, inserted] = orbit_of.try_emplace(key, rep.orbits.size());
        if (inserted)
            rep.orbits.push_back({w});
        else
            rep.orbits[it->second].push_back(w);
    }
    return rep;
}

i64 count_discrepancy_one(const GermModel& g, i64 bound) {
    return classify_extractions(g, bound).discrepancy_one_count;
}

std::string render_classification(const ClassificationReport& r, i64 min_discrepancy,
                                  i64 max_discrepancy) {
    std::ostringstream out;
    out << "germ: " << render_germ(r.germ) << '\n';
    out << "bound: " << r.bound << '\n';
    out << "accepted: " << r.accepted.size() << '\n';
    out << "discrepancy 1 count: " << r.discrepancy_one_count << '\n';
    out << "accepted weight vectors";
    if (min_discrepancy > 0 && max_discrepancy >= 0)
        out << " (discrepancy " << min_discrepancy << ".." << max_discrepancy << ")";
    else if (min_discrepancy > 0)
        out << " (discrepancy >= " << min_discrepancy << ")";
    else if (max_discrepancy >= 0)
        out << " (discrepancy <= " << max_discrepancy << ")";
    out << ":\n";
    for (const AcceptedEntry& e : r.accepted) {
        if (e.discrepancy < min_discrepancy) continue;
        if (max_discrepancy >= 0 && e.discrepancy > max_discrepancy) continue;
        out << "  " << render_weights(e.weights) << " discrepancy " << e.discrepancy << '\n';
    }
    out << "orbits:\n";
    for (const auto& orbit : r.orbits) {
        out << "  {";
        for (size_t i = 0; i < orbit.size(); ++i) {
            out << (i ? ", " : " ") << render_weights(orbit[i]);
        }
        out << " }\n";
    }
    out << "rejected summary:\n";
    for (const auto& [reason, count] : r.rejected_summary)
        out << "  " << reason << ": " << count << '\n';
    return out.str();
}

} // namespace wbu
