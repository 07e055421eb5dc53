#include "doctest.h"

#include <numeric>

#include "wbu/classify.hpp"
#include "wbu/errors.hpp"
#include "wbu/report_json.hpp"

using namespace wbu;

TEST_CASE("weight enumeration is the primitive lattice box") {
    std::vector<WeightVector> v2 = enumerate_weights(2);
    CHECK(v2.size() == 15);  // 2^4 minus (2,2,2,2)
    CHECK(v2.front() == WeightVector{1, 1, 1, 1});
    CHECK(v2.back() == WeightVector{2, 2, 2, 1});
    for (size_t i = 1; i < v2.size(); ++i) {
        std::array<i64, 4> prev{v2[i - 1].a, v2[i - 1].b, v2[i - 1].c, v2[i - 1].d};
        std::array<i64, 4> cur{v2[i].a, v2[i].b, v2[i].c, v2[i].d};
        CHECK(prev < cur);
    }

    // Moebius inclusion-exclusion over common divisors g <= 8:
    // sum_g mu(g) * floor(8/g)^4.
    const i64 mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0};
    i64 expected = 0;
    for (i64 g = 1; g <= 8; ++g) {
        i64 box = 8 / g;
        expected += mu[g] * box * box * box * box;
    }
    CHECK(expected == 3823);
    CHECK(enumerate_weights(8).size() == 3823);

    CHECK_THROWS_AS(enumerate_weights(0), InvalidInputError);
}

TEST_CASE("symmetry images") {
    GermModel asym = parse_germ("xy + z^3 + u^4");
    GermModel sym = parse_germ("xy + z^3 + u^3");
    CHECK(symmetry_images(asym, make_weights(1, 2, 1, 1)) ==
          std::vector<WeightVector>{{1, 2, 1, 1}, {2, 1, 1, 1}});
    CHECK(symmetry_images(asym, make_weights(1, 2, 1, 2)) ==
          std::vector<WeightVector>{{1, 2, 1, 2}, {2, 1, 1, 2}});
    CHECK(symmetry_images(sym, make_weights(1, 2, 1, 2)) ==
          std::vector<WeightVector>{
              {1, 2, 1, 2}, {2, 1, 1, 2}, {1, 2, 2, 1}, {2, 1, 2, 1}});
    CHECK(symmetry_images(sym, make_weights(1, 1, 1, 1)).size() == 1);
}

TEST_CASE("classification of xy + z^3 + u^4 up to bound 8") {
    GermModel g = parse_germ("xy + z^3 + u^4");
    ClassificationReport rep = classify_extractions(g, 8);
    CHECK(rep.bound == 8);
    CHECK(rep.accepted ==
          std::vector<AcceptedEntry>{{make_weights(1, 2, 1, 1), 1},
                                     {make_weights(2, 1, 1, 1), 1}});
    CHECK(rep.discrepancy_one_count == 2);
    REQUIRE(rep.orbits.size() == 1);
    CHECK(rep.orbits[0] ==
          std::vector<WeightVector>{{1, 2, 1, 1}, {2, 1, 1, 1}});
    i64 rejected = 0;
    for (const auto& [reason, count] : rep.rejected_summary) {
        CHECK(count > 0);
        rejected += count;
    }
    CHECK(rejected == 3823 - 2);
}

TEST_CASE("classification of the symmetric cubic up to bound 3") {
    GermModel g = parse_germ("xy + z^3 + u^3");
    ClassificationReport rep = classify_extractions(g, 3);
    CHECK(rep.accepted ==
          std::vector<AcceptedEntry>{{make_weights(1, 2, 1, 1), 1},
                                     {make_weights(2, 1, 1, 1), 1}});
    CHECK(rep.orbits.size() == 1);
    CHECK(count_discrepancy_one(g, 10) == 2);
}

TEST_CASE("serial and parallel policies produce the identical report") {
    GermModel g = parse_germ("xy + z^3 + u^4");
    ClassificationReport serial = classify_extractions(g, 6, ExecutionPolicy::Serial);
    ClassificationReport parallel = classify_extractions(g, 6, ExecutionPolicy::Parallel);
    CHECK(to_stable_string(classification_json(serial)) ==
          to_stable_string(classification_json(parallel)));
    CHECK(serial.accepted == parallel.accepted);
    CHECK(serial.rejected_summary == parallel.rejected_summary);
}

TEST_CASE("rejection reasons stay within the published vocabulary") {
    GermModel g = parse_germ("xy + z^2 + u^5");
    ClassificationReport rep = classify_extractions(g, 5);
    for (const auto& [reason, count] : rep.rejected_summary) {
        CAPTURE(reason);
        bool known =
            reason == "not an extraction with positive discrepancy" ||
            reason == "reducible exceptional divisor" ||
            reason == "non-reduced exceptional divisor" ||
            reason.rfind("positive-dimensional singular locus in chart", 0) == 0 ||
            reason.rfind("non-terminal point in chart", 0) == 0;
        CHECK(known);
        CHECK(count > 0);
    }
    CHECK(rep.discrepancy_one_count == 1);  // only (1,1,1,1) at deg_min 2
}

TEST_CASE("rendered classification with and without discrepancy filters") {
    GermModel g = parse_germ("xy + z^3 + u^4");
    ClassificationReport rep = classify_extractions(g, 2);
    CHECK(render_classification(rep) ==
          "germ: xy + u^4 + z^3\n"
          "bound: 2\n"
          "accepted: 2\n"
          "discrepancy 1 count: 2\n"
          "accepted weight vectors:\n"
          "  (1,2,1,1) discrepancy 1\n"
          "  (2,1,1,1) discrepancy 1\n"
          "orbits:\n"
          "  { (1,2,1,1), (2,1,1,1) }\n"
          "rejected summary:\n"
          "  positive-dimensional singular locus in chart 1: 2\n"
          "  positive-dimensional singular locus in chart 2: 1\n"
          "  reducible exceptional divisor: 10\n");
    std::string filtered = render_classification(rep, 2, -1);
    CHECK(filtered.find("accepted weight vectors (discrepancy >= 2):\n"
                        "orbits:\n") != std::string::npos);
    std::string banded = render_classification(rep, 1, 1);
    CHECK(banded.find("accepted weight vectors (discrepancy 1..1):\n"
                      "  (1,2,1,1) discrepancy 1\n") != std::string::npos);
}
