#include "doctest.h"

#include <sstream>

#include "wbu/errors.hpp"
#include "wbu/surface.hpp"

using namespace wbu;

namespace {

GermModel zn_un(i64 n) {
    return make_germ({{n, 0}, {0, n}});
}

} // namespace

TEST_CASE("equal-power family xy + z^n + u^n at (1, n-1, 1, 1)") {
    for (i64 n = 3; n <= 8; ++n) {
        CAPTURE(n);
        GermModel g = zn_un(n);
        WeightVector w = make_weights(1, n - 1, 1, 1);
        SurfaceReport rep = surface_report(g, w);

        CHECK(rep.k2 == Rational(4 * n, n - 1));
        REQUIRE(rep.singular_points.size() == 1);
        const SurfaceSingularity& s = rep.singular_points[0];
        CHECK(s.chart_index == 2);
        CHECK(s.order == n - 1);
        CHECK(s.chain == std::vector<i64>{n - 1});
        CHECK(s.du_val == (n == 3));
        CHECK(s.label == (n == 3 ? "A_1" : "cyclic 1/" + std::to_string(n - 1) + "(1,1)"));

        CHECK(rep.k2_resolution == Rational(9 - n));
        CHECK(rep.euler_resolution == n + 3);
        CHECK(rep.b2_resolution == n + 1);
        CHECK(rep.picard == n);

        REQUIRE(rep.curve.has_value());
        const CurveSection& c = *rep.curve;
        CHECK(c.component_count == n);
        CHECK(c.section_multiplicity == 1);
        CHECK(c.total_section == Rational(n, n - 1));
        CHECK(c.pairwise_intersection == Rational(1, n - 1));
        CHECK(c.self_intersection == Rational(1, n - 1) - Rational(1));
        CHECK(c.resolved_self_intersection == Rational(-1));
    }
}

TEST_CASE("xy + z^3 + u^4 at both accepted weight vectors") {
    GermModel g = parse_germ("xy + z^3 + u^4");
    for (bool swapped : {false, true}) {
        CAPTURE(swapped);
        WeightVector w = swapped ? make_weights(2, 1, 1, 1) : make_weights(1, 2, 1, 1);
        SurfaceReport rep = surface_report(g, w);

        CHECK(rep.k2 == Rational(6));
        REQUIRE(rep.singular_points.size() == 2);
        CHECK(rep.singular_points[0].chart_index == (swapped ? 1 : 2));
        CHECK(rep.singular_points[0].label == "A_1");
        CHECK(rep.singular_points[0].chain == std::vector<i64>{2});
        CHECK(rep.singular_points[1].chart_index == 4);
        CHECK(rep.singular_points[1].label == "A_2");
        CHECK(rep.singular_points[1].chain == std::vector<i64>{2, 2});

        CHECK(rep.k2_resolution == Rational(6));
        CHECK(rep.euler_resolution == 6);
        CHECK(rep.b2_resolution == 4);
        CHECK(rep.picard == 1);

        REQUIRE(rep.curve.has_value());
        const CurveSection& c = *rep.curve;
        CHECK(c.component_count == 1);
        CHECK(c.section_multiplicity == 3);
        CHECK(c.total_section == Rational(3, 2));
        CHECK(c.pairwise_intersection == Rational(0));
        CHECK(c.self_intersection == Rational(1, 6));
        CHECK(c.resolved_self_intersection == Rational(-1));
    }
}

TEST_CASE("two graph-chart quotient points at (2,2,1,1)") {
    SurfaceReport rep = surface_report(zn_un(4), make_weights(2, 2, 1, 1));
    CHECK(rep.k2 == Rational(4));
    REQUIRE(rep.singular_points.size() == 2);
    CHECK(rep.singular_points[0].chart_index == 1);
    CHECK(rep.singular_points[0].label == "A_1");
    CHECK(rep.singular_points[1].chart_index == 2);
    CHECK(rep.singular_points[1].label == "A_1");
    CHECK(rep.euler_resolution == 8);
    CHECK(rep.picard == 4);

    REQUIRE(rep.curve.has_value());
    CHECK(rep.curve->component_count == 4);
    CHECK(rep.curve->pairwise_intersection == Rational(1, 2));
    CHECK(rep.curve->self_intersection == Rational(-1, 2));
    CHECK(rep.curve->resolved_self_intersection == Rational(-1));
}

TEST_CASE("unequal germ-variable weights leave the section curve out") {
    GermModel g = parse_germ("xy + z^2 + u^5");
    WeightVector w = make_weights(1, 3, 2, 1);
    SurfaceReport rep = surface_report(g, w);
    CHECK(rep.k2 == Rational(6));
    REQUIRE(rep.singular_points.size() == 2);
    CHECK(rep.singular_points[0].chart_index == 2);
    CHECK(rep.singular_points[0].label == "A_2");
    CHECK(rep.singular_points[1].chart_index == 4);
    CHECK(rep.singular_points[1].label == "A_1");
    CHECK(rep.picard == 1);
    CHECK(!rep.curve.has_value());
    CHECK_THROWS_WITH_AS(x_section_curves(g, w),
                         "section curve analysis needs equal germ-variable weights",
                         UnsupportedShapeError);
}

TEST_CASE("surfaces the toolkit refuses to certify") {
    CHECK_THROWS_WITH_AS(
        surface_k2(zn_un(3), make_weights(1, 1, 1, 1)),
        "surface invariants need an irreducible reduced exceptional divisor",
        InvalidInputError);
    CHECK_THROWS_WITH_AS(
        surface_singularities(parse_germ("xy + z^3 + u^4"), make_weights(2, 11, 4, 3)),
        "exceptional surface is singular along a curve",
        UnsupportedShapeError);
    // Interior double point of the lowest form.
    CHECK_THROWS_WITH_AS(
        surface_singularities(parse_germ("xy + z^4 + z^3u + zu^3 + u^4"),
                              make_weights(1, 3, 1, 1)),
        "exceptional surface with singular points away from chart origins",
        UnsupportedShapeError);
    // Interior zeros of the form on a stabilized stratum.
    CHECK_THROWS_WITH_AS(
        surface_singularities(zn_un(3), make_weights(1, 5, 2, 2)),
        "exceptional surface with singular points away from chart origins",
        UnsupportedShapeError);
    // Graph chart over a non-isolated pair action.
    CHECK_THROWS_WITH_AS(
        surface_singularities(parse_germ("xy + zu"), make_weights(1, 2, 2, 1)),
        "exceptional surface chart with a non-isolated quotient action",
        UnsupportedShapeError);
    // Corner with both a residual group and a higher-order equation.
    CHECK_THROWS_WITH_AS(
        surface_singularities(parse_germ("xy + z^5 + u^2"), make_weights(1, 1, 2, 1)),
        "exceptional surface chart outside the catalogued shapes",
        UnsupportedShapeError);
}

TEST_CASE("rendered surface report") {
    GermModel g = parse_germ("xy + z^3 + u^4");
    WeightVector w = make_weights(1, 2, 1, 1);
    CHECK(render_surface_report(surface_report(g, w), g, w) ==
          "germ: xy + u^4 + z^3\n"
          "weights: (1,2,1,1)\n"
          "K^2 of E: 6\n"
          "singular points of E:\n"
          "  chart 2: A_1, chain [2]\n"
          "  chart 4: A_2, chain [2,2]\n"
          "K^2 of the minimal resolution: 6\n"
          "Euler number of the resolution: 6\n"
          "b_2 of the resolution: 4\n"
          "Picard rank of E: 1\n"
          "section curve: 1 component, multiplicity 3\n"
          "  total section square: 3/2\n"
          "  pairwise intersection: 0\n"
          "  component self-intersection: 1/6\n"
          "  resolved self-intersection: -1\n");

    GermModel g25 = parse_germ("xy + z^2 + u^5");
    WeightVector w25 = make_weights(1, 3, 2, 1);
    std::string text = render_surface_report(surface_report(g25, w25), g25, w25);
    CHECK(text.find("section curve: not computed (unequal germ-variable weights)\n") !=
          std::string::npos);
}
