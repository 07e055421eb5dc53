// Weighted blow-up of the germ: affine charts, discrepancy, and the
// exceptional divisor's lowest-weight part.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "wbu/germ.hpp"
#include "wbu/quotient.hpp"

namespace wbu {

// A monomial of a chart equation as an exponent vector over (x, y, z, u).
struct ChartTerm {
    std::array<i64, 4> e{0, 0, 0, 0};
    bool operator==(const ChartTerm&) const = default;
};

// Chart i of the weighted blow-up with weights w: substitute
// x_j -> x_j * x_i^{w_j} (j != i), x_i -> x_i^{w_i}, divide by x_i^mu with
// mu = weighted_mult, and quotient by Z_{w_i} acting with weights
// (-a,-b,-c,-d) except +1 at position i.
struct Chart {
    int index = 1;                          // 1..4
    std::vector<ChartTerm> terms;           // descending lex on exponents
    std::array<i64, 4> display_weights{};   // signed: (-a,-b,-c,-d), 1 at i
    CyclicQuotient group;                   // order w_i, weights reduced
    bool origin_in_exceptional = true;      // no constant term
};

std::vector<Chart> make_charts(const GermModel& g, const WeightVector& w);

// a + b + c + d - 1 - weighted_mult: discrepancy of the exceptional divisor.
i64 discrepancy(const GermModel& g, const WeightVector& w);

// Lowest-weight part of xy + f and its divisor-theoretic quality inside the
// weighted projective space P(a,b,c,d).
struct ExceptionalDivisor {
    std::array<i64, 4> ambient_weights{};
    std::vector<ChartTerm> lowest_part;  // terms of weight mu, exponents over (x,y,z,u)
    bool irreducible = false;
    bool reduced = false;
};

ExceptionalDivisor exceptional_part(const GermModel& g, const WeightVector& w);

// "x + z^4 + u^4" (terms descending lex, juxtaposed monomials, bare
// exponent-1 variables, constant term rendered as 1).
std::string render_terms(const std::vector<ChartTerm>& terms);

// "U2 = { x + z^4 + u^4 } / Z_3(-1,1,-1,-1)"
std::string render_chart(const Chart& chart);

// Ambient chart of the weighted blow-up of C^n / Z_m(a_1,...,a_n) (the
// general quotient-base case, no hypersurface restriction):
// U_i = C^n / Z_{a_i}(-a_1, ..., m at position i, ..., -a_n).
struct AmbientChart {
    int index = 1;
    i64 dimension = 0;
    i64 group_order = 1;
    std::vector<i64> display_weights;
};

std::vector<AmbientChart> quotient_blowup_charts(i64 m, const std::vector<i64>& weights);

std::string render_ambient_chart(const AmbientChart& chart);

} // namespace wbu
