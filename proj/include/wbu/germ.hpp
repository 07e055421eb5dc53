// Germ model xy + f(z,u) = 0: parsing, rendering, degrees, weighted multiplicity.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wbu/rational.hpp"

namespace wbu {

// The hypersurface germ X = { xy + f(z,u) = 0 }.  Only the exponent pairs of
// f are stored (all coefficients are 1); the quadratic term xy is implicit.
// Terms are kept sorted ascending lexicographically on (p, q) and are
// pairwise distinct, with p + q >= 2 so the germ is singular at the origin.
struct GermModel {
    std::vector<std::pair<i64, i64>> terms;

    bool operator==(const GermModel&) const = default;
};

// Validating constructor for programmatic use; sorts and checks invariants.
GermModel make_germ(std::vector<std::pair<i64, i64>> terms);

// Grammar:  "xy" "+" monomial ("+" monomial)*
// monomial: z^P | u^Q | z^P u^Q  (positive exponents, "^1" may be omitted).
// Whitespace-insensitive.  Throws ParseError with a character position.
GermModel parse_germ(const std::string& text);

// Canonical rendering, e.g. "xy + u^4 + z^3" (terms ascending (p,q)-lex).
std::string render_germ(const GermModel& g);

// min over terms of p + q.
i64 deg_min(const GermModel& g);

// Blow-up weights for (x, y, z, u): positive with gcd 1.
struct WeightVector {
    i64 a = 1, b = 1, c = 1, d = 1;

    bool operator==(const WeightVector&) const = default;
    i64 sum() const { return a + b + c + d; }
    i64 operator[](int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
};

// Validates positivity and gcd(a,b,c,d) = 1; throws InvalidInputError.
WeightVector make_weights(i64 a, i64 b, i64 c, i64 d);

// Parses "a,b,c,d" (ParseError on syntax, InvalidInputError on bad values).
WeightVector parse_weights(const std::string& text);

std::string render_weights(const WeightVector& w); // "(a,b,c,d)"

// min( a+b, min_i(p_i*c + q_i*d) ): the weight of the lowest-weight part of
// xy + f, i.e. the multiplicity of the germ along the weighted valuation.
i64 weighted_mult(const GermModel& g, const WeightVector& w);

// True when f is symmetric under swapping z and u (term set closed under
// (p,q) -> (q,p)); used for reporting weight-vector orbits.
bool is_zu_symmetric(const GermModel& g);

} // namespace wbu
