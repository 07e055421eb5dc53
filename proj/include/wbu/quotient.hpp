// Cyclic quotient singularities: terminality tests, Du Val recognition,
// canonical forms and the 1/r(w1,...,wk) literal syntax.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbu/rational.hpp"

namespace wbu {

// The cyclic quotient C^k / Z_r acting by x_j -> eps^{w_j} x_j.  Weights are
// reduced into [0, r) at construction.  equation_weight carries the
// semi-invariance weight of a hypersurface equation inside the quotient
// (used for the hyperquotient test); it is reduced mod r as well.
struct CyclicQuotient {
    i64 order = 1;
    std::vector<i64> weights;
    std::optional<i64> equation_weight;

    bool operator==(const CyclicQuotient&) const = default;
};

CyclicQuotient make_quotient(i64 order, std::vector<i64> raw_weights,
                             std::optional<i64> equation_weight = std::nullopt);

// All weights coprime to the order (fixed locus of every nontrivial element
// meets the ambient space only at the origin).
bool is_isolated_action(const CyclicQuotient& q);

// Terminality of a 3-dimensional cyclic quotient point 1/r(w1,w2,w3) by the
// normal form rule: r = 1, or some permutation and unit t mod r give
// t*(w) == (1, r-1, b) with gcd(b, r) = 1.
bool is_terminal_quotient(const CyclicQuotient& q);

// Independent oracle: isolated action and, for every k in 1..r-1,
// sum_i((k*w_i) mod r) > r.  Agrees with the normal-form rule (checked
// exhaustively by the acceptance suite).
bool reid_tai_terminal_oracle(const CyclicQuotient& q);

// Counts disagreements between the normal-form rule and the oracle over all
// isolated triples mod r for r <= r_max (0 expected).
i64 terminality_agreement_mismatches(i64 r_max);

// Inequality test for a 4-weight hyperquotient { xbar*ybar + g(z,u) } / Z_r:
// for every k in 1..r-1, sum_i frac(k*w_i/r) - frac(k*e/r) > 1.
// Requires equation_weight e with w1 + w2 == e mod r.
bool is_terminal_hyperquotient(const CyclicQuotient& q);

// A monomial z^p u^q of the residual equation g.
struct Monomial2 {
    i64 p = 0, q = 0;
    bool operator==(const Monomial2&) const = default;
};

// Valuation-based terminality test for { xbar*ybar + g(z,u) } / Z_r with the
// g-monomials supplied.  For each k the minimal positive lifts n_i of k*w_i
// define a monomial valuation; the point is terminal iff every such
// valuation has positive discrepancy:
//   n1+n2+n3+n4 - r - min(n1+n2, min_g(p*n3 + q*n4)) > 0.
// This refines is_terminal_hyperquotient, which can misjudge valuations
// whose equation weight wraps past r; disagreements between the two tests
// are surfaced as diagnostics by the callers, never silently resolved.
bool is_terminal_cA_hyperquotient(const CyclicQuotient& q,
                                  const std::vector<Monomial2>& g_terms);

// Surface quotient 1/r(w1,w2) classified up to isomorphism.
struct DuvalResult {
    bool smooth = false;     // order 1
    bool is_du_val = false;  // A_{r-1}, i.e. normalized type (1, r-1)
    i64 order = 1;
    std::vector<i64> chain;            // Hirzebruch-Jung continued fraction
    std::vector<Rational> discrepancies;
    std::string label;                 // "A_3" or "non-Du-Val cyclic 1/4(1,1)"
};

// Requires an isolated 2-dimensional action (both weights coprime to r).
DuvalResult duval_of_surface_quotient(const CyclicQuotient& q);

// Lexicographically minimal weight tuple over all unit multiples mod r and
// coordinate permutations; used for display and de-duplication.
std::vector<i64> canonical_weights(const CyclicQuotient& q);

std::string render_quotient(const CyclicQuotient& q); // "1/r(w1,...,wk)"

// Parses "1/r(w1,...,wk)", k >= 2; negative entries allowed and reduced.
CyclicQuotient parse_quotient(const std::string& text);

} // namespace wbu
