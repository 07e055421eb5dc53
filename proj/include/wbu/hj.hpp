// Hirzebruch-Jung continued fractions for cyclic surface quotients 1/r(1,q),
// plus the discrepancies of the exceptional chain of the minimal resolution.
#pragma once

#include <vector>

#include "wbu/rational.hpp"

namespace wbu {

// Expansion r/q = b1 - 1/(b2 - 1/(.. - 1/bk)) with all bi >= 2.
// Requires r >= 1, 1 <= q < r (q arbitrary when r == 1), gcd(q, r) == 1.
// r == 1 yields the empty chain.
std::vector<i64> hj_expand(i64 r, i64 q);

// Discrepancies d_i of the chain curves E_i of the minimal resolution of
// 1/r(1,q), indexed like the expansion: K = f*K + sum d_i E_i.
// Solves the adjunction system d_{i-1} - b_i d_i + d_{i+1} = b_i - 2
// (d_0 = d_{k+1} = 0) exactly.  All d_i lie in (-1, 0].
std::vector<Rational> hj_discrepancies(const std::vector<i64>& chain);

// Entry (1,1) of the inverse of the minus-intersection matrix of the chain
// (the matrix with b_i on the diagonal, -1 off it).  This is the amount by
// which the self-intersection of a resolved curve transverse to the chain
// end drops.  Empty chain -> 0.
Rational hj_end_correction(const std::vector<i64>& chain);

// Sum over i of d_i * (b_i - 2); the total correction term that converts
// K^2 of the singular surface into K^2 of its minimal resolution.
Rational hj_k2_correction(const std::vector<i64>& chain);

} // namespace wbu
