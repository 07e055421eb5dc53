// Small exact univariate polynomial helpers shared by a few modules.
#pragma once

#include <vector>

#include "wbu/rational.hpp"

namespace wbu::detail {

// Squarefreeness of psi(v) = sum_i v^{t_i} given the sorted exponent list
// t_0 < t_1 < ... (all coefficients 1, t_0 may be 0).  Squarefree iff
// gcd(psi, psi') = 1; decided by exact rational Euclid on dense coefficient
// vectors (degrees stay small for the shapes this artifact feeds in).
inline bool exponents_squarefree(const std::vector<i64>& exponents) {
    i64 deg = exponents.back();
    std::vector<Rational> f(deg + 1, Rational(0));
    for (i64 t : exponents) f[(size_t)t] = Rational(1);
    std::vector<Rational> d;
    for (i64 k = 1; k <= deg; ++k)
        d.push_back(f[(size_t)k] * Rational(k));
    auto degree = [](const std::vector<Rational>& p) -> long {
        for (long i = (long)p.size() - 1; i >= 0; --i)
            if (!(p[(size_t)i] == Rational(0))) return i;
        return -1;
    };
    std::vector<Rational> A = f, B = d;
    while (true) {
        long db = degree(B);
        if (db < 0) break;
        long da = degree(A);
        while (da >= db) {
            Rational factor = A[(size_t)da] / B[(size_t)db];
            for (long j = 0; j <= db; ++j)
                A[(size_t)(da - db + j)] -= factor * B[(size_t)j];
            da = degree(A);
        }
        std::swap(A, B);
    }
    return degree(A) == 0;
}

} // namespace wbu::detail
