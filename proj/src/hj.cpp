#include "wbu/hj.hpp"

#include <numeric>

#include "wbu/errors.hpp"

namespace wbu {

namespace {

// Exact Thomas algorithm for the tridiagonal system with diagonal diag[i],
// off-diagonal entries off_value (constant), and right-hand side rhs.
std::vector<Rational> solve_tridiagonal(const std::vector<Rational>& diag,
                                        const Rational& off_value,
                                        std::vector<Rational> rhs) {
    const std::size_t n = diag.size();
    std::vector<Rational> d = diag;
    // Forward elimination.
    for (std::size_t i = 1; i < n; ++i) {
        if (d[i - 1].num == 0) throw InconsistencyError("singular tridiagonal system");
        Rational m = off_value / d[i - 1];
        d[i] -= m * off_value;
        rhs[i] -= m * rhs[i - 1];
    }
    // Back substitution.
    std::vector<Rational> x(n);
    if (n > 0) {
        if (d[n - 1].num == 0) throw InconsistencyError("singular tridiagonal system");
        x[n - 1] = rhs[n - 1] / d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            x[i] = (rhs[i] - off_value * x[i + 1]) / d[i];
        }
    }
    return x;
}

} // namespace

std::vector<i64> hj_expand(i64 r, i64 q) {
    if (r < 1) throw InvalidInputError("hj_expand: order must be >= 1");
    if (r == 1) return {};
    if (q < 1 || q >= r) throw InvalidInputError("hj_expand: weight must lie in [1, order)");
    if (std::gcd(r, q) != 1) throw InvalidInputError("hj_expand: weight not coprime to order");

    std::vector<i64> chain;
    i64 x = r;
    i64 y = q;
    while (y > 0) {
        i64 b = (x + y - 1) / y; // ceil(x / y)
        chain.push_back(b);
        i64 next = checked_sub(checked_mul(b, y), x);
        x = y;
        y = next;
    }
    return chain;
}

std::vector<Rational> hj_discrepancies(const std::vector<i64>& chain) {
    const std::size_t n = chain.size();
    if (n == 0) return {};
    // Adjunction on the resolution: d_{i-1} - b_i d_i + d_{i+1} = b_i - 2.
    // Written as M d = rhs with M = tridiag(-b_i; 1).
    std::vector<Rational> diag(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (chain[i] < 2) throw InvalidInputError("hj chain entries must be >= 2");
        diag[i] = Rational(-chain[i]);
        rhs[i] = Rational(chain[i] - 2);
    }
    std::vector<Rational> d = solve_tridiagonal(diag, Rational(1), std::move(rhs));
    for (const Rational& di : d) {
        if (!(di > Rational(-1) && di <= Rational(0)))
            throw InconsistencyError("chain discrepancy outside (-1, 0]");
    }
    return d;
}

Rational hj_end_correction(const std::vector<i64>& chain) {
    const std::size_t n = chain.size();
    if (n == 0) return Rational(0);
    // Solve M x = e_1 for M = tridiag(b_i; -1); the correction is x_1.
    std::vector<Rational> diag(n), rhs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) diag[i] = Rational(chain[i]);
    rhs[0] = Rational(1);
    std::vector<Rational> x = solve_tridiagonal(diag, Rational(-1), std::move(rhs));
    return x[0];
}

Rational hj_k2_correction(const std::vector<i64>& chain) {
    std::vector<Rational> d = hj_discrepancies(chain);
    Rational total(0);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        total += d[i] * Rational(chain[i] - 2);
    }
    return total;
}

} // namespace wbu
