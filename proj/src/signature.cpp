#include "elkchi/signature.hpp"

#include "elkchi/errors.hpp"

namespace elkchi {

namespace {

// Scales row/column i by a positive rational to keep entries primitive;
// a congruence by a positive diagonal matrix, so the signature is unchanged.
void rescale_row_col(std::vector<std::vector<Rational>>& g, const std::vector<bool>& active,
                     std::size_t i) {
    Integer num_gcd = 0, den_lcm = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (!active[j] || g[i][j].is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), g[i][j].numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), g[i][j].denominator().get_mpz_t());
    }
    if (sgn(num_gcd) == 0) return;
    Rational t = Rational(den_lcm, num_gcd).abs();
    if (t == Rational(1)) return;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (!active[j]) continue;
        g[i][j] *= t;
        g[j][i] = g[i][j];
    }
    g[i][i] *= t; // row and column scaling both hit the diagonal
}

} // namespace

SignatureResult exact_signature(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) fail(ErrorCode::DimensionMismatch, "signature needs a square matrix");
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i])
                fail(ErrorCode::BadInput, "signature needs a symmetric matrix");
    }

    std::vector<std::vector<Rational>> g = m;
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    SignatureResult r;

    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (active[i] && !g[i][i].is_zero()) pivot = i;

        if (pivot != n) {
            (g[pivot][pivot].sign() > 0 ? r.n_plus : r.n_minus) += 1;
            Rational d = g[pivot][pivot];
            active[pivot] = false;
            --remaining;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || g[j][pivot].is_zero()) continue;
                Rational f = g[j][pivot] / d;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!active[k]) continue;
                    g[j][k] -= f * g[pivot][k];
                }
            }
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) rescale_row_col(g, active, j);
            continue;
        }

        // All active diagonal entries vanish; look for a hyperbolic block.
        std::size_t hi = n, hj = n;
        for (std::size_t i = 0; i < n && hi == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && !g[i][j].is_zero()) { hi = i; hj = j; break; }
        }
        if (hi == n) {
            r.n_zero += remaining;
            break;
        }
        r.n_plus += 1;
        r.n_minus += 1;
        Rational b = g[hi][hj];
        active[hi] = active[hj] = false;
        remaining -= 2;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k]) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (!active[l]) continue;
                g[k][l] -= (g[k][hi] * g[hj][l] + g[k][hj] * g[hi][l]) / b;
            }
        }
        for (std::size_t j = 0; j < n; ++j)
            if (active[j]) rescale_row_col(g, active, j);
    }

    return r;
}

} // namespace elkchi
