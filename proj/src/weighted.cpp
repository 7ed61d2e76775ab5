#include "elkchi/weighted.hpp"

namespace elkchi {

long weighted_degree(const Monomial& m, const std::vector<long>& weights) {
    if (weights.size() != m.nvars())
        fail(ErrorCode::DimensionMismatch, "weight count does not match variable count");
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        d += weights[i] * m.exponent(i);
    return d;
}

Polynomial euler_defect(const Polynomial& p, const WeightedType& w) {
    if (w.weights.size() != p.nvars())
        fail(ErrorCode::DimensionMismatch, "weight count does not match variable count");
    Polynomial acc = p.scaled(Rational(-w.degree));
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        Polynomial xi_dpi = p.derivative(i).times_monomial(Monomial::var(p.nvars(), i), Rational(w.weights[i]));
        acc += xi_dpi;
    }
    return acc;
}

bool check_weighted_type(const Polynomial& p, const WeightedType& w) {
    if (w.weights.size() != p.nvars())
        fail(ErrorCode::DimensionMismatch, "weight count does not match variable count");
    bool monomial_route = true;
    for (const Polynomial::Term& t : p.terms())
        if (weighted_degree(t.mon, w.weights) != w.degree) { monomial_route = false; break; }
    bool euler_route = euler_defect(p, w).is_zero();
    if (monomial_route != euler_route)
        fail(ErrorCode::Internal, "weighted-homogeneity checks disagree");
    return monomial_route;
}

std::optional<WeightedType> infer_weighted_type(const Polynomial& p) {
    const std::size_t n = p.nvars();
    if (p.is_zero() || n == 0) return std::nullopt;
    // Unknown weights w_1..w_n; every monomial must have the same weighted
    // degree as the first one: (alpha^{(t)} - alpha^{(1)}) . w = 0.
    const Monomial& base = p.terms()[0].mon;
    std::vector<std::vector<Rational>> rows;
    for (const Polynomial::Term& t : p.terms()) {
        if (t.mon == base) continue;
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = Rational(t.mon.exponent(i) - base.exponent(i));
        rows.push_back(std::move(row));
    }
    // Reduced row-echelon form.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Free weights are set to 1; pivot weights follow by back substitution.
    std::vector<Rational> sol(n, Rational(1));
    for (std::size_t r = rank; r-- > 0;) {
        std::size_t col = pivot_col[r];
        Rational v(0);
        for (std::size_t c = col + 1; c < n; ++c)
            if (!rows[r][c].is_zero()) v -= rows[r][c] * sol[c];
        sol[col] = v;
    }
    // Scale to coprime positive integers.
    Integer den_lcm = 1;
    for (const Rational& v : sol)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<Integer> ints(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ints[i] = (sol[i] * Rational(den_lcm)).numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (sgn(g) == 0) return std::nullopt;
    WeightedType w;
    w.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer q = ints[i] / g;
        if (sgn(q) <= 0 || !q.fits_slong_p()) return std::nullopt;
        w.weights[i] = q.get_si();
    }
    long d = weighted_degree(base, w.weights);
    if (d <= 0) return std::nullopt;
    w.degree = d;
    if (!check_weighted_type(p, w)) return std::nullopt;
    return w;
}

} // namespace elkchi
