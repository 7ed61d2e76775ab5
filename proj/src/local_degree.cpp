#include "elkchi/local_degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace elkchi {

Polynomial poly_matrix_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) fail(ErrorCode::BadInput, "determinant of an empty matrix");
    VarsPtr vars = m[0][0].vars();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
    // Laplace expansion along rows, memoized on the set of unused columns.
    std::map<std::uint64_t, Polynomial> memo;
    std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    auto rec = [&](auto&& self, std::uint64_t cols) -> Polynomial {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(cols));
        if (cols == 0) return Polynomial::constant(vars, Rational(1));
        Polynomial acc(vars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols >> c & 1)) continue;
            if (!m[row][c].is_zero()) {
                Polynomial sub = self(self, cols & ~(1ull << c));
                Polynomial term = m[row][c] * sub;
                acc += (sign > 0) ? term : -term;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, full);
}

Polynomial jacobian_determinant(const MapGerm& h) {
    const std::size_t n = h.nvars();
    std::vector<std::vector<Polynomial>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(h.component(i).derivative(j));
        m.push_back(std::move(row));
    }
    return poly_matrix_determinant(m);
}

namespace {

LocalAlgebra germ_algebra(const MapGerm& h) {
    bool all_zero = true;
    for (const Polynomial& c : h.components())
        if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero)
        fail(ErrorCode::NonIsolatedZero, "zero map germ has no isolated zero");
    try {
        StandardBasis sb = local_zero_dim_basis(h.components());
        return quotient_basis(sb);
    } catch (const EngineError& e) {
        if (e.code() == ErrorCode::NotFinite)
            fail(ErrorCode::NonIsolatedZero,
                 std::string("the zero of the germ is not algebraically isolated: ") + e.what());
        throw;
    }
}

// Coordinate rows r_gamma = (M^gamma)^T e_idx, memoized; Gram(a,b) is then
// sign * r_{basis[a]}[b], one matrix-vector chain per basis monomial.
struct FunctionalRows {
    const LocalAlgebra& algebra;
    std::map<Monomial, std::vector<Rational>, GrevlexDesc> memo;

    explicit FunctionalRows(const LocalAlgebra& a, std::size_t idx) : algebra(a) {
        std::vector<Rational> e(a.mu(), Rational(0));
        e[idx] = Rational(1);
        memo.emplace(Monomial::one(a.vars()->size()), std::move(e));
    }

    const std::vector<Rational>& row(const Monomial& gamma) {
        auto it = memo.find(gamma);
        if (it != memo.end()) return it->second;
        std::size_t i = 0;
        while (gamma.exponent(i) == 0) ++i;
        std::vector<int> exps = gamma.exponents();
        exps[i] -= 1;
        const std::vector<Rational>& prev = row(Monomial(std::move(exps)));
        const auto& m = algebra.mult_matrix(i);
        std::vector<Rational> out(algebra.mu(), Rational(0));
        for (std::size_t r = 0; r < algebra.mu(); ++r) {
            if (prev[r].is_zero()) continue;
            for (std::size_t c = 0; c < algebra.mu(); ++c)
                if (!m[r][c].is_zero()) out[c] += prev[r] * m[r][c];
        }
        return memo.emplace(gamma, std::move(out)).first->second;
    }
};

GramForm build_gram_with(const MapGerm& h, const LocalAlgebra& algebra, std::size_t support_rank) {
    Polynomial jac = jacobian_determinant(h);
    std::vector<Rational> jvec = algebra.normal_form_vector(jac);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < jvec.size(); ++i)
        if (!jvec[i].is_zero()) support.push_back(i);
    if (support.empty())
        fail(ErrorCode::DegeneratePairing, "Jacobian class vanishes in the local algebra");
    if (support_rank >= support.size())
        fail(ErrorCode::BadInput, "functional support rank out of range");
    // Basis monomials are stored descending in the order, so support[0] is
    // the support monomial of highest local order.
    std::size_t idx = support[support_rank];
    int sign = jvec[idx].sign();

    FunctionalRows rows(algebra, idx);
    const std::size_t mu = algebra.mu();
    std::vector<std::vector<Rational>> g(mu, std::vector<Rational>(mu, Rational(0)));
    for (std::size_t a = 0; a < mu; ++a) {
        const std::vector<Rational>& ra = rows.row(algebra.basis()[a]);
        for (std::size_t b = 0; b < mu; ++b)
            g[a][b] = (sign > 0) ? ra[b] : -ra[b];
    }
    for (std::size_t a = 0; a < mu; ++a)
        for (std::size_t b = a + 1; b < mu; ++b)
            if (g[a][b] != g[b][a])
                fail(ErrorCode::Internal, "Gram matrix came out non-symmetric");

    return GramForm{algebra.basis(), std::move(g), algebra.basis()[idx], sign,
                    algebra.to_polynomial(jvec)};
}

DegreeResult degree_direct(const MapGerm& h) {
    LocalAlgebra algebra = germ_algebra(h);
    GramForm gram = build_gram_with(h, algebra, 0);
    SignatureResult sig = exact_signature(gram.matrix);
    if (sig.n_zero > 0)
        fail(ErrorCode::DegeneratePairing, "ELK pairing is degenerate (n_zero > 0)");
    return DegreeResult{sig.signature(), algebra.mu(), sig};
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

struct Block {
    std::vector<std::size_t> vars;
    std::vector<std::size_t> comps;
};

// Partition of variables/components into independent square blocks, or
// nullopt when the germ does not split (or a component is zero/constant).
std::optional<std::vector<Block>> split_blocks(const MapGerm& h) {
    const std::size_t n = h.nvars();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<bool>> support(n, std::vector<bool>(n, false));
    for (std::size_t c = 0; c < n; ++c) {
        if (h.component(c).is_zero()) return std::nullopt;
        std::size_t first = n;
        for (const Polynomial::Term& t : h.component(c).terms())
            for (std::size_t v = 0; v < n; ++v)
                if (t.mon.exponent(v) > 0) {
                    support[c][v] = true;
                    if (first == n) first = v;
                    else parent[find(v)] = find(first);
                }
        if (first == n) return std::nullopt; // constant component
    }
    std::map<std::size_t, Block> blocks;
    for (std::size_t v = 0; v < n; ++v) blocks[find(v)].vars.push_back(v);
    if (blocks.size() <= 1) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t root = n;
        for (std::size_t v = 0; v < n; ++v)
            if (support[c][v]) { root = find(v); break; }
        blocks[root].comps.push_back(c);
    }
    std::vector<Block> out;
    for (auto& [root, b] : blocks) {
        if (b.vars.size() != b.comps.size()) return std::nullopt;
        out.push_back(std::move(b));
    }
    return out;
}

MapGerm restrict_to_block(const MapGerm& h, const Block& b) {
    std::vector<std::string> names;
    names.reserve(b.vars.size());
    for (std::size_t v : b.vars) names.push_back(h.vars()->name(v));
    VarsPtr sub = make_vars(std::move(names));
    std::vector<Polynomial> comps;
    for (std::size_t c : b.comps) {
        Polynomial q(sub);
        for (const Polynomial::Term& t : h.component(c).terms()) {
            std::vector<int> exps(b.vars.size());
            for (std::size_t k = 0; k < b.vars.size(); ++k) exps[k] = t.mon.exponent(b.vars[k]);
            q += Polynomial::monomial(sub, Monomial(std::move(exps)), t.coeff);
        }
        comps.push_back(std::move(q));
    }
    return MapGerm(sub, std::move(comps));
}

} // namespace

DegreeResult local_degree_detailed(const MapGerm& h, bool split) {
    if (!h.vanishes_at_origin())
        fail(ErrorCode::ConstantTerm,
             "map germ has a nonzero constant term; degree at 0 is undefined");
    if (split) {
        if (auto blocks = split_blocks(h)) {
            std::vector<std::size_t> var_perm, comp_perm;
            for (const Block& b : *blocks) {
                var_perm.insert(var_perm.end(), b.vars.begin(), b.vars.end());
                comp_perm.insert(comp_perm.end(), b.comps.begin(), b.comps.end());
            }
            long sign = permutation_sign(var_perm) * permutation_sign(comp_perm);
            // Inertia of the tensor product of the block forms, orientation
            // sign of the variable/component permutations applied.
            std::size_t p = 1, m = 0;
            for (const Block& b : *blocks) {
                DegreeResult sub = local_degree_detailed(restrict_to_block(h, b), true);
                std::size_t np = p * sub.sig.n_plus + m * sub.sig.n_minus;
                std::size_t nm = p * sub.sig.n_minus + m * sub.sig.n_plus;
                p = np;
                m = nm;
            }
            if (sign < 0) std::swap(p, m);
            DegreeResult total;
            total.sig = SignatureResult{p, m, 0};
            total.degree = total.sig.signature();
            total.mu = p + m;
            return total;
        }
    }
    return degree_direct(h);
}

long local_degree(const MapGerm& h) { return local_degree_detailed(h, true).degree; }

long local_degree_no_split(const MapGerm& h) { return local_degree_detailed(h, false).degree; }

GramForm build_gram_form(const MapGerm& h, const LocalAlgebra& algebra, std::size_t support_rank) {
    return build_gram_with(h, algebra, support_rank);
}

std::vector<long> elk_signatures_over_support(const MapGerm& h) {
    if (!h.vanishes_at_origin())
        fail(ErrorCode::ConstantTerm,
             "map germ has a nonzero constant term; degree at 0 is undefined");
    LocalAlgebra algebra = germ_algebra(h);
    Polynomial jac = jacobian_determinant(h);
    std::vector<Rational> jvec = algebra.normal_form_vector(jac);
    std::size_t support = 0;
    for (const Rational& c : jvec)
        if (!c.is_zero()) ++support;
    std::vector<long> out;
    for (std::size_t k = 0; k < support; ++k) {
        GramForm gram = build_gram_with(h, algebra, k);
        SignatureResult sig = exact_signature(gram.matrix);
        if (sig.n_zero > 0)
            fail(ErrorCode::DegeneratePairing, "ELK pairing is degenerate (n_zero > 0)");
        out.push_back(sig.signature());
    }
    return out;
}

} // namespace elkchi
