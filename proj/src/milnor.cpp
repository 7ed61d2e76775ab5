#include "elkchi/milnor.hpp"

#include "elkchi/local_algebra.hpp"
#include "elkchi/oracle.hpp"

namespace elkchi {

namespace {

int sign_pow(DeltaSign delta, std::size_t n) {
    int s = (delta == DeltaSign::Plus) ? -1 : 1; // sign(-delta)
    return (n % 2 == 0) ? 1 : s;
}

} // namespace

long khimshiashvili_chi(const Polynomial& f, DeltaSign delta) {
    MapGerm grad = MapGerm::gradient(f);
    long deg = local_degree(grad);
    return 1 - sign_pow(delta, f.nvars()) * deg;
}

IsolatedMilnorResult isolated_milnor_chi(const std::vector<Polynomial>& psi) {
    if (psi.empty()) fail(ErrorCode::BadInput, "empty map");
    const std::size_t n = psi[0].nvars();
    const std::size_t k = psi.size();
    if (k < 2 || k > n)
        fail(ErrorCode::BadInput, "need 2 <= k <= n components");
    IsolatedMilnorResult r;
    for (const Polynomial& f : psi) {
        require_same_vars(psi[0].vars(), f.vars());
        r.degrees.push_back(local_degree(MapGerm::gradient(f)));
    }
    if (n % 2 == 0) {
        for (long d : r.degrees)
            if (d != r.degrees[0])
                fail(ErrorCode::ConsistencyFail,
                     "gradient degrees disagree; 0 is not an isolated singular point of the map");
        r.chi = 1 - r.degrees[0];
    } else {
        for (long d : r.degrees)
            if (d != 0)
                fail(ErrorCode::ConsistencyFail,
                     "nonzero gradient degree in odd dimension; 0 is not an isolated "
                     "singular point of the map");
        r.chi = 1;
    }
    return r;
}

long link_chi_value(std::size_t n, std::size_t l, long chi_mf) {
    if (n % 2 == 0) return (l % 2 == 1) ? 2 * chi_mf : 0;
    return (l % 2 == 1) ? 2 - 2 * chi_mf : 2;
}

LinkTable link_table(const MilnorInvariants& inv) {
    if (!inv.milnor_ab_asserted)
        fail(ErrorCode::HypothesisNotAsserted,
             "link table requires the Milnor (a)/(b) assertion flag");
    if (inv.k < 2 || inv.k > inv.n - 1)
        fail(ErrorCode::BadInput, "need 2 <= k <= n-1");
    LinkTable t;
    for (std::size_t l = 1; l <= inv.k; ++l) t.chi_l.push_back(link_chi_value(inv.n, l, inv.chi_mf));
    return t;
}

long milnor_chi_from_link(long chi_l1, std::size_t n) {
    if (n % 2 == 0) {
        if (chi_l1 % 2 != 0) fail(ErrorCode::ParityViolation, "chi(L) must be even");
        return chi_l1 / 2;
    }
    if ((2 - chi_l1) % 2 != 0) fail(ErrorCode::ParityViolation, "chi(L) must be even");
    return (2 - chi_l1) / 2;
}

bool charl1_check(long chi_lj, long chi_li, std::size_t n, std::size_t l, long chi_mf) {
    long sign = ((n - l) % 2 == 0) ? 1 : -1;
    return chi_lj - chi_li == sign * 2 * chi_mf;
}

long semianalytic_chi(const MilnorInvariants& inv, std::size_t l,
                      const std::vector<int>& sign_pattern) {
    if (!inv.milnor_ab_asserted)
        fail(ErrorCode::HypothesisNotAsserted,
             "semianalytic chi requires the Milnor (a)/(b) assertion flag");
    if (l < 1 || l + sign_pattern.size() > inv.k)
        fail(ErrorCode::BadInput, "need |I| >= 1 and |I| + |pattern| <= k");
    return inv.chi_mf; // independent of the sign pattern
}

long boundary_chi(long chi_m, long dim_m) {
    if (dim_m < 1) fail(ErrorCode::BadInput, "need dim M >= 1");
    return (dim_m % 2 == 1) ? 2 * chi_m : 0;
}

FukuiResult fukui_D(const Polynomial& f1) {
    const std::size_t n = f1.nvars();
    if (n < 2) fail(ErrorCode::BadInput, "need at least 2 variables");
    std::vector<Polynomial> comps;
    comps.push_back(f1);
    for (std::size_t i = 1; i < n; ++i) comps.push_back(f1.derivative(i));
    MapGerm h(f1.vars(), std::move(comps));
    long deg = local_degree(h);
    int sp = (n % 2 == 0) ? 1 : -1; // sign(-delta)^n for delta > 0
    return FukuiResult{deg, -sp * deg};
}

AokiResult aoki_semibranches(const std::vector<Polynomial>& phi,
                             const std::optional<Polynomial>& fn) {
    if (phi.empty()) fail(ErrorCode::BadInput, "empty map");
    VarsPtr vars = phi[0].vars();
    const std::size_t n = vars->size();
    if (phi.size() != n - 1)
        fail(ErrorCode::DimensionMismatch, "need n-1 component polynomials in n variables");
    Polynomial last = fn.value_or([&] {
        Polynomial s(vars);
        for (std::size_t i = 0; i < n; ++i)
            s += Polynomial::monomial(vars, Monomial::var(n, i, 2), Rational(1));
        return s;
    }());
    require_same_vars(vars, last.vars());

    std::vector<std::vector<Polynomial>> jac;
    std::vector<const Polynomial*> rows;
    rows.push_back(&last);
    for (const Polynomial& p : phi) rows.push_back(&p);
    for (const Polynomial* p : rows) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(p->derivative(j));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> comps;
    comps.push_back(poly_matrix_determinant(jac));
    for (const Polynomial& p : phi) comps.push_back(p);
    MapGerm h(vars, std::move(comps));

    AokiResult r;
    try {
        r.degree = local_degree(h);
    } catch (const EngineError& e) {
        // A real-isolated zero that is not algebraically isolated still has a
        // topological degree; fall back to the geometric oracle where it exists.
        if (e.code() == ErrorCode::NonIsolatedZero && n <= 3) {
            r.degree = oracle_degree(h);
            r.oracle_fallback = true;
        } else {
            throw;
        }
    }
    r.semibranches = 2 * r.degree;
    if (r.semibranches < 0)
        fail(ErrorCode::NegativeCount,
             "negative semi-branch count; the hypothesis on f_n is violated");
    return r;
}

Mod2Result dutertre_mod2(const std::vector<Polynomial>& psi) {
    if (psi.size() < 2) fail(ErrorCode::BadInput, "need at least 2 components");
    VarsPtr vars = psi[0].vars();
    const std::size_t n = vars->size();
    const std::size_t k = psi.size();
    if (k > n) fail(ErrorCode::DimensionMismatch, "need k <= n");
    for (const Polynomial& p : psi) require_same_vars(vars, p.vars());

    // Rows of the Jacobian of (f_k, f_1, ..., f_{k-1}).
    std::vector<std::vector<Polynomial>> jac;
    std::vector<std::size_t> order;
    order.push_back(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) order.push_back(i);
    for (std::size_t r : order) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(psi[r].derivative(j));
        jac.push_back(std::move(row));
    }

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i + 1 < k; ++i) gens.push_back(psi[i]);
    // All k x k minors over column subsets.
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        std::vector<std::vector<Polynomial>> sub(k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub[r].push_back(jac[r][cols[c]]);
        Polynomial minor = poly_matrix_determinant(sub);
        if (!minor.is_zero()) gens.push_back(minor);
        // Next k-subset of {0..n-1} in lexicographic order.
        std::size_t i = k;
        while (i-- > 0) {
            if (cols[i] != i + n - k) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) { i = static_cast<std::size_t>(-1); break; }
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }

    StandardBasis sb = local_zero_dim_basis(gens);
    LocalAlgebra la = quotient_basis(sb);
    return Mod2Result{la.mu(), static_cast<int>(la.mu() % 2)};
}

ConsistencyReport verify_all(const MilnorInvariants& inv, const std::vector<LinkWitness>& links,
                             std::optional<long> chi_mf_witness) {
    if (!inv.milnor_ab_asserted)
        fail(ErrorCode::HypothesisNotAsserted,
             "verification requires the Milnor (a)/(b) assertion flag");
    if (links.empty() && !chi_mf_witness)
        fail(ErrorCode::BadInput, "need at least one witness value");

    ConsistencyReport rep;
    auto add_row = [&rep](const std::string& rel, long expected, long computed,
                          const std::string& note = "") {
        bool pass = expected == computed;
        rep.rows.push_back({rel, expected, computed, pass, note});
        if (!pass) rep.all_pass = false;
    };

    // Pin chi(M_F): from the witness if given, else from the first link.
    std::optional<long> chi_mf = chi_mf_witness;
    std::string chi_source = chi_mf ? "witness" : "";
    if (!chi_mf && !links.empty()) {
        try {
            chi_mf = milnor_chi_from_link(links[0].chi, inv.n);
            chi_source = "derived from chi(L_" + links[0].name + ") via the l=1 link relation";
        } catch (const EngineError&) {
            rep.rows.push_back({"milnor-chi-from-link[" + links[0].name + "]", 0, links[0].chi,
                                false, "chi(L) parity violates the l=1 link relation"});
            rep.all_pass = false;
        }
    }
    rep.chi_mf = chi_mf;
    if (!chi_mf) return rep;

    // Every component link must realize the CharLink l=1 value.
    long expected_l1 = link_chi_value(inv.n, 1, *chi_mf);
    for (const LinkWitness& lw : links) {
        add_row("charlink-l1[" + lw.name + "]", expected_l1, lw.chi,
                lw.chi == expected_l1
                    ? "chi(M_F) " + chi_source
                    : "incompatible with the link table; Milnor's conditions (a)/(b) cannot "
                      "both hold");
    }

    // The link table satisfies the CharL1 identity for consecutive l.
    MilnorInvariants filled = inv;
    filled.chi_mf = *chi_mf;
    if (inv.k >= 2 && inv.k <= inv.n - 1) {
        LinkTable table = link_table(filled);
        for (std::size_t l = 1; l < inv.k; ++l) {
            long chi_lj = table.chi_l[l - 1];
            long chi_li = table.chi_l[l];
            long sign = ((inv.n - (l + 1)) % 2 == 0) ? 1 : -1;
            add_row("charl1[l=" + std::to_string(l + 1) + "]", chi_lj - chi_li,
                    sign * 2 * *chi_mf);
        }
        // Round trip through the l = 1 row.
        add_row("milnor-chi-roundtrip", *chi_mf, milnor_chi_from_link(table.chi_l[0], inv.n));
    }

    // Semianalytic sets carry chi(M_F) regardless of the sign pattern.
    if (inv.k >= 2) {
        add_row("semianalytic-chi[pattern >=]", *chi_mf,
                semianalytic_chi(filled, 1, std::vector<int>{1}));
    }

    // Boundary of the Milnor fibre, dim M_F = n - k.
    long dim_mf = static_cast<long>(inv.n) - static_cast<long>(inv.k);
    if (dim_mf >= 1) {
        long bchi = boundary_chi(*chi_mf, dim_mf);
        add_row("boundary-chi", bchi, bchi,
                "chi(dM_F) for dim M_F = " + std::to_string(dim_mf));
    }

    return rep;
}

} // namespace elkchi
