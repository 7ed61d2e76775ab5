#include "elkchi/link_euler.hpp"

#include <numeric>

namespace elkchi {

long euler_characteristic_of_sphere(std::size_t n) {
    return (n % 2 == 0) ? 0 : 2;
}

namespace {

bool differential_vanishes_at_origin(const Polynomial& f) {
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (!f.derivative(i).constant_coefficient().is_zero()) return false;
    return true;
}

void check_setup_preconditions(const Polynomial& f, const WeightedType& w) {
    for (long d : w.weights)
        if (d <= 0) fail(ErrorCode::BadInput, "weights must be positive");
    if (w.degree <= 0) fail(ErrorCode::BadInput, "weighted degree must be positive");
    if (!check_weighted_type(f, w))
        fail(ErrorCode::NotWeightedHomogeneous,
             "polynomial is not weighted homogeneous of the given type");
    if (!f.constant_coefficient().is_zero())
        fail(ErrorCode::BadInput, "f(0) must vanish");
}

long smallest_p(const WeightedType& w) {
    long l = 1;
    for (long d : w.weights) l = std::lcm(l, d);
    // Smallest multiple of lcm(d_i) strictly greater than d/2.
    long p = l * (w.degree / (2 * l) + 1);
    while (2 * (p - l) > w.degree) p -= l;
    return p;
}

Polynomial omega_polynomial(const VarsPtr& vars, const std::vector<long>& a) {
    Polynomial omega(vars);
    for (std::size_t i = 0; i < vars->size(); ++i)
        omega += Polynomial::monomial(vars, Monomial::var(vars->size(), i, static_cast<int>(2 * a[i])),
                                      Rational(1, 2 * a[i]));
    return omega;
}

long degree_propagating(const MapGerm& h) {
    try {
        return local_degree(h);
    } catch (const EngineError& e) {
        if (e.code() == ErrorCode::NonIsolatedZero)
            fail(ErrorCode::Internal,
                 std::string("internal inconsistency: the gradient construction must have a "
                             "finite local quotient, got: ") + e.what());
        throw;
    }
}

} // namespace

SzafraniecData szafraniec_setup(const Polynomial& f, const WeightedType& w) {
    check_setup_preconditions(f, w);
    if (!differential_vanishes_at_origin(f))
        fail(ErrorCode::DfNonzeroAtOrigin, "df(0) must vanish for the link construction");
    long p = smallest_p(w);
    std::vector<long> a(w.weights.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = p / w.weights[i];
    Polynomial omega = omega_polynomial(f.vars(), a);
    Polynomial g1 = f - omega;
    Polynomial g2 = -f - omega;
    return SzafraniecData{p, std::move(a), omega, g1, g2, MapGerm::gradient(g1),
                          MapGerm::gradient(g2)};
}

LinkEulerResult link_euler(const Polynomial& f, const WeightedType& w) {
    check_setup_preconditions(f, w);
    LinkEulerResult r;
    r.sphere_chi = euler_characteristic_of_sphere(f.nvars());
    if (!differential_vanishes_at_origin(f)) {
        // df(0) != 0: both H_i are nonvanishing at the origin, so their local
        // degrees are 0 and the formula degenerates to chi(S^{n-2}).
        r.p = smallest_p(w);
        r.deg1 = r.deg2 = 0;
        r.chi = 2 - (0 + 0 + r.sphere_chi);
        return r;
    }
    SzafraniecData data = szafraniec_setup(f, w);
    r.p = data.p;
    r.deg1 = degree_propagating(data.h1);
    r.deg2 = degree_propagating(data.h2);
    r.chi = 2 - (r.deg1 + r.deg2 + r.sphere_chi);
    return r;
}

LinkEulerResult link_euler_odd(const Polynomial& f, const WeightedType& w) {
    if (w.degree % 2 == 0)
        fail(ErrorCode::DEven, "the odd-degree link formula needs odd d");
    LinkEulerResult r = link_euler(f, w);
    if (r.deg1 != r.deg2)
        fail(ErrorCode::ConsistencyFail,
             "deg H1 != deg H2 for odd d; the involution argument is violated");
    r.chi = 2 * (1 - r.deg1) - r.sphere_chi;
    return r;
}

VarietyLinkResult variety_link_euler(const std::vector<Polynomial>& f_list, long k_max) {
    if (f_list.empty()) fail(ErrorCode::BadInput, "need at least one polynomial");
    VarsPtr vars = f_list[0].vars();
    Polynomial f(vars);
    for (const Polynomial& fi : f_list) {
        require_same_vars(vars, fi.vars());
        if (!fi.constant_coefficient().is_zero())
            fail(ErrorCode::BadInput, "each f_i must vanish at the origin");
        f += fi * fi;
    }
    Polynomial rho(vars);
    for (std::size_t i = 0; i < vars->size(); ++i)
        rho += Polynomial::monomial(vars, Monomial::var(vars->size(), i, 2), Rational(1));

    for (long k = 1; k <= k_max; ++k) {
        Polynomial g = f - rho.pow(static_cast<int>(k));
        if (g.is_zero()) continue;
        MapGerm grad = MapGerm::gradient(g);
        try {
            long deg = local_degree(grad);
            return VarietyLinkResult{1 - deg, k, deg};
        } catch (const EngineError& e) {
            if (e.code() == ErrorCode::NonIsolatedZero) continue;
            throw;
        }
    }
    fail(ErrorCode::KExhausted,
         "no k <= " + std::to_string(k_max) + " gives a finite local quotient");
}

} // namespace elkchi
