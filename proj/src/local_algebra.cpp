#include "elkchi/local_algebra.hpp"

#include <algorithm>

namespace elkchi {

LocalAlgebra::LocalAlgebra(StandardBasis sb, std::vector<Monomial> basis)
    : sb_(std::move(sb)), basis_(std::move(basis)) {
    const std::size_t n = sb_.vars->size();
    mult_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& m = mult_[i];
        m.assign(mu(), std::vector<Rational>(mu(), Rational(0)));
        for (std::size_t c = 0; c < mu(); ++c) {
            Monomial xm = basis_[c] * Monomial::var(n, i);
            std::vector<Rational> col = monomial_class(xm);
            for (std::size_t r = 0; r < mu(); ++r) m[r][c] = col[r];
        }
    }
}

std::size_t LocalAlgebra::index_of(const Monomial& m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == m) return i;
    return npos;
}

Polynomial LocalAlgebra::reduce(const Polynomial& p) const {
    std::optional<int> drop;
    if (!sb_.order.is_global()) {
        drop = static_cast<int>(mu());
        if (sb_.drop_degree) drop = std::min(*drop, *sb_.drop_degree);
    }
    return reduce_to_standard(p, sb_.gens, sb_.leading, sb_.order, drop);
}

std::vector<Rational> LocalAlgebra::normal_form_vector(const Polynomial& p) const {
    Polynomial r = reduce(p);
    std::vector<Rational> v(mu(), Rational(0));
    for (const Polynomial::Term& t : r.terms()) {
        std::size_t i = index_of(t.mon);
        if (i == npos) fail(ErrorCode::Internal, "normal form left a non-standard monomial");
        v[i] = t.coeff;
    }
    return v;
}

Polynomial LocalAlgebra::to_polynomial(const std::vector<Rational>& coords) const {
    if (coords.size() != mu()) fail(ErrorCode::DimensionMismatch, "coordinate arity mismatch");
    Polynomial p(vars());
    for (std::size_t i = 0; i < mu(); ++i)
        if (!coords[i].is_zero()) p += Polynomial::monomial(vars(), basis_[i], coords[i]);
    return p;
}

std::vector<Rational> LocalAlgebra::monomial_class(const Monomial& gamma) const {
    return normal_form_vector(Polynomial::monomial(vars(), gamma, Rational(1)));
}

LocalAlgebra quotient_basis(const StandardBasis& sb) {
    auto std_mons = standard_monomials(sb.leading, sb.vars->size(), sb.order);
    if (!std_mons) {
        std::string missing;
        for (std::size_t i = 0; i < sb.vars->size(); ++i) {
            bool covered = false;
            for (const Monomial& m : sb.leading) {
                std::size_t j;
                if (m.is_pure_power(j) && j == i) { covered = true; break; }
            }
            if (!covered) {
                if (!missing.empty()) missing += ", ";
                missing += sb.vars->name(i);
            }
        }
        fail(ErrorCode::NotFinite,
             "quotient is infinite-dimensional: no pure-power leading term in " + missing);
    }
    return LocalAlgebra(sb, std::move(*std_mons));
}

} // namespace elkchi
