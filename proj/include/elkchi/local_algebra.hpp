#pragma once

#include <vector>

#include "elkchi/standard_basis.hpp"

namespace elkchi {

// Finite-dimensional quotient algebra: standard-monomial basis plus the
// multiplication-by-x_i matrices. Dimension mu = |basis|.
class LocalAlgebra {
public:
    LocalAlgebra(StandardBasis sb, std::vector<Monomial> basis);

    const StandardBasis& standard_basis() const { return sb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::size_t mu() const { return basis_.size(); }
    const VarsPtr& vars() const { return sb_.vars; }

    // mu x mu matrix of multiplication by x_i in the standard-monomial basis.
    const std::vector<std::vector<Rational>>& mult_matrix(std::size_t i) const {
        return mult_[i];
    }

    std::size_t index_of(const Monomial& m) const; // npos when not a basis monomial
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Rational> normal_form_vector(const Polynomial& p) const;
    Polynomial to_polynomial(const std::vector<Rational>& coords) const;

    // Coordinate vector of the class of x^gamma (gamma arbitrary).
    std::vector<Rational> monomial_class(const Monomial& gamma) const;

private:
    Polynomial reduce(const Polynomial& p) const;

    StandardBasis sb_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<std::vector<Rational>>> mult_;
};

// Standard monomials and multiplication tables of the quotient by sb.
// Throws NOT_FINITE when some variable has no pure-power leading-term
// multiple (non-isolated zero / infinite-dimensional quotient).
LocalAlgebra quotient_basis(const StandardBasis& sb);

} // namespace elkchi
