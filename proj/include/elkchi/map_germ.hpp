#pragma once

#include <vector>

#include "elkchi/polynomial.hpp"

namespace elkchi {

// A square polynomial map germ (R^n,0) -> R^n: n components in n variables.
// Construction does not demand H(0) = 0; the degree computation rejects
// germs with a nonzero constant term (degree at 0 undefined there).
class MapGerm {
public:
    MapGerm(VarsPtr vars, std::vector<Polynomial> components);

    static MapGerm gradient(const Polynomial& p);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& component(std::size_t i) const { return comps_[i]; }

    bool vanishes_at_origin() const;

    // H(A x): precomposition with a linear change of variables.
    MapGerm precompose_linear(const std::vector<std::vector<Rational>>& a) const;

    std::vector<Rational> evaluate(const std::vector<Rational>& point) const;

private:
    VarsPtr vars_;
    std::vector<Polynomial> comps_;
};

} // namespace elkchi
