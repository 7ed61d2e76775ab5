#include "elkchi/map_germ.hpp"

namespace elkchi {

MapGerm::MapGerm(VarsPtr vars, std::vector<Polynomial> components)
    : vars_(std::move(vars)), comps_(std::move(components)) {
    if (comps_.size() != vars_->size())
        fail(ErrorCode::DimensionMismatch, "map germ must have as many components as variables");
    for (const Polynomial& c : comps_) require_same_vars(vars_, c.vars());
}

MapGerm MapGerm::gradient(const Polynomial& p) {
    return MapGerm(p.vars(), gradient_components(p));
}

bool MapGerm::vanishes_at_origin() const {
    for (const Polynomial& c : comps_)
        if (!c.constant_coefficient().is_zero()) return false;
    return true;
}

MapGerm MapGerm::precompose_linear(const std::vector<std::vector<Rational>>& a) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const Polynomial& c : comps_) out.push_back(c.substitute_linear(a));
    return MapGerm(vars_, std::move(out));
}

std::vector<Rational> MapGerm::evaluate(const std::vector<Rational>& point) const {
    std::vector<Rational> v;
    v.reserve(comps_.size());
    for (const Polynomial& c : comps_) v.push_back(c.evaluate(point));
    return v;
}

} // namespace elkchi
