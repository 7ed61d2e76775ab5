#pragma once

#include <optional>
#include <vector>

#include "elkchi/polynomial.hpp"

namespace elkchi {

// Weighted homogeneity type (d_1,...,d_n; d): positive weights, positive degree.
struct WeightedType {
    std::vector<long> weights;
    long degree = 0;
};

long weighted_degree(const Monomial& m, const std::vector<long>& weights);

// sum_i d_i x_i dp/dx_i - d * p; the zero polynomial iff p is weighted
// homogeneous of type w.
Polynomial euler_defect(const Polynomial& p, const WeightedType& w);

// True iff every monomial of p has weighted degree w.degree. Both the
// per-monomial check and the Euler relation are evaluated and must agree.
bool check_weighted_type(const Polynomial& p, const WeightedType& w);

// Attempts to find a weighted type for p (smallest positive integer weights,
// free weights set to 1). Returns nullopt when none exists with this
// normalization. The result always satisfies check_weighted_type.
std::optional<WeightedType> infer_weighted_type(const Polynomial& p);

} // namespace elkchi
