#pragma once

#include <vector>

#include "elkchi/rational.hpp"

namespace elkchi {

// Inertia of a symmetric rational matrix: n_plus + n_minus + n_zero = size.
struct SignatureResult {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    long signature() const {
        return static_cast<long>(n_plus) - static_cast<long>(n_minus);
    }
};

// Exact signature by symmetric congruence reduction (Lagrange/Jacobi) with
// diagonal pivoting; fully zero-diagonal blocks are handled by extracting a
// hyperbolic 2x2 block contributing (1,1,0). Errors on non-symmetric input.
SignatureResult exact_signature(const std::vector<std::vector<Rational>>& m);

} // namespace elkchi
