#pragma once

#include <optional>

#include "elkchi/local_algebra.hpp"
#include "elkchi/map_germ.hpp"
#include "elkchi/signature.hpp"

namespace elkchi {

// Exact determinant of the matrix of partials of H, expanded.
Polynomial jacobian_determinant(const MapGerm& h);

// Determinant of an arbitrary square polynomial matrix.
Polynomial poly_matrix_determinant(const std::vector<std::vector<Polynomial>>& m);

// Bilinear pairing <a,b> = phi(ab) on the local algebra of H, with phi the
// sign-adjusted dual of a support monomial of the Jacobian class, so that
// phi(J) > 0. The matrix is symmetric and nonsingular for valid germs.
struct GramForm {
    std::vector<Monomial> basis;
    std::vector<std::vector<Rational>> matrix;
    Monomial functional_monomial;
    int functional_sign = 1;
    Polynomial jacobian_class;
};

struct DegreeResult {
    long degree = 0;
    std::size_t mu = 0;
    SignatureResult sig;
};

// Builds the Gram form over a precomputed local algebra. The functional is
// the sign-adjusted dual of the support monomial of the Jacobian class with
// the given rank in the local order (0 = highest, the default choice).
GramForm build_gram_form(const MapGerm& h, const LocalAlgebra& algebra,
                         std::size_t support_rank = 0);

// Local topological degree at the origin via the signature of the Gram form.
// Germs splitting into independent variable blocks are computed blockwise
// (with the orientation sign of the permutations) unless split = false.
DegreeResult local_degree_detailed(const MapGerm& h, bool split = true);
long local_degree(const MapGerm& h);
long local_degree_no_split(const MapGerm& h);

// Signatures over the whole admissible family of functionals (one entry per
// support monomial of the Jacobian class); all entries agree for valid germs.
std::vector<long> elk_signatures_over_support(const MapGerm& h);

} // namespace elkchi
