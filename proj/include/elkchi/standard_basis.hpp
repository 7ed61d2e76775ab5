#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elkchi/polynomial.hpp"
#include "elkchi/term_order.hpp"

namespace elkchi {

// Leading term of p with respect to the order; p must be nonzero.
Polynomial::Term leading_term(const Polynomial& p, const TermOrder& order);

// Standard basis of an ideal: Buchberger completion with ordinary division
// for global orders, Mora weak normal form for local ones. Generators are
// monic and leading-term minimal; tails are fully reduced for global orders
// and for local orders with a finite-dimensional quotient.
struct StandardBasis {
    VarsPtr vars;
    TermOrder order;
    std::vector<Polynomial> gens;
    std::vector<Monomial> leading;
    // When set, m^drop_degree is contained in the ideal (known for bases of
    // finite-dimensional local quotients); normal forms may drop any monomial
    // of total degree >= drop_degree.
    std::optional<int> drop_degree;

    // Debug dump: one generator per line, canonical printing.
    std::string dump() const;
};

enum class PairStrategy {
    NormalFifo,     // minimal lcm degree first, FIFO among ties
    DegRevLexLifo,  // largest lcm in grevlex first, LIFO among ties
};

StandardBasis compute_standard_basis(const std::vector<Polynomial>& gens, TermOrder order,
                                     PairStrategy strategy = PairStrategy::NormalFifo);

// Standard basis of a zero-dimensional ideal under the local order, by
// Buchberger completion modulo m^N for increasing N: under a local order
// every S-polynomial against a virtual monomial generator of m^N truncates
// to zero, and mu(I + m^N) = mu(I + m^N') for N < N' certifies m^N <= I.
// Throws NOT_FINITE when no such N below degree_cap stabilizes (the quotient
// is infinite-dimensional up to the cap).
StandardBasis local_zero_dim_basis(const std::vector<Polynomial>& gens,
                                   PairStrategy strategy = PairStrategy::NormalFifo,
                                   int degree_cap = 64);

// Standard monomials of the leading ideal, or nullopt when the quotient is
// infinite-dimensional (some variable has no pure-power leading multiple).
// Sorted descending in the order (so 1 comes first for local orders).
// An implicit_bound of N treats every monomial of degree >= N as leading
// (the quotient modulo m^N is then always finite).
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading,
                                                        std::size_t nvars, const TermOrder& order,
                                                        std::optional<int> implicit_bound = {});

// Mora weak normal form: returns h with leading monomial not divisible by any
// leading monomial of gens, and u*p == h mod <gens> for some local unit u.
Polynomial mora_weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                                 const TermOrder& order);

// Full normal form supported on standard monomials. For local orders this
// requires the quotient to be finite-dimensional; `drop_degree` is the bound
// N with m^N contained in the ideal (monomials of total degree >= N vanish).
Polynomial reduce_to_standard(const Polynomial& p, const std::vector<Polynomial>& gens,
                              const std::vector<Monomial>& leading, const TermOrder& order,
                              std::optional<int> drop_degree);

// Remainder of p modulo sb: fully reduced onto standard monomials whenever
// the order is global or the local quotient is finite; otherwise the Mora
// weak normal form.
Polynomial normal_form(const Polynomial& p, const StandardBasis& sb);

} // namespace elkchi
