#pragma once

#include "elkchi/local_degree.hpp"
#include "elkchi/weighted.hpp"

namespace elkchi {

// Data of the weighted-homogeneous link construction for f of type
// (d_1,...,d_n; d): p is the smallest positive integer with 2p > d and
// d_i | p for all i, a_i = p/d_i, omega = sum x_i^{2a_i}/(2a_i),
// g_1 = f - omega, g_2 = -f - omega, H_i = grad g_i.
struct SzafraniecData {
    long p = 0;
    std::vector<long> a;
    Polynomial omega;
    Polynomial g1, g2;
    MapGerm h1, h2;
};

struct LinkEulerResult {
    long chi = 0;
    long deg1 = 0;
    long deg2 = 0;
    long sphere_chi = 0; // chi(S^{n-1}): 0 for n even, 2 for n odd
    long p = 0;
};

long euler_characteristic_of_sphere(std::size_t n); // chi(S^{n-1})

// Requires check_weighted_type(f, w), f(0) = 0 and df(0) = 0.
SzafraniecData szafraniec_setup(const Polynomial& f, const WeightedType& w);

// chi of the link of {f = 0}: chi = 2 - (deg1 + deg2 + chi(S^{n-1})).
// Inputs with df(0) != 0 short-circuit with both degrees 0 (a germ that does
// not vanish at the origin has local degree 0).
LinkEulerResult link_euler(const Polynomial& f, const WeightedType& w);

// Odd-degree specialization chi = 2(1 - deg1) - chi(S^{n-1}); also computes
// deg2 and checks deg1 = deg2. Errors with D_EVEN when d is even.
LinkEulerResult link_euler_odd(const Polynomial& f, const WeightedType& w);

// chi of the link of {f_1 = ... = f_s = 0} via f = sum f_i^2 and
// g = f - (x_1^2+...+x_n^2)^k: the least k <= k_max giving a finite local
// quotient is used and chi = 1 - deg grad g.
struct VarietyLinkResult {
    long chi = 0;
    long k_used = 0;
    long degree = 0;
};
VarietyLinkResult variety_link_euler(const std::vector<Polynomial>& f_list, long k_max = 20);

} // namespace elkchi
