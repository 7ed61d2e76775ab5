#pragma once

#include <optional>
#include <string>

#include "elkchi/link_euler.hpp"

namespace elkchi {

enum class DeltaSign { Plus, Minus };

// chi(f^{-1}(delta) cap B_eps) = 1 - sign(-delta)^n deg_0 grad f, for an
// isolated critical point of f.
long khimshiashvili_chi(const Polynomial& f, DeltaSign delta);

struct IsolatedMilnorResult {
    long chi = 0;
    std::vector<long> degrees; // deg_0 grad f_i, all equal (n even) or all 0 (n odd)
};

// chi of the Milnor fibre of psi = (f_1,...,f_k) with 0 an isolated singular
// point: 1 - deg_0 grad f_1 when n is even (all gradient degrees must agree),
// 1 when n is odd (all gradient degrees must vanish).
IsolatedMilnorResult isolated_milnor_chi(const std::vector<Polynomial>& psi);

struct MilnorInvariants {
    std::size_t n = 0;       // ambient dimension
    std::size_t k = 0;       // number of components of F
    long chi_mf = 0;         // chi(M_F)
    bool milnor_ab_asserted = false;
};

// chi(L_I) for |I| = l per the link table:
//   n even: 2*chi(M_F) for l odd, 0 for l even;
//   n odd:  2 - 2*chi(M_F) for l odd, 2 for l even.
long link_chi_value(std::size_t n, std::size_t l, long chi_mf);

struct LinkTable {
    std::vector<long> chi_l; // chi(L_I), |I| = l, index l-1, l = 1..k
};
LinkTable link_table(const MilnorInvariants& inv);

// Inverts the l = 1 row: n even -> chi_L/2, n odd -> (2 - chi_L)/2. Errors on
// parity violation.
long milnor_chi_from_link(long chi_l1, std::size_t n);

// chi(L_J) - chi(L_I) = (-1)^{n-l} 2 chi(M_F), J = I minus its last element.
bool charl1_check(long chi_lj, long chi_li, std::size_t n, std::size_t l, long chi_mf);

// chi of f_I^{-1}(delta) cap {sign constraints} cap B_eps: equals chi(M_F)
// for every sign pattern; |I| + |pattern| <= k.
long semianalytic_chi(const MilnorInvariants& inv, std::size_t l,
                      const std::vector<int>& sign_pattern);

// chi of the boundary of a compact manifold-with-boundary: 2*chi(M) when
// dim M is odd, 0 when even.
long boundary_chi(long chi_m, long dim_m);

struct FukuiResult {
    long degree = 0;
    long d_value = 0; // D for delta > 0
};
// D = -sign(-delta)^n deg_0 H with H = (f1, df1/dx2, ..., df1/dxn), delta > 0.
FukuiResult fukui_D(const Polynomial& f1);

struct AokiResult {
    long degree = 0;
    long semibranches = 0;
    bool oracle_fallback = false; // degree obtained geometrically (n <= 3)
};
// Semi-branch count 2*deg_0 H of phi^{-1}(0), with
// H = (jacobian det of (f_n, phi), phi) and f_n defaulting to sum x_i^2.
AokiResult aoki_semibranches(const std::vector<Polynomial>& phi,
                             const std::optional<Polynomial>& fn = std::nullopt);

struct Mod2Result {
    std::size_t mu = 0;
    int bit = 0;
};
// dim_R O/I mod 2 with I = (f_1,...,f_{k-1}, all kxk minors of the Jacobian
// of (f_k, f_1, ..., f_{k-1})).
Mod2Result dutertre_mod2(const std::vector<Polynomial>& psi);

struct ConsistencyRow {
    std::string relation;
    long expected = 0;
    long computed = 0;
    bool pass = false;
    std::string note;
};

struct ConsistencyReport {
    std::vector<ConsistencyRow> rows;
    bool all_pass = true;
    std::optional<long> chi_mf; // derived or witnessed chi(M_F)
};

struct LinkWitness {
    std::string name;
    long chi = 0;
};

// Cross-checks the link/fibre relations over the available witnesses: the
// l = 1 links of all components must realize the same chi(M_F); the link
// table must satisfy the CharL1 identity; boundary and semianalytic values
// are derived. A mismatch marks the Milnor (a)/(b) assertion as refuted.
ConsistencyReport verify_all(const MilnorInvariants& inv, const std::vector<LinkWitness>& links,
                             std::optional<long> chi_mf_witness = std::nullopt);

} // namespace elkchi
