#pragma once

#include "elkchi/monomial.hpp"

namespace elkchi {

enum class OrderKind {
    GlobalDegRevLex,   // well-order, 1 smallest
    LocalNegDegRevLex, // 1 largest; standard monomials describe the local ring at 0
};

struct TermOrder {
    OrderKind kind = OrderKind::GlobalDegRevLex;

    bool is_global() const { return kind == OrderKind::GlobalDegRevLex; }

    // >0 if a is larger than b in this order.
    int cmp(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) {
            int by_degree = da < db ? -1 : 1;
            return is_global() ? by_degree : -by_degree;
        }
        return grevlex_cmp(a, b);
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    const char* name() const {
        return is_global() ? "GLOBAL_DEGREVLEX" : "LOCAL_NEG_DEGREVLEX";
    }
};

inline TermOrder global_order() { return {OrderKind::GlobalDegRevLex}; }
inline TermOrder local_order() { return {OrderKind::LocalNegDegRevLex}; }

} // namespace elkchi
