#include "elkchi/standard_basis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace elkchi {

Polynomial::Term leading_term(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) fail(ErrorCode::Internal, "leading term of the zero polynomial");
    const Polynomial::Term* best = &p.terms()[0];
    for (const Polynomial::Term& t : p.terms())
        if (order.cmp(t.mon, best->mon) > 0) best = &t;
    return *best;
}

namespace {

int ecart(const Polynomial& p, const TermOrder& order) {
    return p.total_degree() - leading_term(p, order).mon.total_degree();
}

// Divide by content; make the leading coefficient positive.
Polynomial normalized(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) return p;
    Rational c = p.content();
    if (leading_term(p, order).coeff.sign() < 0) c = -c;
    return p.scaled(c.inverse());
}

Polynomial truncated(const Polynomial& p, int drop_degree) {
    std::vector<Polynomial::Term> keep;
    for (const Polynomial::Term& t : p.terms())
        if (t.mon.total_degree() < drop_degree) keep.push_back(t);
    if (keep.size() == p.terms().size()) return p;
    return Polynomial(p.vars(), std::move(keep));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    Polynomial::Term lf = leading_term(f, order);
    Polynomial::Term lg = leading_term(g, order);
    Monomial m = Monomial::lcm(lf.mon, lg.mon);
    return f.times_monomial(m.divided_by(lf.mon), lf.coeff.inverse()) -
           g.times_monomial(m.divided_by(lg.mon), lg.coeff.inverse());
}

// Buchberger completion; reduce must return a (possibly weak) normal form
// whose leading monomial is not divisible by any leading monomial of the
// current basis.
template <typename Reduce>
std::vector<Polynomial> complete(std::vector<Polynomial> basis, const TermOrder& order,
                                 PairStrategy strategy, const Reduce& reduce) {
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long seq;
    };
    std::vector<Pair> queue;
    long seq = 0;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back({i, j,
                             Monomial::lcm(leading_term(basis[i], order).mon,
                                           leading_term(basis[j], order).mon),
                             seq++});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto pick = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            const Pair &a = queue[k], &b = queue[best];
            bool better;
            if (strategy == PairStrategy::NormalFifo) {
                int da = a.lcm.total_degree(), db = b.lcm.total_degree();
                better = da < db || (da == db && a.seq < b.seq);
            } else {
                int c = grevlex_cmp(a.lcm, b.lcm);
                better = c > 0 || (c == 0 && a.seq > b.seq);
            }
            if (better) best = k;
        }
        Pair p = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));
        return p;
    };

    while (!queue.empty()) {
        Pair pr = pick();
        const Monomial lm_i = leading_term(basis[pr.i], order).mon;
        const Monomial lm_j = leading_term(basis[pr.j], order).mon;
        if (lm_i.coprime(lm_j)) continue; // product criterion
        // Chain criterion: a third leading monomial dividing the lcm, with
        // both mixed lcms proper, makes this pair redundant.
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const Monomial lm_k = leading_term(basis[k], order).mon;
            if (!lm_k.divides(pr.lcm)) continue;
            if (Monomial::lcm(lm_i, lm_k) != pr.lcm && Monomial::lcm(lm_j, lm_k) != pr.lcm)
                redundant = true;
        }
        if (redundant) continue;
        Polynomial h = reduce(spoly(basis[pr.i], basis[pr.j], order), basis);
        if (h.is_zero()) continue;
        basis.push_back(normalized(h, order));
        push_pairs(basis.size() - 1);
    }
    return basis;
}

// Leading-term minimal subset, deterministically ordered (degree, grevlex).
void minimalize(std::vector<Polynomial>& basis, std::vector<Monomial>& lms,
                const TermOrder& order) {
    std::vector<Monomial> all_lms;
    all_lms.reserve(basis.size());
    for (const Polynomial& g : basis) all_lms.push_back(leading_term(g, order).mon);
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int da = all_lms[a].total_degree(), db = all_lms[b].total_degree();
        if (da != db) return da < db;
        return grevlex_cmp(all_lms[a], all_lms[b]) < 0;
    });
    std::vector<Polynomial> kept;
    std::vector<Monomial> kept_lms;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (const Monomial& l : kept_lms)
            if (l.divides(all_lms[k])) { redundant = true; break; }
        if (!redundant) {
            kept.push_back(basis[k]);
            kept_lms.push_back(all_lms[k]);
        }
    }
    basis = std::move(kept);
    lms = std::move(kept_lms);
}

void make_monic(std::vector<Polynomial>& basis, const TermOrder& order) {
    for (Polynomial& g : basis) g = g.scaled(leading_term(g, order).coeff.inverse());
}

void reduce_tails(std::vector<Polynomial>& basis, const std::vector<Monomial>& lms,
                  const TermOrder& order, std::optional<int> drop) {
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Polynomial::Term lt = leading_term(basis[k], order);
        Polynomial head = Polynomial::monomial(basis[k].vars(), lt.mon, lt.coeff);
        Polynomial tail = basis[k] - head;
        reduced.push_back(head + reduce_to_standard(tail, basis, lms, order, drop));
    }
    basis = std::move(reduced);
}

std::vector<Polynomial> normalized_inputs(const std::vector<Polynomial>& inputs,
                                          const TermOrder& order) {
    if (inputs.empty()) fail(ErrorCode::BadInput, "no generators given");
    VarsPtr vars = inputs[0].vars();
    std::vector<Polynomial> basis;
    for (const Polynomial& p : inputs) {
        require_same_vars(vars, p.vars());
        if (p.is_zero()) continue;
        basis.push_back(normalized(p, order));
    }
    if (basis.empty()) fail(ErrorCode::BadInput, "all generators are zero");
    return basis;
}

// One truncated completion: a reduced standard basis of I + m^N together
// with its quotient dimension.
std::pair<std::vector<Polynomial>, std::size_t> complete_modulo_power(
    const std::vector<Polynomial>& inputs, int n, PairStrategy strategy) {
    const TermOrder order = local_order();
    std::vector<Polynomial> start;
    for (const Polynomial& p : inputs) {
        Polynomial q = truncated(p, n);
        if (!q.is_zero()) start.push_back(normalized(q, order));
    }
    std::vector<Monomial> lms;
    std::vector<Polynomial> basis;
    std::size_t mu = 0;
    if (start.empty()) {
        basis = {};
        lms = {};
    } else {
        auto reduce = [&order, n](const Polynomial& p, const std::vector<Polynomial>& gens) {
            std::vector<Monomial> leads;
            leads.reserve(gens.size());
            for (const Polynomial& g : gens) leads.push_back(leading_term(g, order).mon);
            return reduce_to_standard(p, gens, leads, order, n);
        };
        basis = complete(start, order, strategy, reduce);
        minimalize(basis, lms, order);
        make_monic(basis, order);
        reduce_tails(basis, lms, order, n);
    }
    const std::size_t nvars = inputs[0].nvars();
    auto std_mons = standard_monomials(lms, nvars, order, n);
    mu = std_mons->size();
    return {std::move(basis), mu};
}

} // namespace

Polynomial mora_weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                                 const TermOrder& order) {
    std::vector<Polynomial> reducers = gens;
    std::vector<Polynomial::Term> lead(reducers.size());
    std::vector<int> ecarts(reducers.size());
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        lead[i] = leading_term(reducers[i], order);
        ecarts[i] = ecart(reducers[i], order);
    }
    Polynomial h = p;
    while (!h.is_zero()) {
        Polynomial::Term lh = leading_term(h, order);
        std::size_t best = reducers.size();
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!lead[i].mon.divides(lh.mon)) continue;
            if (best == reducers.size() || ecarts[i] < ecarts[best]) best = i;
        }
        if (best == reducers.size()) break;
        int eh = h.total_degree() - lh.mon.total_degree();
        if (ecarts[best] > eh) {
            reducers.push_back(h);
            lead.push_back(lh);
            ecarts.push_back(eh);
        }
        h -= reducers[best].times_monomial(lh.mon.divided_by(lead[best].mon),
                                           lh.coeff / lead[best].coeff);
        h = normalized(h, order);
    }
    return h;
}

Polynomial reduce_to_standard(const Polynomial& p, const std::vector<Polynomial>& gens,
                              const std::vector<Monomial>& leading, const TermOrder& order,
                              std::optional<int> drop_degree) {
    auto desc = [&order](const Monomial& a, const Monomial& b) { return order.cmp(a, b) > 0; };
    std::map<Monomial, Rational, decltype(desc)> work(desc);
    for (const Polynomial::Term& t : p.terms()) {
        if (drop_degree && t.mon.total_degree() >= *drop_degree) continue;
        work.emplace(t.mon, t.coeff);
    }

    std::vector<Polynomial::Term> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        std::size_t gi = gens.size();
        for (std::size_t i = 0; i < leading.size(); ++i)
            if (leading[i].divides(m)) { gi = i; break; }
        if (gi == gens.size()) {
            remainder.push_back({m, c});
            continue;
        }
        const Polynomial& g = gens[gi];
        Polynomial::Term lg = leading_term(g, order);
        Monomial shift = m.divided_by(lg.mon);
        Rational scale = c / lg.coeff;
        for (const Polynomial::Term& t : g.terms()) {
            if (t.mon == lg.mon) continue;
            Monomial mm = t.mon * shift;
            if (drop_degree && mm.total_degree() >= *drop_degree) continue;
            auto [jt, fresh] = work.try_emplace(mm, Rational(0));
            jt->second -= scale * t.coeff;
            if (jt->second.is_zero()) work.erase(jt);
        }
    }
    return Polynomial(p.vars(), std::move(remainder));
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading,
                                                        std::size_t nvars, const TermOrder& order,
                                                        std::optional<int> implicit_bound) {
    std::vector<int> bound(nvars, implicit_bound ? *implicit_bound : -1);
    for (const Monomial& m : leading) {
        if (m.is_one()) return std::vector<Monomial>{}; // unit ideal
        std::size_t i;
        if (m.is_pure_power(i)) {
            int e = m.exponent(i);
            if (bound[i] < 0 || e < bound[i]) bound[i] = e;
        }
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<Monomial> basis;
    std::vector<int> exps(nvars, 0);
    auto admissible = [&](const Monomial& m) {
        if (implicit_bound && m.total_degree() >= *implicit_bound) return false;
        for (const Monomial& l : leading)
            if (l.divides(m)) return false;
        return true;
    };
    std::size_t i = 0;
    while (true) {
        Monomial m{std::vector<int>(exps)};
        if (admissible(m)) basis.push_back(std::move(m));
        for (i = 0; i < nvars; ++i) {
            if (++exps[i] < bound[i]) break;
            exps[i] = 0;
        }
        if (i == nvars) break;
    }
    std::sort(basis.begin(), basis.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.cmp(a, b) > 0; });
    return basis;
}

StandardBasis compute_standard_basis(const std::vector<Polynomial>& inputs, TermOrder order,
                                     PairStrategy strategy) {
    std::vector<Polynomial> basis = normalized_inputs(inputs, order);
    VarsPtr vars = basis[0].vars();

    auto reduce = [&order](const Polynomial& p, const std::vector<Polynomial>& gens) {
        return mora_weak_normal_form(p, gens, order);
    };
    basis = complete(basis, order, strategy, reduce);

    std::vector<Monomial> lms;
    minimalize(basis, lms, order);
    make_monic(basis, order);

    // Tail reduction: always possible for global orders; for local orders only
    // when the quotient is finite (the degree-drop reducer terminates there).
    std::optional<int> drop;
    bool tails = order.is_global();
    if (!order.is_global()) {
        auto std_mons = standard_monomials(lms, vars->size(), order);
        if (std_mons) {
            tails = true;
            drop = static_cast<int>(std_mons->size());
        }
    }
    if (tails) reduce_tails(basis, lms, order, drop);

    return StandardBasis{vars, order, std::move(basis), std::move(lms), drop};
}

StandardBasis local_zero_dim_basis(const std::vector<Polynomial>& inputs, PairStrategy strategy,
                                   int degree_cap) {
    const TermOrder order = local_order();
    std::vector<Polynomial> start = normalized_inputs(inputs, order);
    VarsPtr vars = start[0].vars();

    int n0 = 2;
    for (const Polynomial& p : start) n0 = std::max(n0, p.total_degree() + 1);
    int cap = std::max(degree_cap, 2 * n0);
    std::optional<std::size_t> prev_mu;
    int prev_n = 0;
    for (int n = n0; n <= cap; n += 2) {
        auto [basis, mu] = complete_modulo_power(start, n, strategy);
        if (prev_mu && *prev_mu == mu) {
            // mu(I + m^prev_n) = mu(I + m^n) pins m^prev_n inside I, so the
            // basis modulo m^n is a genuine standard basis of I.
            std::vector<Monomial> lms;
            lms.reserve(basis.size());
            for (const Polynomial& g : basis) lms.push_back(leading_term(g, order).mon);
            return StandardBasis{vars, order, std::move(basis), std::move(lms), prev_n};
        }
        prev_mu = mu;
        prev_n = n;
    }
    fail(ErrorCode::NotFinite,
         "quotient did not stabilize below total degree " + std::to_string(cap) +
             "; the local quotient is infinite-dimensional (or exceeds the cap)");
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& sb) {
    require_same_vars(p.vars(), sb.vars);
    if (sb.gens.empty()) return p;
    if (sb.order.is_global())
        return reduce_to_standard(p, sb.gens, sb.leading, sb.order, std::nullopt);
    if (sb.drop_degree)
        return reduce_to_standard(p, sb.gens, sb.leading, sb.order, sb.drop_degree);
    auto std_mons = standard_monomials(sb.leading, sb.vars->size(), sb.order);
    if (std_mons)
        return reduce_to_standard(p, sb.gens, sb.leading, sb.order,
                                  static_cast<int>(std_mons->size()));
    return mora_weak_normal_form(p, sb.gens, sb.order);
}

std::string StandardBasis::dump() const {
    std::ostringstream os;
    for (const Polynomial& g : gens) os << g.str() << "\n";
    return os.str();
}

} // namespace elkchi
