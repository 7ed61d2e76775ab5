#include "elkchi/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace elkchi {

Polynomial::Polynomial(VarsPtr vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.mon.nvars() != vars_->size())
            fail(ErrorCode::DimensionMismatch, "monomial arity does not match variable count");
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.mon, b.mon) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(VarsPtr vars, const Rational& c) {
    Polynomial p(vars);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(vars->size()), c});
    return p;
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t i) {
    Polynomial p(vars);
    p.terms_.push_back({Monomial::var(vars->size(), i), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(VarsPtr vars, const Monomial& m, const Rational& c) {
    Polynomial p(vars);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mon == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon, -t.coeff});
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(vars_, o.vars_);
    if (this == &o) return *this = scaled(Rational(2));
    // Merge two canonically sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (i == terms_.size()) { out.push_back(o.terms_[j++]); continue; }
        if (j == o.terms_.size()) { out.push_back(std::move(terms_[i++])); continue; }
        int c = grevlex_cmp(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) out.push_back(std::move(terms_[i++]));
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mon, s});
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a.vars_, b.vars_);
    std::map<Monomial, Rational, GrevlexDesc> acc;
    for (const Polynomial::Term& s : a.terms_)
        for (const Polynomial::Term& t : b.terms_) {
            Monomial m = s.mon * t.mon;
            auto [it, fresh] = acc.try_emplace(std::move(m), Rational(0));
            it->second += s.coeff * t.coeff;
        }
    Polynomial r(a.vars_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(vars_);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(vars_);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) fail(ErrorCode::BadExponent, "negative exponent");
    Polynomial r = constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.vars_.get() == b.vars_.get() || *a.vars_ == *b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    if (i >= nvars()) fail(ErrorCode::UnknownVariable, "variable index out of range");
    Polynomial r(vars_);
    for (const Term& t : terms_) {
        int e = t.mon.exponent(i);
        if (e == 0) continue;
        std::vector<int> exps = t.mon.exponents();
        exps[i] = e - 1;
        r.terms_.push_back({Monomial(std::move(exps)), t.coeff * Rational(e)});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    std::size_t i = vars_->index_of(var);
    if (i == VariableSet::npos) fail(ErrorCode::UnknownVariable, "unknown variable: " + var);
    return derivative(i);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars())
        fail(ErrorCode::DimensionMismatch, "point arity does not match variable count");
    Rational acc(0);
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < nvars(); ++i) {
            int e = t.mon.exponent(i);
            for (int k = 0; k < e; ++k) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Rational>>& a) const {
    if (a.size() != nvars())
        fail(ErrorCode::DimensionMismatch, "substitution matrix must be square of variable count");
    std::vector<Polynomial> images;
    images.reserve(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (a[i].size() != nvars())
            fail(ErrorCode::DimensionMismatch, "substitution matrix must be square of variable count");
        Polynomial img(vars_);
        for (std::size_t j = 0; j < nvars(); ++j)
            if (!a[i][j].is_zero())
                img += Polynomial::monomial(vars_, Monomial::var(nvars(), j), a[i][j]);
        images.push_back(std::move(img));
    }
    Polynomial r(vars_);
    for (const Term& t : terms_) {
        Polynomial term = Polynomial::constant(vars_, t.coeff);
        for (std::size_t i = 0; i < nvars(); ++i) {
            int e = t.mon.exponent(i);
            if (e > 0) term = term * images[i].pow(e);
        }
        r += term;
    }
    return r;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool any_var = !t.mon.is_one();
        if (!any_var || c != Rational(1)) {
            os << c.str();
            if (any_var) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < nvars(); ++i) {
            int e = t.mon.exponent(i);
            if (e == 0) continue;
            if (started) os << "*";
            started = true;
            os << vars_->name(i);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial differentiate(const Polynomial& p, const std::string& var) {
    return p.derivative(var);
}

std::vector<Polynomial> gradient_components(const Polynomial& p) {
    if (p.is_constant())
        fail(ErrorCode::BadInput, "gradient of a constant polynomial");
    std::vector<Polynomial> comps;
    comps.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) comps.push_back(p.derivative(i));
    return comps;
}

} // namespace elkchi
