#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elkchi/monomial.hpp"
#include "elkchi/rational.hpp"

namespace elkchi {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored duplicate-free, zero-coefficient-free, sorted grevlex
// descending on the declared variable order (canonical form).
class Polynomial {
public:
    struct Term {
        Monomial mon;
        Rational coeff;
    };

    explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}
    Polynomial(VarsPtr vars, std::vector<Term> terms);

    static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarsPtr vars, const Rational& c);
    static Polynomial variable(VarsPtr vars, std::size_t i);
    static Polynomial monomial(VarsPtr vars, const Monomial& m, const Rational& c);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const; // 0 for the zero polynomial
    Rational coefficient(const Monomial& m) const;
    Rational constant_coefficient() const { return coefficient(Monomial::one(nvars())); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact partial derivative with respect to variable index i.
    Polynomial derivative(std::size_t i) const;
    Polynomial derivative(const std::string& var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // p(A x): substitutes x_i -> sum_j A[i][j] x_j. A must be nvars x nvars.
    Polynomial substitute_linear(const std::vector<std::vector<Rational>>& a) const;

    // Positive rational c such that p/c has coprime integer coefficients.
    Rational content() const;

    // Canonical printing; parse(str()) reproduces the polynomial bit-exactly.
    std::string str() const;

private:
    void normalize();

    VarsPtr vars_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Partial derivative by name (errors on unknown variable).
Polynomial differentiate(const Polynomial& p, const std::string& var);

// The n-tuple of partials in variable order; p must be nonconstant.
std::vector<Polynomial> gradient_components(const Polynomial& p);

} // namespace elkchi
