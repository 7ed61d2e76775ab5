#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "elkchi/errors.hpp"

namespace elkchi {

// Ordered list of variable names; shared by all values built over it.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Returns the index of `name`, or npos if absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr make_vars(std::vector<std::string> names);

inline void require_same_vars(const VarsPtr& a, const VarsPtr& b) {
    if (a.get() != b.get() && !(*a == *b))
        fail(ErrorCode::DimensionMismatch, "values built over different variable sets");
}

// Exponent vector; length always equals the ambient variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, int e = 1);

    std::size_t nvars() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int total_degree() const;
    bool is_one() const;
    // True iff the monomial is x_i^k for a single i (k >= 1); sets i.
    bool is_pure_power(std::size_t& i) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;     // this | o
    Monomial divided_by(const Monomial& o) const; // this / o, exact
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> exps_;
};

// Graded reverse lexicographic comparison on the declared variable order.
// Returns <0, 0, >0 as a is smaller, equal, larger than b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

// Canonical storage/printing order: grevlex, larger first.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

} // namespace elkchi
