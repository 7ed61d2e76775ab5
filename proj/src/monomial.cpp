#include "elkchi/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace elkchi {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                fail(ErrorCode::BadInput, "duplicate variable name: " + names_[i]);
}

std::size_t VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<VariableSet>(std::move(names));
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, int e) {
    std::vector<int> exps(nvars, 0);
    exps.at(i) = e;
    return Monomial(std::move(exps));
}

int Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_pure_power(std::size_t& i) const {
    std::size_t found = VariableSet::npos;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] == 0) continue;
        if (found != VariableSet::npos) return false;
        found = k;
    }
    if (found == VariableSet::npos) return false;
    i = found;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    std::vector<int> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps[i] = exps_[i] - o.exps_[i];
        if (exps[i] < 0) fail(ErrorCode::Internal, "inexact monomial division");
    }
    return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> exps(a.exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(exps));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Same degree: the rightmost differing exponent decides; smaller there wins.
    for (std::size_t i = a.nvars(); i-- > 0;) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace elkchi
