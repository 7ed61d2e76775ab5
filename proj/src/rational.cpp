#include "elkchi/rational.hpp"

#include <ostream>

namespace elkchi {

void Rational::set(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) fail(ErrorCode::BadInput, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::BadInput, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorCode::BadInput, "inverse of zero");
    return Rational(Integer(v_.get_den()), Integer(v_.get_num()));
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "malformed rational literal: " + text);
    }
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace elkchi
