#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "elkchi/errors.hpp"

namespace elkchi {

using Integer = mpz_class;

// Exact rational number, always reduced, denominator > 0. Canonical zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) { set(Integer(num), Integer(den)); }
    Rational(const Integer& num, const Integer& den) { set(num, den); }

    static Rational parse(const std::string& text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
    Rational inverse() const;

    // Prints "p" for integers, "p/q" otherwise.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    void set(const Integer& num, const Integer& den);

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace elkchi
