#include "elkchi/parse.hpp"

#include <cctype>

namespace elkchi {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarsPtr& vars) : text_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            error(ErrorCode::ParseError, "unexpected character");
        return p;
    }

private:
    [[noreturn]] void error(ErrorCode code, const std::string& what) const {
        fail(code, what + " at column " + std::to_string(pos_ + 1));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        if (consume('-')) neg = true;
        else consume('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (consume('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        if (consume('-')) return -factor();
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            return base.pow(exponent());
        }
        return base;
    }

    int exponent() {
        char c = peek();
        if (c == '-') error(ErrorCode::BadExponent, "negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(c)))
            error(ErrorCode::BadExponent, "exponent must be a non-negative integer literal");
        Integer n = integer_literal();
        if (!n.fits_sint_p()) error(ErrorCode::BadExponent, "exponent too large");
        return static_cast<int>(n.get_si());
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!consume(')')) error(ErrorCode::ParseError, "expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_literal();
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    error(ErrorCode::ParseError, "expected integer after '/' in rational literal");
                Integer den = integer_literal();
                if (sgn(den) == 0) error(ErrorCode::ParseError, "zero denominator in rational literal");
                return Polynomial::constant(vars_, Rational(num, den));
            }
            return Polynomial::constant(vars_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string ident = identifier();
            std::size_t idx = vars_->index_of(ident);
            if (idx == VariableSet::npos) {
                pos_ = start;
                error(ErrorCode::UnknownVariable, "unknown variable '" + ident + "'");
            }
            return Polynomial::variable(vars_, idx);
        }
        error(ErrorCode::ParseError, "expected a number, variable or '('");
    }

    Integer integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    const std::string& text_;
    const VarsPtr& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars) {
    return Parser(text, vars).run();
}

} // namespace elkchi
