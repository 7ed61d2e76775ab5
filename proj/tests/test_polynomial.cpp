#include "test_helpers.hpp"

#include "elkchi/weighted.hpp"

using namespace elkchi;
using namespace elkchi::tests;

TEST_SUITE("polynomial") {

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).denominator() > 0);
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational::parse("-10/4").str() == "-5/2");
    CHECK(Rational(3, 2).inverse() == Rational(2, 3));
    CHECK_ENGINE_ERROR(Rational(1, 0), ErrorCode::BadInput);
    CHECK_ENGINE_ERROR(Rational(1, 2) / Rational(0), ErrorCode::BadInput);
}

TEST_CASE("parsing the cubic surface equation") {
    Polynomial p = poly("x^2*z + y^2", vars_xyz());
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial({2, 0, 1})) == Rational(1));
    CHECK(p.coefficient(Monomial({0, 2, 0})) == Rational(1));
}

TEST_CASE("parsing the zero polynomial") {
    CHECK(poly("0", vars_xyz()).is_zero());
    CHECK(poly("0", vars_xyz()).str() == "0");
}

TEST_CASE("parsing a three-term gradient component") {
    VarsPtr v6 = make_vars({"x1", "x2", "y1", "y2", "z1", "z2"});
    Polynomial p = poly("2*x1*z1 - 2*z2*x2 - x1^5", v6);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial({1, 0, 0, 0, 1, 0})) == Rational(2));
    CHECK(p.coefficient(Monomial({0, 1, 0, 0, 0, 1})) == Rational(-2));
    CHECK(p.coefficient(Monomial({5, 0, 0, 0, 0, 0})) == Rational(-1));
}

TEST_CASE("parse errors carry positions") {
    try {
        poly("x +* y", vars_xy());
        CHECK(false);
    } catch (const EngineError& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("column 4") != std::string::npos);
    }
    CHECK_ENGINE_ERROR(poly("x + w", vars_xy()), ErrorCode::UnknownVariable);
    CHECK_ENGINE_ERROR(poly("x^-2", vars_xy()), ErrorCode::BadExponent);
    CHECK_ENGINE_ERROR(poly("x^y", vars_xy()), ErrorCode::BadExponent);
    CHECK_ENGINE_ERROR(poly("2 x", vars_xy()), ErrorCode::ParseError); // no implicit product
    CHECK_ENGINE_ERROR(poly("x/2", vars_xy()), ErrorCode::ParseError); // '/' only in literals
}

TEST_CASE("rational literals and parentheses") {
    Polynomial p = poly("1/2*x - (y - 3/4)", vars_xy());
    CHECK(p.coefficient(Monomial({1, 0})) == Rational(1, 2));
    CHECK(p.coefficient(Monomial({0, 1})) == Rational(-1));
    CHECK(p.constant_coefficient() == Rational(3, 4));
    CHECK(poly("(x + y)^2", vars_xy()) == poly("x^2 + 2*x*y + y^2", vars_xy()));
}

TEST_CASE("canonical printing round trips") {
    const char* inputs[] = {
        "x^2*z + y^2",
        "2*x1 - 1/2",
        "-x + y - 1",
        "x^5 - 2*x^2*y^2 + 7",
    };
    for (const char* text : inputs) {
        VarsPtr v = std::string(text).find("x1") != std::string::npos ? make_vars({"x1"})
                                                                      : vars_xyz();
        Polynomial p = parse_polynomial(text, v);
        CHECK(parse_polynomial(p.str(), v) == p);
        CHECK(parse_polynomial(p.str(), v).str() == p.str());
    }
}

TEST_CASE("partial derivatives") {
    CHECK(poly("x^2*z + y^2", vars_xyz()).derivative("y") == poly("2*y", vars_xyz()));
    Polynomial g1 = poly("z*x^2 + z*y^2 + y^3 - (1/4*x^4 + 1/4*y^4 + 1/4*z^4)", vars_xyz());
    CHECK(g1.derivative("y") == poly("3*y^2 + 2*y*z - y^3", vars_xyz()));
    CHECK(poly("5", vars_xy()).derivative("x").is_zero());
    CHECK_ENGINE_ERROR(poly("x", vars_xy()).derivative("q"), ErrorCode::UnknownVariable);
}

TEST_CASE("gradients in variable order") {
    auto grad = gradient_components(poly("x^2 + y^2", vars_xy()));
    CHECK(grad[0] == poly("2*x", vars_xy()));
    CHECK(grad[1] == poly("2*y", vars_xy()));

    Polynomial g1 = poly("z*x^2 + z*y^2 + y^3 - (1/4*x^4 + 1/4*y^4 + 1/4*z^4)", vars_xyz());
    auto h1 = gradient_components(g1);
    CHECK(h1[0] == poly("2*x*z - x^3", vars_xyz()));
    CHECK(h1[1] == poly("3*y^2 + 2*y*z - y^3", vars_xyz()));
    CHECK(h1[2] == poly("x^2 + y^2 - z^3", vars_xyz()));

    VarsPtr v6 = make_vars({"x1", "x2", "y1", "y2", "z1", "z2"});
    Polynomial f = poly("z1*(x1^2 - x2^2) - 2*z2*x1*x2 + y1^2 - y2^2", v6);
    Polynomial omega = poly("1/6*x1^6 + 1/6*x2^6 + 1/4*y1^4 + 1/4*y2^4 + 1/6*z1^6 + 1/6*z2^6", v6);
    auto h2 = gradient_components(-f - omega);
    CHECK(h2[0] == poly("-2*x1*z1 + 2*z2*x2 - x1^5", v6));
    CHECK(h2[1] == poly("2*x2*z1 + 2*x1*z2 - x2^5", v6));

    CHECK_ENGINE_ERROR(gradient_components(poly("7", vars_xy())), ErrorCode::BadInput);
}

TEST_CASE("weighted homogeneity of the fixture polynomials") {
    VarsPtr v6 = make_vars({"x1", "x2", "y1", "y2", "z1", "z2"});
    Polynomial f = poly("z1*(x1^2 - x2^2) - 2*z2*x1*x2 + y1^2 - y2^2", v6);
    CHECK(check_weighted_type(f, WeightedType{{2, 2, 3, 3, 2, 2}, 6}));

    CHECK(check_weighted_type(poly("z*x^2 + z*y^2 + y^3", vars_xyz()),
                              WeightedType{{1, 1, 1}, 3}));
    CHECK_FALSE(check_weighted_type(poly("x^2 + y^3", vars_xy()), WeightedType{{1, 1}, 2}));
    CHECK_ENGINE_ERROR(check_weighted_type(poly("x", vars_xy()), WeightedType{{1}, 1}),
                       ErrorCode::DimensionMismatch);
}

TEST_CASE("weighted type inference") {
    auto w = infer_weighted_type(poly("z*x^2 + z*y^2 + y^3", vars_xyz()));
    REQUIRE(w.has_value());
    CHECK(w->weights == std::vector<long>{1, 1, 1});
    CHECK(w->degree == 3);

    VarsPtr v5 = make_vars({"x", "y", "z", "u", "v"});
    auto wq = infer_weighted_type(parse_polynomial("x*y + 2*u*v", v5));
    REQUIRE(wq.has_value());
    CHECK(wq->weights == std::vector<long>{1, 1, 1, 1, 1});
    CHECK(wq->degree == 2);
    auto wp = infer_weighted_type(parse_polynomial("y^4 - z^2*x^2 - x^4 + u^2 - v^2", v5));
    REQUIRE(wp.has_value());
    CHECK(wp->weights == std::vector<long>{1, 1, 1, 2, 2});
    CHECK(wp->degree == 4);

    CHECK_FALSE(infer_weighted_type(poly("x + x^2", vars_xy())).has_value());
}

TEST_CASE("exact evaluation") {
    CHECK(poly("x^2 + y^2", vars_xy()).evaluate({Rational(3, 2), Rational(1, 2)}) ==
          Rational(5, 2));
    CHECK(poly("x^3 - 2*x*y", vars_xy()).evaluate({Rational(0), Rational(0)}) == Rational(0));
    CHECK(poly("2*x*z - x^3", vars_xyz()).evaluate({Rational(1), Rational(0), Rational(1)}) ==
          Rational(1));
    CHECK_ENGINE_ERROR(poly("x", vars_xy()).evaluate({Rational(1)}),
                       ErrorCode::DimensionMismatch);
}

TEST_CASE("values over mismatched variable sets are rejected") {
    VarsPtr other = make_vars({"a", "b"});
    CHECK_ENGINE_ERROR(poly("x", vars_xy()) + parse_polynomial("a", other),
                       ErrorCode::DimensionMismatch);
}

} // TEST_SUITE
