#include "test_helpers.hpp"

#include "elkchi/local_degree.hpp"
#include "elkchi/oracle.hpp"

using namespace elkchi;
using namespace elkchi::tests;

TEST_SUITE("local-degree") {

TEST_CASE("jacobian determinants") {
    CHECK(jacobian_determinant(germ(vars_xy(), {"x", "y"})) == poly("1", vars_xy()));
    CHECK(jacobian_determinant(germ(vars_xy(), {"2*x", "-2*y"})) == poly("-4", vars_xy()));
    CHECK(jacobian_determinant(germ(vars_xy(), {"y^2 - x^3", "2*y"})) ==
          poly("-6*x^2", vars_xy()));
}

TEST_CASE("exact signature of small forms") {
    auto R = [](long v) { return Rational(v); };
    SignatureResult s1 = exact_signature({{R(1), R(0)}, {R(0), R(-1)}});
    CHECK(s1.n_plus == 1);
    CHECK(s1.n_minus == 1);
    CHECK(s1.n_zero == 0);

    SignatureResult s2 = exact_signature({{R(0), R(0)}, {R(0), R(0)}});
    CHECK(s2.n_zero == 2);

    SignatureResult s3 = exact_signature({{R(0), R(1)}, {R(1), R(0)}});
    CHECK(s3.n_plus == 1);
    CHECK(s3.n_minus == 1);
    CHECK(s3.n_zero == 0);

    CHECK_ENGINE_ERROR(exact_signature({{R(0), R(1)}, {R(2), R(0)}}), ErrorCode::BadInput);
    CHECK_ENGINE_ERROR(exact_signature({{R(0), R(1)}}), ErrorCode::DimensionMismatch);
}

TEST_CASE("signature of a dense indefinite form") {
    auto R = [](long a, long b) { return Rational(a, b); };
    // Congruent to diag(2, 3/2, -?) by hand elimination.
    std::vector<std::vector<Rational>> m = {
        {R(2, 1), R(1, 1), R(0, 1)},
        {R(1, 1), R(2, 1), R(1, 1)},
        {R(0, 1), R(1, 1), R(-1, 1)},
    };
    SignatureResult s = exact_signature(m);
    CHECK(s.n_plus == 2);
    CHECK(s.n_minus == 1);
    CHECK(s.n_zero == 0);
}

TEST_CASE("identity germs have degree one") {
    CHECK(local_degree(germ(vars_xy(), {"x", "y"})) == 1);
    CHECK(local_degree(germ(vars_xyz(), {"x", "y", "z"})) == 1);
    VarsPtr v1 = make_vars({"x"});
    CHECK(local_degree(MapGerm(v1, {parse_polynomial("x", v1)})) == 1);
}

TEST_CASE("the squaring germ has degree two") {
    DegreeResult d = local_degree_detailed(germ(vars_xy(), {"x^2 - y^2", "2*x*y"}), false);
    CHECK(d.degree == 2);
    CHECK(d.mu == 4);
    CHECK(d.sig.n_zero == 0);
}

TEST_CASE("the cubic gradient germ has degree minus one") {
    MapGerm h1 = germ(vars_xyz(), {"2*x*z - x^3", "3*y^2 + 2*y*z - y^3", "x^2 + y^2 - z^3"});
    DegreeResult d = local_degree_detailed(h1, false);
    CHECK(d.degree == -1);
    CHECK(d.mu == 9);
    CHECK(d.sig.n_zero == 0);
}

TEST_CASE("a rank-four quadratic germ with a cubic radial part") {
    // Gradient of (xy + 2uv) - (x^4+y^4+z^4+u^4+v^4)/4; splits into three
    // blocks of degrees -1, -1, -1.
    VarsPtr v5 = make_vars({"x", "y", "z", "u", "v"});
    MapGerm h(v5, {parse_polynomial("y - x^3", v5), parse_polynomial("x - y^3", v5),
                   parse_polynomial("-z^3", v5), parse_polynomial("2*v - u^3", v5),
                   parse_polynomial("2*u - v^3", v5)});
    CHECK(local_degree(h) == -1);
    CHECK(local_degree_no_split(h) == -1);
    CHECK(local_degree_detailed(h).mu == 3);
}

TEST_CASE("non-isolated zeros are reported") {
    CHECK_ENGINE_ERROR(local_degree(germ(vars_xy(), {"x", "0"})), ErrorCode::NonIsolatedZero);
    CHECK_ENGINE_ERROR(local_degree(germ(vars_xy(), {"x*y", "x^2"})),
                       ErrorCode::NonIsolatedZero);
}

TEST_CASE("germs with constant terms are rejected") {
    CHECK_ENGINE_ERROR(local_degree(germ(vars_xy(), {"x + 1", "y"})), ErrorCode::ConstantTerm);
    CHECK_ENGINE_ERROR(local_degree(germ(vars_xy(), {"1 - x^3", "-y^3"})),
                       ErrorCode::ConstantTerm);
}

TEST_CASE("blockwise and direct degree agree on interleaved blocks") {
    VarsPtr v4 = make_vars({"x1", "y1", "x2", "y2"});
    // Components interleave the (x1,x2) squaring block and the (y1,y2) swap.
    MapGerm h(v4, {parse_polynomial("x1^2 - x2^2", v4), parse_polynomial("y2", v4),
                   parse_polynomial("2*x1*x2", v4), parse_polynomial("y1", v4)});
    long split = local_degree(h);
    long direct = local_degree_no_split(h);
    CHECK(split == direct);
    CHECK(split == -2); // swap negates the squaring degree
}

TEST_CASE("classical plane-curve gradient germs") {
    // (f, mu of grad f, deg of grad f); the degree is 1 - (real branch count)
    // of {f = 0}, and the winding oracle confirms it independently.
    struct Entry {
        const char* f;
        std::size_t mu;
        long degree;
    };
    for (const Entry& e : std::initializer_list<Entry>{
             {"x^3 + y^2", 2, 0},
             {"x^4 + y^2", 3, 1},
             {"x^5 + y^2", 4, 0},
             {"x^3 - x*y^2", 4, -2},
             {"x^3 + x*y^2", 4, 0},
             {"x^3 + y^4", 6, 0},
             {"x^3 + x*y^3", 7, -1},
             {"x^3 + y^5", 8, 0},
         }) {
        CAPTURE(e.f);
        MapGerm grad = MapGerm::gradient(poly(e.f, vars_xy()));
        DegreeResult d = local_degree_detailed(grad, false);
        CHECK(d.mu == e.mu);
        CHECK(d.degree == e.degree);
        CHECK(winding_degree(grad) == e.degree);
    }
}

TEST_CASE("gram form exposes the jacobian class and functional") {
    MapGerm h = germ(vars_xy(), {"y^2 - x^3", "2*y"});
    LocalAlgebra la = quotient_basis(local_zero_dim_basis(h.components()));
    GramForm g = build_gram_form(h, la);
    CHECK(g.basis.size() == 3);
    CHECK(g.functional_monomial == Monomial({2, 0}));
    CHECK(g.functional_sign == -1); // Jacobian class is -6 x^2
    CHECK(g.jacobian_class == poly("-6*x^2", vars_xy()));
    SignatureResult s = exact_signature(g.matrix);
    CHECK(s.signature() == -1);
}

} // TEST_SUITE
