#include "test_helpers.hpp"

#include "elkchi/oracle.hpp"

using namespace elkchi;
using namespace elkchi::tests;

TEST_SUITE("oracle") {

TEST_CASE("winding numbers of basic germs") {
    CHECK(winding_degree(germ(vars_xy(), {"x", "y"})) == 1);
    CHECK(winding_degree(germ(vars_xy(), {"x^2 - y^2", "2*x*y"})) == 2);
    CHECK(winding_degree(germ(vars_xy(), {"2*x", "-2*y"})) == -1);
}

TEST_CASE("winding handles maps into a half line") {
    CHECK(winding_degree(germ(vars_xy(), {"0", "x^2 + y^2"})) == 0);
}

TEST_CASE("PL sphere degrees of basic germs") {
    CHECK(pl_sphere_degree(germ(vars_xyz(), {"x", "y", "z"})) == 1);
    CHECK(pl_sphere_degree(germ(vars_xyz(), {"x", "y", "-z"})) == -1);
}

TEST_CASE("PL degree of the cubic gradient germ at small radii") {
    MapGerm h1 = germ(vars_xyz(), {"2*x*z - x^3", "3*y^2 + 2*y*z - y^3", "x^2 + y^2 - z^3"});
    OracleConfig cfg;
    cfg.radius = Rational(1, 4);
    CHECK(pl_sphere_degree(h1, cfg) == -1);
    cfg.radius = Rational(1, 8);
    CHECK(pl_sphere_degree(h1, cfg) == -1);
}

TEST_CASE("a sphere of radius 1/2 encloses a second zero of the cubic germ") {
    // The germ vanishes again near (0, -0.237, 0.384), inside radius 1/2, so
    // the sphere map degree there is the sum over both zeros.
    MapGerm h1 = germ(vars_xyz(), {"2*x*z - x^3", "3*y^2 + 2*y*z - y^3", "x^2 + y^2 - z^3"});
    OracleConfig cfg;
    cfg.radius = Rational(1, 2);
    CHECK(pl_sphere_degree(h1, cfg) == 0);
}

TEST_CASE("winding is radius independent on globally isolated germs") {
    for (auto germ_spec : {std::pair{"x^2 - y^2", "2*x*y"}, {"2*x", "-2*y"}, {"x", "y"}}) {
        MapGerm h = germ(vars_xy(), {germ_spec.first, germ_spec.second});
        long at_half = 0, at_quarter = 0, at_eighth = 0;
        OracleConfig cfg;
        cfg.radius = Rational(1, 2);
        at_half = winding_degree(h, cfg);
        cfg.radius = Rational(1, 4);
        at_quarter = winding_degree(h, cfg);
        cfg.radius = Rational(1, 8);
        at_eighth = winding_degree(h, cfg);
        CHECK(at_half == at_quarter);
        CHECK(at_quarter == at_eighth);
    }
}

TEST_CASE("oracle dimension dispatch") {
    CHECK(oracle_degree(germ(vars_xy(), {"x", "y"})) == 1);
    CHECK(oracle_degree(germ(vars_xyz(), {"x", "y", "z"})) == 1);
    VarsPtr v4 = make_vars({"a", "b", "c", "d"});
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < 4; ++i) comps.push_back(Polynomial::variable(v4, i));
    CHECK_ENGINE_ERROR(oracle_degree(MapGerm(v4, comps)), ErrorCode::DimensionMismatch);
}

} // TEST_SUITE
