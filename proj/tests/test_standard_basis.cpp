#include "test_helpers.hpp"

#include "elkchi/local_algebra.hpp"

using namespace elkchi;
using namespace elkchi::tests;

namespace {

bool contains(const std::vector<Polynomial>& gens, const Polynomial& p) {
    for (const Polynomial& g : gens)
        if (g == p) return true;
    return false;
}

} // namespace

TEST_SUITE("standard-basis") {

TEST_CASE("global basis of a simple complete intersection") {
    StandardBasis sb = compute_standard_basis(
        {poly("x^2 - y", vars_xy()), poly("y^2", vars_xy())}, global_order());
    CHECK(sb.gens.size() == 2);
    CHECK(contains(sb.gens, poly("x^2 - y", vars_xy())));
    CHECK(contains(sb.gens, poly("y^2", vars_xy())));
    bool has_x2 = false, has_y2 = false;
    for (const Monomial& m : sb.leading) {
        if (m == Monomial({2, 0})) has_x2 = true;
        if (m == Monomial({0, 2})) has_y2 = true;
    }
    CHECK(has_x2);
    CHECK(has_y2);
}

TEST_CASE("a single variable generates itself") {
    for (TermOrder order : {global_order(), local_order()}) {
        StandardBasis sb = compute_standard_basis({poly("x", vars_xy())}, order);
        CHECK(sb.gens.size() == 1);
        CHECK(sb.gens[0] == poly("x", vars_xy()));
    }
}

TEST_CASE("local unit factors are stripped by tail reduction") {
    VarsPtr v = make_vars({"y"});
    StandardBasis sb = compute_standard_basis({parse_polynomial("2*y - y^3", v)}, local_order());
    REQUIRE(sb.gens.size() == 1);
    CHECK(sb.gens[0] == parse_polynomial("y", v));
    CHECK(sb.leading[0] == Monomial({1}));
}

TEST_CASE("quotient basis of a monomial complete intersection") {
    LocalAlgebra la = quotient_basis(compute_standard_basis(
        {poly("x^2", vars_xy()), poly("y^2", vars_xy())}, local_order()));
    CHECK(la.mu() == 4);
    CHECK(la.index_of(Monomial({0, 0})) != LocalAlgebra::npos);
    CHECK(la.index_of(Monomial({1, 0})) != LocalAlgebra::npos);
    CHECK(la.index_of(Monomial({0, 1})) != LocalAlgebra::npos);
    CHECK(la.index_of(Monomial({1, 1})) != LocalAlgebra::npos);
}

TEST_CASE("missing pure powers are detected") {
    StandardBasis sb = compute_standard_basis({poly("x", vars_xy())}, local_order());
    CHECK_ENGINE_ERROR(quotient_basis(sb), ErrorCode::NotFinite);
    CHECK_ENGINE_ERROR(local_zero_dim_basis({poly("x", vars_xy())}, PairStrategy::NormalFifo, 24),
                       ErrorCode::NotFinite);
}

TEST_CASE("local quotient of the cusp pair") {
    StandardBasis sb = compute_standard_basis(
        {poly("y^2 - x^3", vars_xy()), poly("2*y", vars_xy())}, local_order());
    LocalAlgebra la = quotient_basis(sb);
    CHECK(la.mu() == 3);
    CHECK(la.basis()[0] == Monomial({0, 0}));
    CHECK(la.index_of(Monomial({1, 0})) != LocalAlgebra::npos);
    CHECK(la.index_of(Monomial({2, 0})) != LocalAlgebra::npos);
}

TEST_CASE("separated variables multiply quotient dimensions") {
    LocalAlgebra la = quotient_basis(local_zero_dim_basis(
        {poly("x^2", vars_xy()), poly("y^3", vars_xy())}));
    CHECK(la.mu() == 6);
}

TEST_CASE("quotients under the global order") {
    LocalAlgebra la = quotient_basis(compute_standard_basis(
        {poly("x^2 - y", vars_xy()), poly("y^2", vars_xy())}, global_order()));
    CHECK(la.mu() == 4);
    // x * x reduces to y in this quotient.
    auto v = la.normal_form_vector(poly("x^2", vars_xy()));
    CHECK(la.to_polynomial(v) == poly("y", vars_xy()));
}

TEST_CASE("normal forms against global and local bases") {
    StandardBasis global = compute_standard_basis(
        {poly("x^2 - y", vars_xy()), poly("y^2", vars_xy())}, global_order());
    CHECK(normal_form(poly("x^2", vars_xy()), global) == poly("y", vars_xy()));
    for (const Polynomial& g : global.gens) CHECK(normal_form(g, global).is_zero());

    StandardBasis local = compute_standard_basis(
        {poly("y^2 - x^3", vars_xy()), poly("2*y", vars_xy())}, local_order());
    CHECK(normal_form(poly("x^3", vars_xy()), local).is_zero());
    CHECK(normal_form(poly("1 + x + x^3 + y", vars_xy()), local) ==
          poly("1 + x", vars_xy()));
}

TEST_CASE("basis dump prints one generator per line") {
    StandardBasis sb = compute_standard_basis(
        {poly("y^2 - x^3", vars_xy()), poly("2*y", vars_xy())}, local_order());
    CHECK(sb.dump() == "y\nx^3\n");
}

TEST_CASE("zero generators are rejected") {
    CHECK_ENGINE_ERROR(compute_standard_basis({poly("0", vars_xy())}, local_order()),
                       ErrorCode::BadInput);
    CHECK_ENGINE_ERROR(compute_standard_basis({}, local_order()), ErrorCode::BadInput);
}

TEST_CASE("generators come out monic and leading-term minimal") {
    for (auto [gens, order] :
         {std::pair{std::vector<Polynomial>{poly("3*y^2 - x^3", vars_xy()), poly("2*y", vars_xy())},
                    local_order()},
          std::pair{std::vector<Polynomial>{poly("2*x^2 - 2*y", vars_xy()), poly("5*y^2", vars_xy())},
                    global_order()}}) {
        StandardBasis sb = compute_standard_basis(gens, order);
        for (const Polynomial& g : sb.gens)
            CHECK(leading_term(g, order).coeff == Rational(1));
        for (std::size_t i = 0; i < sb.leading.size(); ++i)
            for (std::size_t j = 0; j < sb.leading.size(); ++j)
                if (i != j) CHECK_FALSE(sb.leading[i].divides(sb.leading[j]));
    }
}

TEST_CASE("standard monomials form an order ideal") {
    for (auto gens : {std::vector<Polynomial>{poly("y^2 - x^3", vars_xy()), poly("2*y", vars_xy())},
                      std::vector<Polynomial>{poly("x^2 - y^2", vars_xy()), poly("2*x*y", vars_xy())}}) {
        LocalAlgebra la = quotient_basis(local_zero_dim_basis(gens));
        CHECK(la.index_of(Monomial::one(2)) != LocalAlgebra::npos);
        for (const Monomial& m : la.basis())
            for (std::size_t i = 0; i < 2; ++i) {
                if (m.exponent(i) == 0) continue;
                std::vector<int> exps = m.exponents();
                exps[i] -= 1;
                CHECK(la.index_of(Monomial(std::move(exps))) != LocalAlgebra::npos);
            }
    }
}

TEST_CASE("truncated engine records a drop bound") {
    StandardBasis sb = local_zero_dim_basis(
        {poly("y^2 - x^3", vars_xy()), poly("2*y", vars_xy())});
    REQUIRE(sb.drop_degree.has_value());
    // m^drop lies in the ideal: every monomial of that degree reduces to 0.
    Polynomial probe = Polynomial::monomial(vars_xy(), Monomial({*sb.drop_degree, 0}),
                                            Rational(1));
    CHECK(normal_form(probe, sb).is_zero());
}

} // TEST_SUITE
