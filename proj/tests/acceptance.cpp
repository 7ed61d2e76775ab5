// Acceptance suite: runs the seven exit criteria end to end and prints one
// pass/fail line per criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "elkchi/jobs.hpp"
#include "elkchi/milnor.hpp"
#include "elkchi/oracle.hpp"
#include "elkchi/parse.hpp"
#include "property_suites.hpp"

using namespace elkchi;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_budget_s;
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        std::ostringstream os;
        os << what << " (expected " << want << ", got " << got << ")";
        expect(got == want, os.str());
    }
};

VarsPtr v2() { return make_vars({"x", "y"}); }
VarsPtr v3() { return make_vars({"x", "y", "z"}); }

Criterion criterion_1() {
    Criterion c{1, "homogeneous cubic golden values", 5.0};
    VarsPtr vars = v3();
    Polynomial f = parse_polynomial("z*x^2 + z*y^2 + y^3", vars);
    WeightedType w{{1, 1, 1}, 3};
    SzafraniecData data = szafraniec_setup(f, w);
    c.expect_eq<long>(data.p, 2, "p");
    c.expect(data.h1.component(0) == parse_polynomial("2*x*z - x^3", vars) &&
                 data.h1.component(1) == parse_polynomial("3*y^2 + 2*y*z - y^3", vars) &&
                 data.h1.component(2) == parse_polynomial("x^2 + y^2 - z^3", vars),
             "displayed first gradient construction");
    c.expect_eq<long>(local_degree(data.h1), -1, "deg H1");
    LinkEulerResult r = link_euler_odd(f, w);
    c.expect_eq<long>(r.chi, 2, "chi of the link via the odd-degree formula");
    return c;
}

Criterion criterion_2() {
    Criterion c{2, "six-variable real-part golden values", 120.0};
    VarsPtr vars = make_vars({"x1", "x2", "y1", "y2", "z1", "z2"});
    Polynomial f = parse_polynomial("z1*(x1^2 - x2^2) - 2*z2*x1*x2 + y1^2 - y2^2", vars);
    WeightedType w{{2, 2, 3, 3, 2, 2}, 6};
    SzafraniecData data = szafraniec_setup(f, w);
    c.expect_eq<long>(data.p, 6, "p");
    c.expect(data.a == std::vector<long>{3, 3, 2, 2, 3, 3}, "exponent tuple a");
    LinkEulerResult r = link_euler(f, w);
    c.expect_eq<long>(r.deg1, -1, "deg H1");
    c.expect_eq<long>(r.deg2, -1, "deg H2");
    c.expect_eq<long>(r.chi, 4, "chi of the link");
    // The blockwise and direct routes must agree on the full 6-variable germ.
    DegreeResult direct = local_degree_detailed(data.h1, false);
    c.expect_eq<long>(direct.degree, -1, "deg H1 without block splitting");
    c.expect_eq<std::size_t>(direct.mu, 121, "mu of the first construction");
    return c;
}

Criterion criterion_3() {
    Criterion c{3, "five-variable pair golden values", 120.0};
    VarsPtr vars = make_vars({"x", "y", "z", "u", "v"});
    Polynomial q = parse_polynomial("x*y + 2*u*v", vars);
    WeightedType w{{1, 1, 1, 1, 1}, 2};
    LinkEulerResult r = link_euler(q, w);
    c.expect_eq<long>(r.deg1, 1, "deg H1 of the second-component construction");
    c.expect_eq<long>(r.deg2, 1, "deg H2 of the second-component construction");
    c.expect_eq<long>(r.chi, -2, "chi of the link");
    long chi_mf = 0;
    bool derived = true;
    try {
        chi_mf = milnor_chi_from_link(r.chi, 5);
    } catch (const EngineError&) {
        derived = false;
    }
    c.expect(derived, "fibre chi derivable from the link");
    if (derived) {
        c.expect_eq<long>(chi_mf, 2, "chi of the Milnor fibre");
        c.expect_eq<long>(boundary_chi(chi_mf, 3), 4, "chi of the fibre boundary");
    }
    return c;
}

Criterion criterion_4() {
    Criterion c{4, "oracle equivalence on the germ corpus", 60.0};
    tests::SuiteResult r = tests::oracle_equivalence_suite();
    c.expect(tests::two_variable_corpus().size() >= 20, "two-variable corpus size");
    c.expect(tests::three_variable_corpus().size() >= 5, "three-variable corpus size");
    for (const std::string& d : r.details) c.expect(false, d);
    c.expect(r.ok(), "oracle equivalence");
    std::ostringstream os;
    os << r.cases << " germs compared";
    c.notes.push_back(os.str());
    return c;
}

Criterion criterion_5() {
    Criterion c{5, "property suites", 300.0};
    for (const tests::SuiteResult& r : tests::all_property_suites()) {
        for (const std::string& d : r.details) c.expect(false, r.name + ": " + d);
        c.expect(r.ok(), r.name);
        std::ostringstream os;
        os << r.name << ": " << r.cases << " cases";
        c.notes.push_back(os.str());
    }
    return c;
}

Criterion criterion_6() {
    Criterion c{6, "contrapositive verification of the cubic pair", 30.0};
    Json job = {
        {"task", "verify"},
        {"variables", {"x", "y", "z"}},
        {"polynomials", {{"f1", "z*x^2 + z*y^2 + y^3"}, {"f2", "x"}}},
        {"milnor_ab_asserted", true},
    };
    JobOutcome out = run_job(job);
    c.expect_eq<int>(out.exit_code, 0, "verification job exit code");
    c.expect(out.report.contains("outputs") &&
                 out.report["outputs"]["milnor_ab_consistent"] == false,
             "hypothesis flagged as inconsistent");
    bool row_found = false;
    if (out.report.contains("consistency"))
        for (const auto& row : out.report["consistency"])
            if (row["verdict"] == "fail" && row.contains("note") &&
                std::string(row["note"]).find("cannot both hold") != std::string::npos)
                row_found = true;
    c.expect(row_found, "hypothesis-failure row present");
    if (out.report.contains("outputs")) {
        c.expect(out.report["outputs"]["links"][0]["chi_link"] == 2, "chi of the first link");
        c.expect(out.report["outputs"]["links"][1]["chi_link"] == 0, "chi of the second link");
    }
    return c;
}

Criterion criterion_7() {
    Criterion c{7, "cross-formula agreement", 30.0};
    FukuiResult f = fukui_D(parse_polynomial("y^2 - x^3", v2()));
    c.expect_eq<long>(f.d_value, 1, "half-fibre difference of the cusp");
    Mod2Result m = dutertre_mod2(
        {parse_polynomial("y^2 - x^3", v2()), parse_polynomial("x", v2())});
    c.expect_eq<int>(m.bit, 1, "mod-2 dimension of the cusp ideal");
    c.expect(((f.d_value % 2) + 2) % 2 == m.bit, "mod-2 agreement of the two formulas");

    VarietyLinkResult axis = variety_link_euler(
        {parse_polynomial("x", v3()), parse_polynomial("y", v3())});
    c.expect_eq<long>(axis.chi, 2, "link chi of a line in three variables");
    VarietyLinkResult origin = variety_link_euler(
        {parse_polynomial("x", v2()), parse_polynomial("y", v2())});
    c.expect_eq<long>(origin.chi, 0, "link chi of the origin in the plane");
    return c;
}

bool run(Criterion (*make)(), std::ostream& os) {
    auto start = Clock::now();
    Criterion c = make();
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > c.time_budget_s) {
        c.pass = false;
        std::ostringstream over;
        over << "FAILED: exceeded the time budget (" << elapsed << " s > " << c.time_budget_s
             << " s)";
        c.notes.push_back(over.str());
    }
    os << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << " — " << c.title
       << " (" << elapsed << " s)\n";
    for (const std::string& n : c.notes) os << "    " << n << "\n";
    return c.pass;
}

} // namespace

int main(int argc, char** argv) {
    Criterion (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                                 criterion_5, criterion_6, criterion_7};
    int failures = 0;
    if (argc > 1) {
        int which = std::atoi(argv[1]);
        if (which < 1 || which > 7) {
            std::cerr << "usage: acceptance [1-7]\n";
            return 64;
        }
        if (!run(criteria[which - 1], std::cout)) ++failures;
        return failures;
    }
    for (auto* make : criteria)
        if (!run(make, std::cout)) ++failures;
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criterion(s) failed\n");
    return failures;
}
