#include <doctest.h>

#include "property_suites.hpp"

using namespace elkchi::tests;

TEST_SUITE("properties") {

TEST_CASE("randomized and corpus property suites") {
    for (const SuiteResult& r : all_property_suites()) {
        CAPTURE(r.name);
        CHECK(r.cases > 0);
        for (const std::string& d : r.details) {
            CAPTURE(d);
            CHECK(false);
        }
        CHECK(r.failures == 0);
    }
}

} // TEST_SUITE
