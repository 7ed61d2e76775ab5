#pragma once

#include <string>
#include <vector>

#include "elkchi/map_germ.hpp"

namespace elkchi::tests {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> details; // one line per failure, capped

    bool ok() const { return failures == 0; }
};

// Fixed corpora shared by the oracle-equivalence and ELK property suites.
std::vector<MapGerm> two_variable_corpus();   // >= 20 germs
std::vector<MapGerm> three_variable_corpus(); // >= 5 germs, includes the cubic gradient germ

SuiteResult ring_laws_suite(unsigned seed, std::size_t cases);
SuiteResult euler_relation_suite(unsigned seed, std::size_t cases);
SuiteResult phi_invariance_suite();
SuiteResult orientation_law_suite(unsigned seed, std::size_t cases);
SuiteResult multiplicativity_suite(unsigned seed, std::size_t cases);
SuiteResult univariate_law_suite(int max_power);
SuiteResult commuting_matrices_suite();
SuiteResult link_formula_agreement_suite(unsigned seed, std::size_t cases);
SuiteResult link_table_identity_suite(unsigned seed, std::size_t cases);
SuiteResult sign_independence_suite(unsigned seed, std::size_t cases);
SuiteResult ideal_membership_suite(unsigned seed, std::size_t cases);
SuiteResult strategy_independence_suite();
SuiteResult engine_cross_check_suite();
SuiteResult signature_root_count_suite(unsigned seed, std::size_t cases);
SuiteResult oracle_equivalence_suite();

std::vector<SuiteResult> all_property_suites();

} // namespace elkchi::tests
