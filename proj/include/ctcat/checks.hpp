// checks.hpp -- self-contained verification checks driving the propositions

#pragma once

#include <string>
#include <vector>

namespace ctcat {

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;   ///< number of objects examined
    std::string detail;    ///< first failure, empty on success
};

// counting identities
CheckResult check_region_counts_small();
CheckResult check_region_count_identity(int n_max);
CheckResult check_catalan_sum(int n_max);
CheckResult check_division_exactness(int n_max);
CheckResult check_recurrence_range(int n_max);

// enumeration and independent oracles
CheckResult check_symmetric_enumeration(int n_max);
CheckResult check_letter_order_filter_oracle(int n);
CheckResult check_forest_filter_oracle(int n);
CheckResult check_special_leaf_statistics(int n_brute);

// bijections
CheckResult check_word_forest_roundtrips(int n_symmetric, int n_annotated);
CheckResult check_position_statistic_bijection(int n_max);
CheckResult check_geometry_roundtrip(int n_max);
CheckResult check_perturbation_stability(int n, int trials);

// shuffles
CheckResult check_shuffle_compatibility(int n_max);
CheckResult check_shuffle_cardinality_words(int n_max);
CheckResult check_shuffle_cardinality_forests(int n_max);

// lattice paths
CheckResult check_cycle_lemma(int max_length);

/// Runs one of the named suites: counts, bijection, shuffles, oracle, all.
/// n_max <= 0 selects the documented per-check defaults; larger requests
/// are clamped to desk-scale bounds.
std::vector<CheckResult> run_suite(const std::string& suite, int n_max);

}  // namespace ctcat
