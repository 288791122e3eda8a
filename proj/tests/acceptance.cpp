// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact; the whole run is meant to stay well under two
// minutes on a laptop.

#include <cstdio>
#include <vector>

#include "ctcat/checks.hpp"

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<ctcat::CheckResult> results;
};

}  // namespace

int main() {
    using namespace ctcat;

    std::vector<Criterion> criteria;
    criteria.push_back({1, "region counts match the closed formula",
                        {check_region_counts_small(), check_region_count_identity(200)}});
    criteria.push_back({2, "symmetric sketch enumeration matches the formula",
                        {check_symmetric_enumeration(3)}});
    criteria.push_back({3, "letter-order filter reproduces the enumeration at n=2",
                        {check_letter_order_filter_oracle(2)}});
    criteria.push_back({4, "forest filter reproduces the phi image at n=3",
                        {check_forest_filter_oracle(3)}});
    criteria.push_back({5, "bijection round trips and position statistics",
                        {check_word_forest_roundtrips(3, 4), check_position_statistic_bijection(4)}});
    criteria.push_back({6, "shuffle compatibility and cardinalities",
                        {check_shuffle_compatibility(3), check_shuffle_cardinality_words(3),
                         check_shuffle_cardinality_forests(3)}});
    criteria.push_back({7, "geometry round trip and perturbation stability",
                        {check_geometry_roundtrip(3), check_perturbation_stability(2, 20)}});
    criteria.push_back({8, "special-leaf statistics agree across all three routes",
                        {check_special_leaf_statistics(8), check_catalan_sum(200),
                         check_division_exactness(200)}});
    criteria.push_back({9, "cycle lemma on all short paths", {check_cycle_lemma(14)}});
    criteria.push_back({10, "special-leaf recurrence with the zero boundary",
                        {check_recurrence_range(200)}});

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        bool pass = true;
        long long cases = 0;
        const char* detail = nullptr;
        for (const CheckResult& r : criterion.results) {
            cases += r.cases;
            if (!r.pass && pass) {
                pass = false;
                detail = r.detail.c_str();
            }
        }
        std::printf("%s criterion %2d: %s (cases=%lld)\n", pass ? "PASS" : "FAIL",
                    criterion.number, criterion.title, cases);
        if (!pass) {
            std::printf("     %s\n", detail);
            ++failures;
        }
    }

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
