#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ctcat/counting.hpp"
#include "doctest.h"

using namespace ctcat;

TEST_CASE("binomial, factorial, catalan") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(400, 200) % 401 != 0);  // sanity: big values are exact, not rounded
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(catalan(0) == 1);
    CHECK(catalan(6) == 132);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("special-leaf counts from the closed formula") {
    CHECK(c_ns(1, 1) == 1);
    CHECK(c_ns(3, 1) == 2);
    CHECK(c_ns(3, 2) == 2);
    CHECK(c_ns(3, 3) == 1);

    const long long expected4[] = {5, 5, 3, 1};
    for (int s = 1; s <= 4; ++s) CHECK(c_ns(4, s) == expected4[s - 1]);

    CHECK_THROWS_AS(c_ns(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(c_ns(3, 4), std::invalid_argument);
}

TEST_CASE("shuffle counts are powers of two") {
    CHECK(d_ns(0) == 1);
    CHECK(d_ns(2) == 4);
    CHECK(d_ns(5) == 32);
}

TEST_CASE("region counts") {
    CHECK(region_count(1) == 4);
    CHECK(region_count(2) == 48);
    CHECK(region_count(3) == 960);
    CHECK(region_count(4) == 26880);

    CHECK(region_count_via_sum(2) == 48);   // 8 * (1*2 + 1*4)
    CHECK(region_count_via_sum(3) == 960);  // 48 * (2*2 + 2*4 + 1*8)

    for (int n = 1; n <= 100; ++n) CHECK(region_count(n) == region_count_via_sum(n));
    CHECK(region_count(50) == region_count_via_sum(50));
}

TEST_CASE("column sums give the Catalan numbers") {
    for (int n = 1; n <= 50; ++n) {
        BigInt sum = 0;
        for (int s = 1; s <= n; ++s) sum += c_ns(n, s);
        CHECK(sum == catalan(n));
    }
}

TEST_CASE("division in the closed formula is exact") {
    for (int n = 1; n <= 100; ++n)
        for (int s = 1; s <= n; ++s)
            CHECK(BigInt(s) * binomial(2 * n - s, n) % (2 * n - s) == 0);
}

TEST_CASE("recurrence with the zero boundary") {
    CHECK(check_recurrence(2));  // c(2,1) = 1 = 0 + c(2,2)
    CHECK(check_recurrence(3));  // c(3,1) = 2 = 0 + c(3,2)
    CHECK(c_ns(4, 2) == c_ns(3, 1) + c_ns(4, 3));
    for (int n = 2; n <= 60; ++n) CHECK(check_recurrence(n));
    CHECK_THROWS_AS(check_recurrence(1), std::invalid_argument);
}

TEST_CASE("count table rendering") {
    CHECK(special_leaf_table(3).str() == "s=1 count=2\ns=2 count=2\ns=3 count=1\n");
}

TEST_CASE("dyck path predicate") {
    CHECK(is_dyck_path("UD"));
    CHECK(is_dyck_path("UUDUDD"));
    CHECK(!is_dyck_path("UDD"));
    CHECK(!is_dyck_path("DU"));
    CHECK(!is_dyck_path("UU"));
    CHECK_THROWS_AS(is_dyck_path("UX"), std::invalid_argument);
}

TEST_CASE("dominating rotations") {
    CHECK(dominating_rotations("UUD") == 1);
    CHECK(dominating_rotations("UU") == 2);
    CHECK(dominating_rotations("UUDUD") == 1);
    CHECK_THROWS_AS(dominating_rotations("UD"), std::invalid_argument);
    CHECK_THROWS_AS(dominating_rotations("UDD"), std::invalid_argument);

    // exhaustive cycle-lemma check on short paths
    for (int length = 1; length <= 10; ++length)
        for (unsigned mask = 0; mask < (1u << length); ++mask) {
            LatticePath path(length, 'D');
            int ups = 0;
            for (int t = 0; t < length; ++t)
                if (mask >> t & 1u) {
                    path[t] = 'U';
                    ++ups;
                }
            const int excess = 2 * ups - length;
            if (excess > 0) CHECK(dominating_rotations(path) == excess);
        }
}

TEST_CASE("paths with a fixed ending tail") {
    CHECK(count_paths_with_tail(1, 1) == 1);
    CHECK(count_paths_with_tail(3, 3) == 1);  // only UUUDDD
    CHECK(count_paths_with_tail(3, 1) == 2);  // UUDDUD and UDUDUD

    for (int n = 1; n <= 10; ++n)
        for (int s = 1; s <= n; ++s) CHECK(count_paths_with_tail(n, s) == c_ns(n, s));
}
