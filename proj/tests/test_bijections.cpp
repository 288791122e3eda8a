#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>
#include <string>

#include "ctcat/bijections.hpp"
#include "ctcat/checks.hpp"
#include "doctest.h"

using namespace ctcat;

namespace {

const char* kOmega = "-2^0 1^0 -2^1 3^0 -3^0 1^1 -1^0 3^1 -3^1 2^0 -1^1 2^1";
const char* kOmega1 = "-2^0 1^0 -2^1 3^0 1^1 3^1";

Word W(const char* text) {
    return parse_word(text);
}

Forest F(const char* text) {
    return parse_forest(text);
}

std::string collision_message(const RegionPoint& x) {
    try {
        sigma(x);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("point parsing and serialization") {
    CHECK(to_string(parse_point("1/6")) == "1/6");
    CHECK(to_string(parse_point("-1/2, 3/4")) == "-1/2,3/4");
    CHECK(to_string(parse_point("2")) == "2");
    CHECK_THROWS_AS(parse_point(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("x"), std::invalid_argument);
}

TEST_CASE("sigma on one-dimensional points") {
    CHECK(sigma(parse_point("1/6")) == W("-1^0 1^0 -1^1 1^1"));
    CHECK(sigma(parse_point("3/4")) == W("-1^0 -1^1 1^0 1^1"));

    const std::string message = collision_message(parse_point("1/2"));
    CHECK(message.find("2x1 = 1") != std::string::npos);
    CHECK_THROWS_AS(sigma(parse_point("1/2")), std::invalid_argument);
    CHECK_THROWS_AS(check_region_point(parse_point("1/2")), std::invalid_argument);
}

TEST_CASE("sigma names the violated hyperplane") {
    CHECK(collision_message(parse_point("0")).find("2x1 = 0") != std::string::npos);
    CHECK(collision_message(parse_point("1/4,1/4")).find("x1 - x2 = 0") != std::string::npos);
    CHECK(collision_message(parse_point("1/4,3/4")).find("x1 + x2 = 1") != std::string::npos);
    CHECK(collision_message(parse_point("1/8,7/8")).find("x1 + x2 = 1") != std::string::npos);
}

TEST_CASE("representative points") {
    // walk values v(-1) = 1/3, v(1) = 1/3 + 1/9; averaging gives 1/18
    const RegionPoint a = representative_point(W("-1^0 1^0 -1^1 1^1"), 1);
    CHECK(to_string(a) == "1/18");
    CHECK(sigma(a) == W("-1^0 1^0 -1^1 1^1"));

    // v(1) = 1/3, v(-1) = 4/3 + 1/9; averaging gives -5/9
    const RegionPoint b = representative_point(W("1^0 1^1 -1^0 -1^1"), 1);
    CHECK(to_string(b) == "-5/9");
    CHECK(sigma(b) == W("1^0 1^1 -1^0 -1^1"));

    CHECK_THROWS_AS(representative_point(W("1^0 1^1"), 1), std::invalid_argument);
}

TEST_CASE("sigma and representative_point are inverse on all sketches up to n = 2") {
    for (int n = 1; n <= 2; ++n)
        for (const Word& w : enumerate_symmetric_sketches(n)) {
            const RegionPoint x = representative_point(w, n);
            check_region_point(x);
            CHECK(sigma(x) == w);
        }
}

TEST_CASE("phi examples") {
    CHECK(phi(W(kOmega)) == F("-2(3,-3(2)),1(-1)"));
    CHECK(phi(W(kOmega1)) == F("-2(3),1"));
    CHECK(special_leaves(phi(W(kOmega1))) == std::vector<int>{1, 3});
    CHECK(phi(W("1^0 1^1")) == F("1"));
    CHECK_THROWS_AS(phi(W("1^0 2^0 1^1")), std::invalid_argument);
    CHECK_THROWS_AS(phi(W("-1^0 1^0 1^1 -1^1")), std::invalid_argument);
}

TEST_CASE("psi examples") {
    CHECK(psi(F("-2(3,-3(2)),1(-1)"), true) == W(kOmega));
    CHECK(psi(F("-2(3),1"), false) == W(kOmega1));
    CHECK(psi(F("1(2,3(4))"), false) == W("1^0 1^1 2^0 3^0 2^1 3^1 4^0 4^1"));
    CHECK(psi(F("1"), false) == W("1^0 1^1"));
    CHECK(psi(F("1,-1"), true) == W("1^0 -1^0 1^1 -1^1"));

    CHECK_THROWS_AS(psi(F("1,2"), true), std::invalid_argument);
    CHECK_THROWS_AS(psi(F("1,-1"), false), std::invalid_argument);
}

TEST_CASE("sketch classification") {
    CHECK(classify_sketch(W(kOmega)) == SketchKind::symmetric);
    CHECK(classify_sketch(W(kOmega1)) == SketchKind::annotated);
    CHECK(classify_sketch(W("1^0 2^0 1^1 2^1")) == SketchKind::annotated);
    CHECK(classify_sketch(W("1^0 1^1 -1^0 -1^1")) == SketchKind::symmetric);
    CHECK_THROWS_AS(classify_sketch(W("1^0")), std::invalid_argument);
}

TEST_CASE("round trips on words and forests up to n = 3") {
    for (int n = 1; n <= 3; ++n) {
        enumerate_annotated_sketches(n,
                                     [&](const Word& w1) { CHECK(psi(phi(w1), false) == w1); });
        for (const Forest& f : all_forests(n, true)) CHECK(phi(psi(f, false)) == f);
    }
    for (int n = 1; n <= 2; ++n)
        for (const Word& w : enumerate_symmetric_sketches(n)) {
            const Forest g = phi(w);
            CHECK(psi(g, true) == w);
            CHECK(validate_symmetric_forest(g, n).is_ok());
        }
}

TEST_CASE("phi sends position s to 2n - s special leaves") {
    for (int n = 1; n <= 3; ++n)
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            const int s = rightmost_zero_position(w1);
            CHECK(static_cast<int>(special_leaves(phi(w1)).size()) == 2 * n - s);
        });
}

TEST_CASE("phi respects shuffles and symmetrics") {
    for (int n = 1; n <= 2; ++n)
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            const Forest f = phi(w1);
            CHECK(phi(symmetric_word(w1)) == symmetric_forest(f));
            std::set<std::string> via_words;
            for (const Word& u : sketch_shuffles(w1, n)) via_words.insert(to_string(phi(u)));
            std::set<std::string> via_forests;
            for (const Forest& g : forest_shuffles(f)) via_forests.insert(to_string(g));
            CHECK(via_words == via_forests);
        });
}

TEST_CASE("region to forest") {
    CHECK(region_to_forest(parse_point("1/6")) == F("-1,1"));
    CHECK(region_to_forest(parse_point("3/4")) == F("-1(1)"));
    // points of one region map to one forest
    CHECK(region_to_forest(parse_point("1/5")) == region_to_forest(parse_point("1/6")));
}

TEST_CASE("sigma is stable under small perturbations") {
    const auto result = check_perturbation_stability(1, 10);
    CHECK(result.pass);
    CHECK(result.cases == 4 * 10);
}
