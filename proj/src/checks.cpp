#include "ctcat/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ctcat/bijections.hpp"
#include "ctcat/counting.hpp"
#include "ctcat/forests.hpp"
#include "ctcat/words.hpp"

namespace ctcat {

namespace {

// Accumulates the first failure; later failures only bump the case count.
struct Recorder {
    CheckResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++result.cases;
        if (!ok && result.pass) {
            result.pass = false;
            result.detail = what;
        }
    }
};

std::string range_tag(const std::string& base, int bound) {
    return base + "[n<=" + std::to_string(bound) + "]";
}

std::set<std::string> forest_set(const std::vector<Forest>& forests) {
    std::set<std::string> out;
    for (const Forest& f : forests) out.insert(to_string(f));
    return out;
}

}  // namespace

CheckResult check_region_counts_small() {
    Recorder rec("region-counts-small");
    const long long expected[] = {4, 48, 960, 26880};
    for (int n = 1; n <= 4; ++n)
        rec.expect(region_count(n) == expected[n - 1],
                   "region_count(" + std::to_string(n) + ") != " + std::to_string(expected[n - 1]));
    return rec.result;
}

CheckResult check_region_count_identity(int n_max) {
    Recorder rec(range_tag("region-count-identity", n_max));
    for (int n = 1; n <= n_max; ++n)
        rec.expect(region_count(n) == region_count_via_sum(n),
                   "closed form and shuffle sum disagree at n=" + std::to_string(n));
    return rec.result;
}

CheckResult check_catalan_sum(int n_max) {
    Recorder rec(range_tag("catalan-sum", n_max));
    for (int n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (int s = 1; s <= n; ++s) sum += c_ns(n, s);
        rec.expect(sum == catalan(n), "sum of c_ns differs from catalan at n=" + std::to_string(n));
    }
    return rec.result;
}

CheckResult check_division_exactness(int n_max) {
    Recorder rec(range_tag("division-exactness", n_max));
    for (int n = 1; n <= n_max; ++n)
        for (int s = 1; s <= n; ++s)
            rec.expect(BigInt(s) * binomial(2 * n - s, n) % (2 * n - s) == 0,
                       "2n-s does not divide s*C(2n-s,n) at n=" + std::to_string(n) +
                           ", s=" + std::to_string(s));
    return rec.result;
}

CheckResult check_recurrence_range(int n_max) {
    Recorder rec(range_tag("special-leaf-recurrence", n_max));
    for (int n = 2; n <= n_max; ++n)
        rec.expect(check_recurrence(n), "recurrence fails at n=" + std::to_string(n));
    return rec.result;
}

CheckResult check_symmetric_enumeration(int n_max) {
    Recorder rec(range_tag("symmetric-enumeration", n_max));
    for (int n = 1; n <= n_max; ++n) {
        const auto words = enumerate_symmetric_sketches(n);
        rec.expect(BigInt(words.size()) == region_count(n),
                   "enumeration size differs from region count at n=" + std::to_string(n));
        rec.expect(std::is_sorted(words.begin(), words.end()), "enumeration is not sorted");
        for (const Word& w : words)
            rec.expect(validate_symmetric_sketch(w, n).is_ok(),
                       "emitted word fails validation: " + to_string(w));
    }
    return rec.result;
}

CheckResult check_letter_order_filter_oracle(int n) {
    Recorder rec(range_tag("letter-order-filter-oracle", n));
    Word letters;
    for (int i = -n; i <= n; ++i)
        if (i != 0)
            for (int s : {0, 1}) letters.push_back(Letter{i, s});
    std::sort(letters.begin(), letters.end());

    std::set<Word> filtered;
    long long orders = 0;
    do {
        ++orders;
        if (validate_symmetric_sketch(letters, n).is_ok()) filtered.insert(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    rec.result.cases = orders;

    const auto enumerated = enumerate_symmetric_sketches(n);
    const std::set<Word> expected(enumerated.begin(), enumerated.end());
    if (filtered != expected) {
        rec.result.pass = false;
        rec.result.detail = "filtered letter orders differ from the shuffle enumeration";
    }
    if (BigInt(static_cast<long long>(filtered.size())) != region_count(n)) {
        rec.result.pass = false;
        rec.result.detail = "filter count differs from the region count";
    }
    return rec.result;
}

CheckResult check_forest_filter_oracle(int n) {
    Recorder rec(range_tag("forest-filter-oracle", n));

    // candidate labels: signed permutations of 1..n on the first half, the
    // mirrored negation forced on the second half
    std::vector<std::vector<int>> labelings;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> labels(2 * n);
            for (int i = 0; i < n; ++i) labels[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
            for (int j = 0; j < n; ++j) labels[n + j] = -labels[n - 1 - j];
            labelings.push_back(std::move(labels));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::string> filtered;
    long long candidates = 0;
    for (const Forest& shape : all_forests(2 * n, false)) {
        for (const auto& labels : labelings) {
            ++candidates;
            const Forest candidate = relabel_by_bfs(shape, labels);
            if (validate_symmetric_forest(candidate, n).is_ok())
                filtered.insert(to_string(candidate));
        }
    }
    rec.result.cases = candidates;

    std::set<std::string> image;
    for (const Word& w : enumerate_symmetric_sketches(n)) image.insert(to_string(phi(w)));

    if (BigInt(static_cast<long long>(filtered.size())) != region_count(n)) {
        rec.result.pass = false;
        rec.result.detail = "filtered forest count differs from the region count";
    }
    if (filtered != image) {
        rec.result.pass = false;
        rec.result.detail = "filtered forests differ from the phi image of the enumeration";
    }
    return rec.result;
}

CheckResult check_special_leaf_statistics(int n_brute) {
    Recorder rec(range_tag("special-leaf-statistics", n_brute));
    for (int n = 1; n <= n_brute; ++n) {
        const auto tally = count_forests_by_special_leaves(n);
        for (int s = 1; s <= n; ++s) {
            const auto found = tally.find(s);
            const BigInt brute = found == tally.end() ? BigInt(0) : BigInt(found->second);
            const std::string at = " at n=" + std::to_string(n) + ", s=" + std::to_string(s);
            rec.expect(brute == c_ns(n, s), "forest tally differs from formula" + at);
            rec.expect(count_paths_with_tail(n, s) == c_ns(n, s),
                       "path tally differs from formula" + at);
        }
    }
    return rec.result;
}

CheckResult check_word_forest_roundtrips(int n_symmetric, int n_annotated) {
    Recorder rec("word-forest-roundtrips[n<=" + std::to_string(n_symmetric) + "," +
                 std::to_string(n_annotated) + "]");
    for (int n = 1; n <= n_annotated; ++n) {
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            rec.expect(psi(phi(w1), false) == w1, "psi(phi(w)) != w for " + to_string(w1));
        });
        for (const Forest& f : all_forests(n, true))
            rec.expect(phi(psi(f, false)) == f, "phi(psi(F)) != F for " + to_string(f));
    }
    for (int n = 1; n <= n_symmetric; ++n) {
        for (const Word& w : enumerate_symmetric_sketches(n)) {
            const Forest g = phi(w);
            rec.expect(psi(g, true) == w, "psi(phi(w)) != w for " + to_string(w));
            rec.expect(phi(psi(g, true)) == g, "phi(psi(G)) != G for " + to_string(g));
        }
    }
    return rec.result;
}

CheckResult check_position_statistic_bijection(int n_max) {
    Recorder rec(range_tag("position-statistic-bijection", n_max));
    for (int n = 1; n <= n_max; ++n) {
        // labeled forests grouped by special-leaf count
        std::map<int, std::set<std::string>> forests_by_s;
        for (const Forest& f : all_forests(n, true))
            forests_by_s[static_cast<int>(special_leaves(f).size())].insert(to_string(f));

        // phi images of annotated sketches grouped by rightmost level-0 position
        std::map<int, std::set<std::string>> images_by_position;
        std::map<int, long long> sketches_by_position;
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            const int s = rightmost_zero_position(w1);
            images_by_position[s].insert(to_string(phi(w1)));
            ++sketches_by_position[s];
        });

        for (int s = n; s <= 2 * n - 1; ++s) {
            const std::string at = " at n=" + std::to_string(n) + ", s=" + std::to_string(s);
            rec.expect(sketches_by_position[s] ==
                           static_cast<long long>(images_by_position[s].size()),
                       "phi is not injective" + at);
            rec.expect(images_by_position[s] == forests_by_s[2 * n - s],
                       "phi image differs from the forests with 2n-s special leaves" + at);
        }
    }
    return rec.result;
}

CheckResult check_geometry_roundtrip(int n_max) {
    Recorder rec(range_tag("geometry-roundtrip", n_max));
    for (int n = 1; n <= n_max; ++n)
        for (const Word& w : enumerate_symmetric_sketches(n)) {
            const RegionPoint x = representative_point(w, n);
            bool off_hyperplanes = true;
            try {
                check_region_point(x);
            } catch (const std::invalid_argument&) {
                off_hyperplanes = false;
            }
            rec.expect(off_hyperplanes, "representative point lies on a hyperplane for " + to_string(w));
            rec.expect(sigma(x) == w, "sigma(representative_point(w)) != w for " + to_string(w));
        }
    return rec.result;
}

CheckResult check_perturbation_stability(int n, int trials) {
    Recorder rec(range_tag("perturbation-stability", n));
    std::mt19937 rng(0x5eedu + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> numerators(-1000, 1000);

    for (const Word& w : enumerate_symmetric_sketches(n)) {
        const RegionPoint x = representative_point(w, n);

        // half the minimum gap between consecutive arrangement values
        std::vector<Rational> values;
        for (const Rational& xi : x.coords) {
            values.push_back(xi);
            values.push_back(Rational(xi + 1));
            values.push_back(Rational(-xi));
            values.push_back(Rational(1 - xi));
        }
        std::sort(values.begin(), values.end());
        Rational gap = values[1] - values[0];
        for (std::size_t p = 2; p < values.size(); ++p) {
            const Rational diff = values[p] - values[p - 1];
            if (diff < gap) gap = diff;
        }
        const Rational bound = gap / 2;

        for (int t = 0; t < trials; ++t) {
            RegionPoint moved = x;
            for (Rational& c : moved.coords) c += Rational(numerators(rng)) * bound / 1001;
            rec.expect(sigma(moved) == w, "perturbed point left its region for " + to_string(w));
        }
    }
    return rec.result;
}

CheckResult check_shuffle_compatibility(int n_max) {
    Recorder rec(range_tag("shuffle-compatibility", n_max));
    for (int n = 1; n <= n_max; ++n)
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            const Forest f = phi(w1);
            rec.expect(phi(symmetric_word(w1)) == symmetric_forest(f),
                       "phi of the symmetric word differs from the symmetric forest for " +
                           to_string(w1));

            std::set<std::string> via_words;
            for (const Word& u : sketch_shuffles(w1, n)) via_words.insert(to_string(phi(u)));
            rec.expect(via_words == forest_set(forest_shuffles(f)),
                       "phi of the word shuffles differs from the forest shuffles for " +
                           to_string(w1));
        });
    return rec.result;
}

CheckResult check_shuffle_cardinality_words(int n_max) {
    Recorder rec(range_tag("shuffle-cardinality-words", n_max));
    for (int n = 1; n <= n_max; ++n)
        enumerate_annotated_sketches(n, [&](const Word& w1) {
            const int s = rightmost_zero_position(w1);
            const auto shuffles = sketch_shuffles(w1, n);
            rec.expect(shuffles.size() == (std::size_t{1} << (2 * n - s)),
                       "shuffle count is not 2^(2n-s) for " + to_string(w1));
            const auto expected = std::make_pair(w1, symmetric_word(w1));
            for (const Word& u : shuffles) {
                rec.expect(validate_symmetric_sketch(u, n).is_ok(),
                           "shuffle fails validation: " + to_string(u));
                rec.expect(decompose_symmetric(u, n) == expected,
                           "decomposition does not recover the sketch pair for " + to_string(u));
            }
        });
    return rec.result;
}

CheckResult check_shuffle_cardinality_forests(int n_max) {
    Recorder rec(range_tag("shuffle-cardinality-forests", n_max));
    for (int n = 1; n <= n_max; ++n)
        for (const Forest& f : all_forests(n, true)) {
            const auto shuffles = forest_shuffles(f);
            rec.expect(shuffles.size() == (std::size_t{1} << special_leaves(f).size()),
                       "shuffle count is not 2^s for " + to_string(f));
            const auto expected = std::make_pair(f, symmetric_forest(f));
            for (const Forest& g : shuffles) {
                rec.expect(validate_symmetric_forest(g, n).is_ok(),
                           "shuffle fails validation: " + to_string(g));
                rec.expect(decompose_symmetric_forest(g, n) == expected,
                           "decomposition does not recover the forest pair for " + to_string(g));
            }
        }
    return rec.result;
}

CheckResult check_cycle_lemma(int max_length) {
    Recorder rec("cycle-lemma[len<=" + std::to_string(max_length) + "]");
    for (int length = 1; length <= max_length; ++length)
        for (unsigned mask = 0; mask < (1u << length); ++mask) {
            LatticePath path(length, 'D');
            int ups = 0;
            for (int t = 0; t < length; ++t)
                if (mask >> t & 1u) {
                    path[t] = 'U';
                    ++ups;
                }
            const int excess = 2 * ups - length;
            if (excess <= 0) continue;
            rec.expect(dominating_rotations(path) == excess,
                       "dominating rotation count differs from the excess for " + path);
        }
    return rec.result;
}

namespace {

int clamp_bound(int requested, int fallback, int hard_cap) {
    if (requested <= 0) return fallback;
    return std::min(requested, hard_cap);
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int n_max) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;

    if (all || suite == "counts") {
        known = true;
        const int bound = clamp_bound(n_max, 200, 1000);
        out.push_back(check_region_counts_small());
        out.push_back(check_region_count_identity(bound));
        out.push_back(check_catalan_sum(bound));
        out.push_back(check_division_exactness(bound));
        out.push_back(check_recurrence_range(bound));
    }
    if (all || suite == "bijection") {
        known = true;
        out.push_back(check_word_forest_roundtrips(clamp_bound(n_max, 3, 4), clamp_bound(n_max, 4, 5)));
        out.push_back(check_position_statistic_bijection(clamp_bound(n_max, 4, 5)));
        out.push_back(check_geometry_roundtrip(clamp_bound(n_max, 3, 4)));
        out.push_back(check_perturbation_stability(std::min(clamp_bound(n_max, 2, 3), 3), 20));
    }
    if (all || suite == "shuffles") {
        known = true;
        out.push_back(check_shuffle_compatibility(clamp_bound(n_max, 3, 4)));
        out.push_back(check_shuffle_cardinality_words(clamp_bound(n_max, 3, 4)));
        out.push_back(check_shuffle_cardinality_forests(clamp_bound(n_max, 3, 4)));
    }
    if (all || suite == "oracle") {
        known = true;
        out.push_back(check_letter_order_filter_oracle(std::min(clamp_bound(n_max, 2, 2), 2)));
        out.push_back(check_forest_filter_oracle(std::min(clamp_bound(n_max, 3, 3), 3)));
        out.push_back(check_symmetric_enumeration(clamp_bound(n_max, 3, 4)));
        out.push_back(check_special_leaf_statistics(clamp_bound(n_max, 8, 10)));
        out.push_back(check_cycle_lemma(14));
    }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace ctcat
