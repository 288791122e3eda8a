// ctcat -- enumeration, bijections and exact counting for the regions of the
// type C Catalan arrangement.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctcat/bijections.hpp"
#include "ctcat/checks.hpp"
#include "ctcat/counting.hpp"
#include "ctcat/forests.hpp"
#include "ctcat/words.hpp"

namespace {

// Desk-scale enumeration guards, bypassed with --force.
constexpr int kMaxAnnotated = 6;
constexpr int kMaxSymmetric = 4;
constexpr int kMaxUnlabeledForests = 10;
constexpr int kMaxLabeledForests = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The object is taken from the positional argument when present; otherwise
// every nonempty line of standard input is one object.
std::vector<std::string> read_objects(const std::string& positional) {
    if (!positional.empty()) return {positional};
    std::vector<std::string> objects;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) objects.push_back(line);
    }
    if (objects.empty()) throw UsageError("no object given (pass one or pipe it on stdin)");
    return objects;
}

void check_size_parameter(int given, int inferred, const std::string& what) {
    if (given > 0 && given != inferred)
        throw std::invalid_argument("size parameter mismatch: --n " + std::to_string(given) +
                                    " but the " + what + " has n=" + std::to_string(inferred));
}

void guard(int n, int bound, bool force, const std::string& what) {
    if (n > bound && !force)
        throw UsageError("refusing to enumerate " + what + " beyond n=" + std::to_string(bound) +
                         " (pass --force to override)");
}

int run_count(int n, bool by_special, bool via_sum) {
    if (by_special)
        std::cout << ctcat::special_leaf_table(n).str();
    else if (via_sum)
        std::cout << ctcat::region_count_via_sum(n).str() << '\n';
    else
        std::cout << ctcat::region_count(n).str() << '\n';
    return 0;
}

int run_enumerate_sketches(int n, bool symmetric, bool force) {
    if (symmetric) {
        guard(n, kMaxSymmetric, force, "symmetric sketches");
        for (const ctcat::Word& w : ctcat::enumerate_symmetric_sketches(n))
            std::cout << ctcat::to_string(w) << '\n';
    } else {
        guard(n, kMaxAnnotated, force, "annotated sketches");
        ctcat::enumerate_annotated_sketches(
            n, [](const ctcat::Word& w) { std::cout << ctcat::to_string(w) << '\n'; });
    }
    return 0;
}

int run_enumerate_forests(int n, bool labeled, bool force) {
    guard(n, labeled ? kMaxLabeledForests : kMaxUnlabeledForests, force,
          labeled ? "labeled forests" : "forest shapes");
    ctcat::enumerate_forests(
        n, labeled, [](const ctcat::Forest& f) { std::cout << ctcat::to_string(f) << '\n'; });
    return 0;
}

int run_map(const std::string& direction, const std::string& positional, int n_opt,
            const std::string& coords) {
    std::vector<std::string> objects;
    if (direction == "point-to-sketch" && !coords.empty()) {
        if (!positional.empty()) throw UsageError("give the point either as --coords or positionally");
        objects = {coords};
    } else {
        objects = read_objects(positional);
    }

    for (const std::string& object : objects) {
        if (direction == "sketch-to-forest") {
            const ctcat::Word w = ctcat::parse_word(object);
            const auto kind = ctcat::classify_sketch(w);
            const int inferred = static_cast<int>(
                kind == ctcat::SketchKind::symmetric ? w.size() / 4 : w.size() / 2);
            check_size_parameter(n_opt, inferred, "sketch");
            std::cout << ctcat::to_string(ctcat::phi(w)) << '\n';
        } else if (direction == "forest-to-sketch") {
            const ctcat::Forest f = ctcat::parse_forest(object);
            const int count = static_cast<int>(ctcat::node_count(f));
            if (ctcat::validate_labeled_forest(f, count).is_ok()) {
                check_size_parameter(n_opt, count, "forest");
                std::cout << ctcat::to_string(ctcat::psi(f, false)) << '\n';
            } else {
                if (count % 2 != 0)
                    throw std::invalid_argument(
                        "not a labeled forest and not a symmetric forest (odd node count)");
                check_size_parameter(n_opt, count / 2, "symmetric forest");
                std::cout << ctcat::to_string(ctcat::psi(f, true)) << '\n';
            }
        } else if (direction == "point-to-sketch") {
            const ctcat::RegionPoint x = ctcat::parse_point(object);
            check_size_parameter(n_opt, static_cast<int>(x.coords.size()), "point");
            std::cout << ctcat::to_string(ctcat::sigma(x)) << '\n';
        } else {  // sketch-to-point
            const ctcat::Word w = ctcat::parse_word(object);
            if (w.empty() || w.size() % 4 != 0)
                throw std::invalid_argument("a symmetric sketch has 4n letters");
            const int n = static_cast<int>(w.size() / 4);
            check_size_parameter(n_opt, n, "sketch");
            std::cout << ctcat::to_string(ctcat::representative_point(w, n)) << '\n';
        }
    }
    return 0;
}

int run_shuffle(const std::string& kind, const std::string& positional) {
    for (const std::string& object : read_objects(positional)) {
        if (kind == "sketch") {
            const ctcat::Word w1 = ctcat::parse_word(object);
            if (w1.empty() || w1.size() % 2 != 0)
                throw std::invalid_argument("an annotated 1-sketch has 2n letters");
            for (const ctcat::Word& w :
                 ctcat::sketch_shuffles(w1, static_cast<int>(w1.size() / 2)))
                std::cout << ctcat::to_string(w) << '\n';
        } else {
            const ctcat::Forest f = ctcat::parse_forest(object);
            for (const ctcat::Forest& g : ctcat::forest_shuffles(f))
                std::cout << ctcat::to_string(g) << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& suite, int n_max) {
    bool all_pass = true;
    for (const ctcat::CheckResult& r : ctcat::run_suite(suite, n_max)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (cases=" << r.cases << ")";
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, bijections and counting for the type C Catalan arrangement"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "print the number of regions for a given n");
    int count_n = 0;
    bool by_special = false, via_sum = false;
    count->add_option("--n", count_n, "ambient dimension")->required();
    auto* by_special_flag =
        count->add_flag("--by-special", by_special, "print the forest counts by special leaves");
    count->add_flag("--via-sum", via_sum, "evaluate the shuffle sum instead of the closed form")
        ->excludes(by_special_flag);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects, one per line");
    enumerate->require_subcommand(1);
    int enum_n = 0;
    bool symmetric = false, labeled = false, force = false;
    auto* sketches = enumerate->add_subcommand("sketches", "annotated 1-sketches");
    sketches->add_option("--n", enum_n, "size parameter")->required();
    sketches->add_flag("--symmetric", symmetric, "symmetric sketches of size 2n");
    sketches->add_flag("--force", force, "ignore the desk-scale bound");
    auto* forests = enumerate->add_subcommand("forests", "rooted ordered forests");
    forests->add_option("--n", enum_n, "number of nodes")->required();
    forests->add_flag("--labeled", labeled, "all signed labelings instead of shapes");
    forests->add_flag("--force", force, "ignore the desk-scale bound");

    // map
    auto* map_cmd = app.add_subcommand("map", "apply one of the bijections to an object");
    map_cmd->require_subcommand(1);
    std::string map_object, map_coords;
    int map_n = 0;
    for (const std::string direction :
         {"sketch-to-forest", "forest-to-sketch", "point-to-sketch", "sketch-to-point"}) {
        auto* sub = map_cmd->add_subcommand(direction, "");
        sub->add_option("object", map_object, "object (or pipe it on stdin)");
        sub->add_option("--n", map_n, "expected size parameter");
        if (direction == "point-to-sketch")
            sub->add_option("--coords", map_coords, "comma-separated rational coordinates");
    }

    // shuffle
    auto* shuffle = app.add_subcommand("shuffle", "list all shuffles of an object with its symmetric");
    shuffle->require_subcommand(1);
    std::string shuffle_object;
    for (const std::string kind : {"sketch", "forest"}) {
        auto* sub = shuffle->add_subcommand(kind, "");
        sub->add_option("object", shuffle_object, "object (or pipe it on stdin)");
    }

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int n_max = 0;
    verify->add_option("--suite", suite, "counts, bijection, shuffles, oracle, or all")->required();
    verify->add_option("--n-max", n_max, "size bound (defaults to the documented desk scale)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(count_n, by_special, via_sum);
        if (enumerate->parsed())
            return sketches->parsed() ? run_enumerate_sketches(enum_n, symmetric, force)
                                      : run_enumerate_forests(enum_n, labeled, force);
        if (map_cmd->parsed())
            return run_map(map_cmd->get_subcommands().front()->get_name(), map_object, map_n,
                           map_coords);
        if (shuffle->parsed())
            return run_shuffle(shuffle->get_subcommands().front()->get_name(), shuffle_object);
        if (verify->parsed()) return run_verify(suite, n_max);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
