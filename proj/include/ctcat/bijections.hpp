// bijections.hpp -- maps between region points, sketches and forests

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "ctcat/forests.hpp"
#include "ctcat/words.hpp"

namespace ctcat {

using Rational = boost::multiprecision::cpp_rational;

/// A point of R^n with exact rational coordinates, meant to lie off every
/// hyperplane of the arrangement: the 4n values {±x_i + s, s in {0,1}}
/// must be pairwise distinct. Serialized as comma-separated rationals,
/// e.g. `1/6` or `-1/2,3/4`.
struct RegionPoint {
    std::vector<Rational> coords;
};

RegionPoint parse_point(std::string_view text);
std::string to_string(const RegionPoint& x);
std::string to_string(const Rational& r);

/// Throws std::invalid_argument naming the violated hyperplane equation if
/// two of the 4n arrangement values coincide.
void check_region_point(const RegionPoint& x);

/// Sorts the 4n values ±x_i + s ascending and emits one letter per value.
/// The result is a symmetric annotated 1-sketch; a tie means the point lies
/// on a hyperplane and is a hard error naming the first coinciding pair.
Word sigma(const RegionPoint& x);

/// An exact rational point whose sigma image is w, built by walking w with
/// geometrically decaying steps and averaging the result with its mirrored
/// reading so that x_{-i} = -x_i holds exactly. The sigma round trip is
/// asserted before returning.
RegionPoint representative_point(const Word& w, int n);

enum class SketchKind { annotated, symmetric };

/// Decides whether w is a symmetric annotated 1-sketch (4n letters over the
/// full signed alphabet) or an annotated 1-sketch (2n letters, one sign per
/// absolute index); the two classes are disjoint. Throws with both
/// validation reports if it is neither.
SketchKind classify_sketch(const Word& w);

/// Single left-to-right pass turning a sketch into a forest: each level-0
/// letter creates a node, placed as next right sibling after a level-0
/// letter and as leftmost child after a level-1 letter. Accepts symmetric
/// and annotated sketches.
Forest phi(const Word& w);

/// Inverse of phi: BFS emission of level-0 letters with level-1 letters
/// inserted where the sketch conditions force them. The flag selects which
/// input class is validated: a symmetric forest or a labeled forest.
Word psi(const Forest& f, bool symmetric);

/// phi(sigma(x)): the symmetric forest of the region containing x.
Forest region_to_forest(const RegionPoint& x);

}  // namespace ctcat
