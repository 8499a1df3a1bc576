#pragma once
// Minkowski sums and polygon decompositions, Cayley polytopes, pyramids, and
// the special polytopes theta(d) and 2S_3.

#include "gorpoly/polytope.hpp"

namespace gorpoly {

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// A decomposition of a polygon into >= 2 nontrivial summands (segments or
// polygons), each translated so its lexicographic minimum vertex is the
// origin, sorted deterministically. Point summands are excluded (they
// correspond to pyramids, realized by the pyramid operation instead).
struct Decomposition {
  std::vector<Polytope> parts;
};
// All decompositions of a 2-dimensional lattice polygon up to translation of
// the summands and permutation of the multiset.
std::vector<Decomposition> minkowski_decompositions(const Polytope& p);

// Cayley polytope of the factors: hull of (factor_i, e_i) in a saturated
// chart, full-dimensional of dimension dim(sum of factors) + r - 1. With a
// single factor, returns that factor.
Polytope cayley(const std::vector<Polytope>& factors);

// P embedded at height 0 with r apex unit vectors appended.
Polytope pyramid(const Polytope& p, int r);

// Cayley polytope of the 2d segments [0, e_i], [0, -e_i] (their Minkowski
// sum is the cube [-1,1]^d): the (3d-1)-dimensional Gorenstein polytope of
// degree d and index 2d.
Polytope theta(int d);

// 2 * (unit 3-simplex).
Polytope two_s3();

}  // namespace gorpoly
