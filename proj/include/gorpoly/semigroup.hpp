#pragma once
// The graded semigroup of the cone over P: irreducible generators, generator
// counting polynomial I(P,t), minimal binomial relations via semigroup fiber
// graphs, the Artinian quotient profile, and pyramid detection from relations.

#include "gorpoly/ehrhart.hpp"
#include "gorpoly/polytope.hpp"

namespace gorpoly {

struct GradedGenerators {
  // Generator points (m, k) of the cone over P with their degree k, sorted by
  // (degree, lex point). Variables x_1..x_V follow this order.
  std::vector<std::pair<Vec, long>> gens;
  std::vector<Int> i_poly;  // i_poly[k] = number of degree-k generators
  long saturation_checked_to = 0;
};
GradedGenerators irreducible_generators(const Polytope& p, long k_max);

struct Binomial {
  // Factorizations as sorted multisets of generator indices (0-based); both
  // sides sum to the same lattice point, of the given total degree.
  std::vector<int> lhs, rhs;
  long degree = 0;
  std::vector<int> support() const;  // distinct variables, sorted
};
std::string binomial_to_string(const Binomial& b);  // e.g. "x1 x2 = x5^2"

struct Presentation {
  GradedGenerators gens;
  std::vector<Binomial> relations;  // sorted by (degree, lhs, rhs)
  long deg_max = 0;
};
// deg_max < 0 selects the default 2*index + 2 (falling back to 4 when not
// Gorenstein); a no-new-relations sweep runs at deg_max + 1.
Presentation minimal_relations(const Polytope& p, const GradedGenerators& gens,
                               long deg_max = -1);

// All factorizations of a lattice point (m, b) of the cone into generators,
// as sorted generator-index multisets. The polytope drives the geometric
// prune (partial remainders must stay in the corresponding dilate).
std::vector<std::vector<int>> fiber_factorizations(const Polytope& p,
                                                   const GradedGenerators& gens,
                                                   const Vec& m, long b,
                                                   long cap = 100000);

struct ArtinianProfile {
  std::vector<Int> g_vector;  // G(t) = I(P,t) - (n+1) t, by degree
  Int a;                      // h*_1
  std::string case_tag;  // "K[X]/(X^2)" | "K[X]/(X^3)" |
                         // "K[X,Y]/(XY, X^2 - lambda*Y^2)" | "none"
};
ArtinianProfile artinian_profile(const Polytope& p, const GradedGenerators& gens);

// True iff some variable appears in no minimal relation.
bool pyramid_by_relations(const Presentation& pres);

}  // namespace gorpoly
