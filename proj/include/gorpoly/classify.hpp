#pragma once
// The classification engine for Gorenstein polytopes of degree 2: reflexive
// polygons, the two independent enumeration routes (Cayley construction and
// vertex-deletion closure), catalog assembly with named entries, and the
// classical identity sweeps.

#include "gorpoly/gorenstein.hpp"
#include "gorpoly/polytope.hpp"

#include <string>

namespace gorpoly {

// All 16 reflexive polygons up to lattice isomorphism, sorted by
// (nv, vertex count, normal form).
std::vector<Polytope> classify_reflexive_polygons();

struct CatalogEntry {
  std::string id;
  int dim = 0;
  NormalFormKey key;
  Polytope poly;
  Int nv;
  std::vector<Int> h_star_vec;
  std::vector<Int> f_vec;
  int index = 0;
  std::string dual_id;
  int pyramid_folds = 0;        // 0 = not a pyramid
  std::string pyramid_base_id;  // immediate base; empty for non-pyramids
  std::string root_id;          // innermost non-pyramid id
  std::vector<std::string> cayley_descriptions;
  bool minimal = false;
  bool maximal = false;
  std::optional<int> picard;  // absent for pyramids
};

struct ClassificationResult {
  int dim = 0;
  std::vector<CatalogEntry> entries;  // deterministic id order
  int total = 0;
  int non_pyramids = 0;
  std::string route;  // "cayley" | "deletion" | "both"
  std::vector<NormalFormKey> route_a_keys;  // non-pyramid keys per route
  std::vector<NormalFormKey> route_b_keys;
};

// Classification for dimension n (2 <= n <= 8). route selects which
// enumeration feeds the entry list; "both" additionally asserts set equality
// of the two routes (fatal InternalError listing the symmetric difference).
ClassificationResult classify_degree2(int n, const std::string& route = "both");

// All levels 2..n in one pass (shares the recursive work).
std::vector<ClassificationResult> classify_up_to(int n,
                                                 const std::string& route = "both");

// Sum over edges E of nv(E) * nv(E*); equals 12 for every 3-dimensional
// Gorenstein polytope of degree 2.
Int verify_twelve(const Polytope& p);

// |P cap M| + |P* cap N| + sum over edges of Int(E) * Int(E*); equals 14 for
// every 3-dimensional non-pyramid Gorenstein polytope of degree 2.
Int verify_fourteen(const Polytope& p);

// Sum of facet volumes; equals (n-1) * nv(P) for Gorenstein degree 2.
Int verify_facet_volume_sum(const Polytope& p);

}  // namespace gorpoly
