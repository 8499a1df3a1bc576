#pragma once
// Reflexivity, Gorenstein index/degree, the dual Gorenstein polytope with its
// combinatorial duality certificate, lattice-pyramid structure, vertex
// deletion, and minimality/maximality of Gorenstein polytopes of degree 2.

#include "gorpoly/ehrhart.hpp"
#include "gorpoly/polytope.hpp"

namespace gorpoly {

// True iff some lattice point m satisfies <a_j, m> = c_j + 1 for every facet;
// m is then the unique interior lattice point and every facet has lattice
// distance 1 from it. When check_hibi is set, additionally asserts
// i(P,k) = |int((k+1)P)| for k = 1..3 (expensive; test use).
bool is_reflexive(const Polytope& p, Vec* witness = nullptr,
                  bool check_hibi = false);

struct GorensteinInfo {
  int index = 0;   // smallest r >= 1 with r*P reflexive; 0 = not Gorenstein
  int degree = -1; // n + 1 - r
  Vec m;           // interior lattice point of r*P (witness)
  bool ok() const { return index > 0; }
};
GorensteinInfo gorenstein_index(const Polytope& p);

// Duality certificate: rays of the dual of the Gorenstein cone over P, the
// degree functionals on both sides, the dual polytope in a saturated chart of
// the height-1 slice, and the vertex<->facet correspondences.
struct DualResult {
  GorensteinInfo info;
  std::vector<Vec> rays;  // (a_j, -c_j), primitive, one per facet of P
  Vec mbar;               // (m, r): evaluates to 1 on every ray
  Vec n_cone;             // (0,...,0,1): degree functional of the cone over P
  AffineChart slice_chart;
  Polytope dual;                          // full-dim in chart coordinates
  std::vector<int> facet_to_dual_vertex;  // facet j of P -> vertex of dual
  std::vector<int> vertex_to_dual_facet;  // vertex i of P -> facet of dual
};
DualResult dual_gorenstein(const Polytope& p);

// Combinatorial duality on proper faces: face of P -> face of dual, with
// dim F* = n - 1 - dim F.
Face dual_face(const DualResult& d, const Polytope& p, const Face& f);

// Consistency of the vertex cone: the cone spanned by (P cap Z^n) - v equals
// the H-cone of the active facet inequalities at v.
bool vertex_cone_check(const Polytope& p, int vertex_index);

struct PyramidStructure {
  bool is_pyramid = false;
  Vec apex;                      // when is_pyramid
  std::optional<Polytope> base;  // first peel, full-dim in its chart, dim n-1
  int folds = 0;                 // successive peels
};
PyramidStructure pyramid_structure(const Polytope& p);

// Convex hull of (P cap Z^n) \ {v}; v must be a vertex. Errors when the
// result drops dimension.
Polytope delete_vertex(const Polytope& p, const Vec& v);

// Vertices whose deletion keeps the polytope Gorenstein of degree 2
// (full-dimensional). Requires P Gorenstein of degree 2. Cross-asserts the
// dual criterion: v is deletable iff its dual facet is a unimodular simplex.
std::vector<int> deletable_vertices(const Polytope& p);

bool is_minimal(const Polytope& p);  // no deletable vertices
bool is_maximal(const Polytope& p);  // dual has no deletable vertices

// nv(dual) - 1; defined for non-pyramid Gorenstein polytopes of degree 2.
int picard_rank(const Polytope& p);

// Throws DomainError("not_gorenstein") unless p is Gorenstein.
GorensteinInfo require_gorenstein(const Polytope& p);

}  // namespace gorpoly
