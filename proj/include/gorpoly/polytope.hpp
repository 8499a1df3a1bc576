#pragma once
// Lattice polytopes with exact vertex/facet data, lattice point enumeration,
// normalized volumes, the face lattice, affine charts for lower-dimensional
// faces, lattice-pyramid recognition, and a canonical normal form deciding
// lattice isomorphism (GL_n(Z) + translation).

#include "gorpoly/core.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>

namespace gorpoly {

// Affine chart onto a (saturated) affine sublattice: point <-> origin + B x.
// Columns of `basis` form a basis of the saturation of the difference lattice,
// so chart coordinates of lattice points are integers and lattice structure is
// preserved (the chart is a lattice isomorphism onto Z^rank).
struct AffineChart {
  Vec origin;               // in ambient Z^D
  std::vector<Vec> basis;   // rank vectors in Z^D (columns of B)
  int ambient_dim() const { return int(origin.size()); }
  int rank() const { return int(basis.size()); }
  Vec to_chart(const Vec& point) const;    // exact; throws if off the chart
  Vec from_chart(const Vec& coords) const; // origin + B x
};

// Inward facet inequality <a, x> >= c with primitive a; `verts` are indices
// into the polytope's vertex list (sorted ascending).
struct Facet {
  Vec a;
  Int c;
  std::vector<int> verts;
};

// A face, recorded by its vertex index set; `dim` is its affine dimension and
// `facets` lists the indices of all facets containing it.
struct Face {
  std::vector<int> verts;   // sorted ascending
  uint64_t vmask = 0;
  std::vector<int> facets;  // sorted ascending
  int dim = -1;
};

// Canonical key: equal keys <=> lattice-isomorphic polytopes.
struct NormalFormKey {
  int dim = 0;
  int nverts = 0;
  std::vector<Int> data;  // column-major flattening of the canonical HNF
  bool operator==(const NormalFormKey& o) const {
    return dim == o.dim && nverts == o.nverts && data == o.data;
  }
  bool operator<(const NormalFormKey& o) const;
  std::string to_string() const;
};

class Polytope {
 public:
  // Convex hull of the given lattice points (ambient dimension = point size).
  // Works for any affine dimension; facet data is present only when the
  // polytope is full-dimensional in its ambient space.
  static Polytope hull(const std::vector<Vec>& points);

  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dim() const { return affine_dim_ == ambient_dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  int vertex_count() const { return int(vertices_.size()); }
  // Facets (full-dimensional polytopes only; empty otherwise per contract).
  const std::vector<Facet>& facets() const { return facets_; }

  // For non-full-dimensional polytopes: a chart onto the affine hull and the
  // full-dimensional polytope living there.
  const AffineChart& chart() const;
  const Polytope& chart_polytope() const;

  Polytope dilate(const Int& k) const;
  Polytope translate(const Vec& t) const;
  // Applies x -> U x + t with U unimodular.
  Polytope transform(const Mat& u, const Vec& t) const;

  std::vector<Vec> lattice_points() const;           // any affine dimension
  std::vector<Vec> interior_lattice_points() const;  // relative interior
  Int lattice_point_count() const;
  Int interior_lattice_point_count() const;

  // Normalized volume (affine_dim()! times euclidean volume w.r.t. the
  // induced lattice); 1 for a point.
  Int normalized_volume() const;

  // All nonempty proper and improper faces, ordered by dimension then by
  // vertex mask; includes vertices and the polytope itself. Full-dim only.
  std::vector<Face> faces() const;
  // (1, f_0, ..., f_{n-1}, 1) including the empty face and the polytope.
  std::vector<Int> f_vector() const;
  // Normalized volume of a face w.r.t. the lattice induced on its affine
  // hull; a vertex has volume 1.
  Int face_volume(const Face& f) const;
  // Number of lattice points in the relative interior of a face; a vertex has
  // 0... (a vertex is its own relative interior: returns 1 for dim 0).
  Int face_interior_count(const Face& f) const;
  // The face as a standalone full-dimensional polytope in chart coordinates.
  Polytope face_polytope(const Face& f) const;

  // Lattice distance of a point from facet i: <a_i, x> - c_i.
  Int facet_distance(int facet_index, const Vec& x) const;

  NormalFormKey normal_form() const;

  bool contains(const Vec& point) const;          // closed containment
  bool strictly_contains(const Vec& point) const; // interior containment

 private:
  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Vec> vertices_;  // lex sorted
  std::vector<Facet> facets_;  // full-dim only
  // Lazy-free design: lower-dim polytopes precompute their chart at
  // construction (cheap), everything else is computed on demand.
  std::optional<AffineChart> chart_;
  std::optional<std::shared_ptr<const Polytope>> chart_poly_;
};

bool are_isomorphic(const Polytope& p, const Polytope& q);

// Lattice pyramid recognition: a facet hyperplane containing every lattice
// point of P except a single vertex (the apex) at lattice distance 1.
struct PyramidSplit {
  Vec apex;
  Polytope base;       // full-dimensional in chart coordinates, dim n-1
  int base_facet = 0;  // index of the base facet in P
};
std::optional<PyramidSplit> pyramid_split(const Polytope& p);

// Number of successive pyramid peels (0 when not a lattice pyramid), plus the
// innermost non-pyramid core in its own coordinates.
struct PyramidPeel {
  int folds = 0;
  Polytope core;
};
PyramidPeel peel_pyramids(const Polytope& p);

// Seeded random unimodular matrix (product of elementary operations) and
// random translation; used by tests and verification sweeps.
Mat random_unimodular(int n, uint64_t seed);
Vec random_translation(int n, uint64_t seed, long bound);

}  // namespace gorpoly
