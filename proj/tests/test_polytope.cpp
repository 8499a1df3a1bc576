#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gorpoly/polytope.hpp"

#include "oracles.hpp"

#include <set>

using namespace gorpoly;
using gorpoly::testing::brute_force_isomorphic;
using gorpoly::testing::random_lattice_polytope;
using gorpoly::testing::Rng;

namespace {

const std::vector<Vec> kSquare = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const std::vector<Vec> kTriangle = {{0, 0}, {1, 0}, {0, 1}};

Polytope two_s3_points() {
  // All 10 lattice points of 2*(unit 3-simplex), plus dilate gives 14? No:
  // |2S3 ∩ Z^3| = 10; feed all of them to hull.
  std::vector<Vec> pts;
  for (Int x = 0; x <= 2; ++x)
    for (Int y = 0; y <= 2; ++y)
      for (Int z = 0; z <= 2; ++z)
        if (x + y + z <= 2) pts.push_back({x, y, z});
  return Polytope::hull(pts);
}

}  // namespace

TEST_CASE("hull: spec examples") {
  Polytope tri = Polytope::hull(kTriangle);
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.facets().size() == 3);
  CHECK(tri.affine_dim() == 2);

  // (1,1) lies on the edge (2,0)-(0,2) and must be eliminated.
  Polytope big = Polytope::hull({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  CHECK(big.vertex_count() == 3);
  std::set<Vec, VecLess> vs(big.vertices().begin(), big.vertices().end());
  CHECK(vs.count(Vec{0, 0}));
  CHECK(vs.count(Vec{2, 0}));
  CHECK(vs.count(Vec{0, 2}));
  CHECK(!vs.count(Vec{1, 1}));

  // Hull of all lattice points of 2*(unit 3-simplex): 4 vertices, 4 facets.
  Polytope s = two_s3_points();
  CHECK(s.vertex_count() == 4);
  CHECK(s.facets().size() == 4);

  // Facet contract: primitive inward normals, vertices on >= dim facets.
  for (const Facet& f : s.facets()) {
    CHECK(gcd_vec(f.a) == 1);
    int on = 0;
    for (const Vec& v : s.vertices()) {
      Int d = dot(f.a, v) - f.c;
      CHECK(d >= 0);
      if (d == 0) ++on;
    }
    CHECK(on == int(f.verts.size()));
  }
  for (const Vec& v : s.vertices()) {
    int active = 0;
    for (const Facet& f : s.facets())
      if (dot(f.a, v) == f.c) ++active;
    CHECK(active >= 3);
  }
}

TEST_CASE("hull: every vertex is not a convex combination of the others") {
  // Indirect check: re-hulling the vertex set reproduces it exactly.
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    Polytope p = random_lattice_polytope(int(rng.range(2, 3)), 10, 4, rng);
    Polytope q = Polytope::hull(p.vertices());
    CHECK(q.vertices() == p.vertices());
  }
}

TEST_CASE("lattice points: spec examples and dilation consistency") {
  CHECK(Polytope::hull(kSquare).lattice_point_count() == 4);
  Polytope box = Polytope::hull({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(box.lattice_point_count() == 9);
  Polytope p1 = Polytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  CHECK(p1.lattice_point_count() == 4);

  // Lex sorted output.
  std::vector<Vec> pts = box.lattice_points();
  for (size_t i = 1; i < pts.size(); ++i) CHECK(VecLess()(pts[i - 1], pts[i]));

  // Dilation path consistency: points of dilate(k) == points of scaled hull.
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    Polytope p = random_lattice_polytope(2, 8, 3, rng);
    long k = rng.range(2, 3);
    std::vector<Vec> scaled;
    for (const Vec& v : p.vertices()) scaled.push_back(vscale(Int(k), v));
    CHECK(p.dilate(Int(k)).lattice_points() ==
          Polytope::hull(scaled).lattice_points());
  }
}

TEST_CASE("interior lattice points") {
  CHECK(Polytope::hull({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}})
            .interior_lattice_points() == std::vector<Vec>{{0, 0}});
  CHECK(Polytope::hull(kSquare).interior_lattice_point_count() == 0);
  Polytope s = two_s3_points();
  CHECK(s.interior_lattice_point_count() == 0);
  // 2 * (2S3) = 4 * S3 = {x >= 0, sum <= 4}: unique interior point (1,1,1).
  CHECK(s.dilate(Int(2)).interior_lattice_points() ==
        std::vector<Vec>{{1, 1, 1}});
  // 3 * (2S3) = {x >= 0, sum <= 6}: interior {x >= 1, sum <= 5} has C(5,3)
  // points.
  CHECK(s.dilate(Int(3)).interior_lattice_point_count() == 10);
  Polytope unit_simplex =
      Polytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(unit_simplex.dilate(Int(4)).interior_lattice_points() ==
        std::vector<Vec>{{1, 1, 1}});
}

TEST_CASE("normalized volume") {
  CHECK(Polytope::hull(kTriangle).normalized_volume() == 1);
  Polytope simplex4 = Polytope::hull(
      {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(simplex4.normalized_volume() == 1);
  CHECK(Polytope::hull({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}).normalized_volume() == 8);
  CHECK(two_s3_points().normalized_volume() == 8);
  CHECK(Polytope::hull(kSquare).normalized_volume() == 2);
  // Volume is a lattice invariant.
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    Polytope p = random_lattice_polytope(3, 8, 3, rng);
    Mat u = random_unimodular(3, uint64_t(100 + t));
    Vec tr = random_translation(3, uint64_t(200 + t), 5);
    CHECK(p.transform(u, tr).normalized_volume() == p.normalized_volume());
  }
}

TEST_CASE("faces and f-vectors") {
  Polytope s3 = Polytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(s3.f_vector() == std::vector<Int>{1, 4, 6, 4, 1});
  Polytope cube = Polytope::hull({{0, 0, 0},
                                  {1, 0, 0},
                                  {0, 1, 0},
                                  {0, 0, 1},
                                  {1, 1, 0},
                                  {1, 0, 1},
                                  {0, 1, 1},
                                  {1, 1, 1}});
  CHECK(cube.f_vector() == std::vector<Int>{1, 8, 12, 6, 1});

  // Euler: v - e + f = 2 for 3-polytopes.
  Rng rng(24);
  for (int t = 0; t < 15; ++t) {
    Polytope p = random_lattice_polytope(3, 8, 3, rng);
    std::vector<Int> f = p.f_vector();
    REQUIRE(f.size() == 5);
    CHECK(f[1] - f[2] + f[3] == 2);
  }

  // The face list is closed and consistent: each face's vertices lie on all
  // its facets, and dimensions are correct for the cube.
  std::vector<Face> faces = cube.faces();
  int d0 = 0, d1 = 0, d2 = 0, d3 = 0;
  for (const Face& f : faces) {
    if (f.dim == 0) ++d0;
    if (f.dim == 1) ++d1;
    if (f.dim == 2) ++d2;
    if (f.dim == 3) ++d3;
    for (int fi : f.facets)
      for (int vi : f.verts)
        CHECK(cube.facet_distance(fi, cube.vertices()[size_t(vi)]) == 0);
  }
  CHECK(d0 == 8);
  CHECK(d1 == 12);
  CHECK(d2 == 6);
  CHECK(d3 == 1);
}

TEST_CASE("face volume and interior counts on edges") {
  Polytope p = Polytope::hull({{0, 0}, {2, 0}, {0, 2}});
  // Find the edge from (0,0) to (2,0): nv 2, one interior point.
  for (const Face& f : p.faces()) {
    if (f.dim != 1) continue;
    std::set<Vec, VecLess> vs;
    for (int vi : f.verts) vs.insert(p.vertices()[size_t(vi)]);
    if (vs.count(Vec{0, 0}) && vs.count(Vec{2, 0})) {
      CHECK(p.face_volume(f) == 2);
      CHECK(p.face_interior_count(f) == 1);
    }
    if (vs.count(Vec{2, 0}) && vs.count(Vec{0, 2})) {
      // Edge (2,0)-(0,2) has direction (1,-1): length 2 as well.
      CHECK(p.face_volume(f) == 2);
    }
  }
  Polytope q = Polytope::hull({{0, 0}, {1, 1}, {1, 0}});
  for (const Face& f : q.faces()) {
    if (f.dim != 1) continue;
    std::set<Vec, VecLess> vs;
    for (int vi : f.verts) vs.insert(q.vertices()[size_t(vi)]);
    if (vs.count(Vec{0, 0}) && vs.count(Vec{1, 1})) {
      CHECK(q.face_volume(f) == 1);
      CHECK(q.face_interior_count(f) == 0);
    }
  }
}

TEST_CASE("normal form: invariance, separation, idempotence") {
  Polytope square = Polytope::hull(kSquare);
  Polytope tri = Polytope::hull(kTriangle);
  CHECK(square.normal_form() == square.normal_form());
  CHECK(!(square.normal_form() == tri.normal_form()));

  // Translation invariance (spec example: translate by (5,-3)).
  Polytope moved = square.translate({5, -3});
  CHECK(square.normal_form() == moved.normal_form());

  // 100 random unimodular transform + translate round trips.
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    int dim = int(rng.range(2, 3));
    Polytope p = random_lattice_polytope(dim, 7, 3, rng);
    NormalFormKey key = p.normal_form();
    Mat u = random_unimodular(dim, uint64_t(300 + t));
    Vec tr = random_translation(dim, uint64_t(400 + t), 6);
    Polytope q = p.transform(u, tr);
    CHECK(q.normal_form() == key);
    CHECK(are_isomorphic(p, q));
  }
}

TEST_CASE("normal form agrees with brute-force isomorphism search") {
  Rng rng(26);
  int positives = 0, negatives = 0;
  for (int t = 0; t < 120; ++t) {
    int dim = int(rng.range(2, 3));
    Polytope p = random_lattice_polytope(dim, 6, 2, rng);
    Polytope q;
    if (t % 2 == 0) {
      Mat u = random_unimodular(dim, uint64_t(500 + t));
      Vec tr = random_translation(dim, uint64_t(600 + t), 4);
      q = p.transform(u, tr);
    } else {
      q = random_lattice_polytope(dim, 6, 2, rng);
    }
    bool fast = are_isomorphic(p, q);
    bool slow = brute_force_isomorphic(p, q);
    CHECK(fast == slow);
    if (slow) ++positives;
    else ++negatives;
  }
  CHECK(positives >= 40);
  CHECK(negatives >= 10);
}

TEST_CASE("lower-dimensional polytopes and charts") {
  // A segment embedded in Z^3.
  Polytope seg = Polytope::hull({{0, 0, 0}, {2, 2, 0}});
  CHECK(seg.affine_dim() == 1);
  CHECK(!seg.full_dim());
  CHECK(seg.lattice_point_count() == 3);  // (0,0,0),(1,1,0),(2,2,0)
  const Polytope& inner = seg.chart_polytope();
  CHECK(inner.affine_dim() == 1);
  CHECK(inner.full_dim());
  CHECK(inner.normalized_volume() == 2);
  // Chart round trip.
  Vec mid = {1, 1, 0};
  Vec c = seg.chart().to_chart(mid);
  CHECK(seg.chart().from_chart(c) == mid);
  // A triangle in a plane of Z^3.
  Polytope tri = Polytope::hull({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(tri.affine_dim() == 2);
  CHECK(tri.chart_polytope().normalized_volume() == 1);
}

TEST_CASE("pyramid recognition and peeling") {
  Polytope s3 = Polytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto split = pyramid_split(s3);
  REQUIRE(split.has_value());
  CHECK(peel_pyramids(s3).folds == 3);  // simplex peels down to a segment

  // 2S3 is not a lattice pyramid (apex would need all-but-one point on a facet).
  CHECK(!pyramid_split(two_s3_points()).has_value());

  // Unit square is not a pyramid.
  CHECK(!pyramid_split(Polytope::hull(kSquare)).has_value());

  // An explicit pyramid over the square.
  Polytope pyr = Polytope::hull(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  auto ps = pyramid_split(pyr);
  REQUIRE(ps.has_value());
  CHECK(ps->apex == Vec{0, 0, 1});
  CHECK(ps->base.normalized_volume() == 2);
  CHECK(peel_pyramids(pyr).folds == 1);
}

TEST_CASE("containment") {
  Polytope box = Polytope::hull({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(box.contains(Vec{0, 0}));
  CHECK(box.contains(Vec{1, 1}));
  CHECK(box.strictly_contains(Vec{0, 0}));
  CHECK(!box.strictly_contains(Vec{1, 0}));
  CHECK(!box.contains(Vec{2, 0}));
}
