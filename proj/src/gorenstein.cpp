#include "gorpoly/gorenstein.hpp"

#include <algorithm>
#include <set>

namespace gorpoly {

namespace {

// Solves <a_j, m> = r*c_j + 1 over the facets; the facet normal matrix has
// full column rank for a full-dimensional polytope, so a solution is unique
// if it exists, and it must be integral to count.
std::optional<Vec> reflexive_witness(const Polytope& p, const Int& r) {
  const auto& facets = p.facets();
  int n = p.ambient_dim();
  Mat a(int(facets.size()), n);
  Vec b(facets.size());
  for (size_t j = 0; j < facets.size(); ++j) {
    for (int t = 0; t < n; ++t) a(int(j), t) = facets[j].a[t];
    b[j] = r * facets[j].c + 1;
  }
  auto sol = solve_rect(a, b);
  if (!sol) return std::nullopt;
  Vec m(n);
  for (int t = 0; t < n; ++t) {
    if (!(*sol)[t].is_integer()) return std::nullopt;
    m[t] = (*sol)[t].num;
  }
  if (a.mul_vec(m) != b) return std::nullopt;
  return m;
}

void require_full_dim(const Polytope& p, const char* what) {
  if (!p.full_dim())
    throw DomainError("not_full_dimensional",
                      std::string(what) + " requires a full-dimensional polytope");
}

}  // namespace

bool is_reflexive(const Polytope& p, Vec* witness, bool check_hibi) {
  require_full_dim(p, "is_reflexive");
  auto m = reflexive_witness(p, Int(1));
  if (!m) return false;
  if (witness) *witness = *m;
  if (check_hibi) {
    for (long k = 1; k <= 3; ++k)
      GORPOLY_CHECK(ehrhart_count(p, k) == interior_count(p, k + 1),
                    "reflexive polytope fails the interior-shift identity");
  }
  return true;
}

GorensteinInfo gorenstein_index(const Polytope& p) {
  require_full_dim(p, "gorenstein_index");
  int n = p.ambient_dim();
  for (int r = 1; r <= n + 1; ++r) {
    auto m = reflexive_witness(p, Int(r));
    if (m) return GorensteinInfo{r, n + 1 - r, *m};
  }
  return GorensteinInfo{};
}

GorensteinInfo require_gorenstein(const Polytope& p) {
  GorensteinInfo info = gorenstein_index(p);
  if (!info.ok())
    throw DomainError("not_gorenstein", "polytope is not Gorenstein");
  return info;
}

DualResult dual_gorenstein(const Polytope& p) {
  require_full_dim(p, "dual_gorenstein");
  DualResult d;
  d.info = require_gorenstein(p);
  int n = p.ambient_dim();
  const auto& facets = p.facets();

  d.mbar = d.info.m;
  d.mbar.push_back(Int(d.info.index));
  d.n_cone.assign(size_t(n) + 1, Int(0));
  d.n_cone.back() = 1;
  GORPOLY_CHECK(dot(d.mbar, d.n_cone) == d.info.index,
                "degree pairing must equal the Gorenstein index");

  for (const Facet& f : facets) {
    Vec ray = f.a;
    ray.push_back(Int(-f.c));
    GORPOLY_CHECK(gcd_vec(ray) == 1, "dual ray must be primitive");
    GORPOLY_CHECK(dot(d.mbar, ray) == 1, "dual ray must lie on the slice");
    d.rays.push_back(std::move(ray));
  }

  // Chart of the affine hyperplane <mbar, .> = 1: origin = lex-min ray,
  // basis = integer kernel of mbar (saturated).
  AffineChart chart;
  chart.origin = *std::min_element(d.rays.begin(), d.rays.end(), VecLess{});
  chart.basis = kernel_basis(Mat::from_rows({d.mbar}));
  GORPOLY_CHECK(int(chart.basis.size()) == n, "slice chart rank");
  std::vector<Vec> pts;
  for (const Vec& ray : d.rays) pts.push_back(chart.to_chart(ray));
  d.slice_chart = chart;
  d.dual = Polytope::hull(pts);
  GORPOLY_CHECK(d.dual.full_dim(), "dual polytope must be full-dimensional");
  GORPOLY_CHECK(d.dual.vertex_count() == int(facets.size()),
                "every dual ray must be a vertex of the dual polytope");

  const auto& dv = d.dual.vertices();
  d.facet_to_dual_vertex.resize(facets.size());
  for (size_t j = 0; j < facets.size(); ++j) {
    auto it = std::lower_bound(dv.begin(), dv.end(), pts[j], VecLess{});
    GORPOLY_CHECK(it != dv.end() && *it == pts[j], "dual vertex lookup");
    d.facet_to_dual_vertex[j] = int(it - dv.begin());
  }

  d.vertex_to_dual_facet.resize(p.vertex_count());
  const auto& dfacets = d.dual.facets();
  for (int i = 0; i < p.vertex_count(); ++i) {
    std::vector<int> want;
    for (size_t j = 0; j < facets.size(); ++j)
      if (std::binary_search(facets[j].verts.begin(), facets[j].verts.end(), i))
        want.push_back(d.facet_to_dual_vertex[j]);
    std::sort(want.begin(), want.end());
    int found = -1;
    for (size_t t = 0; t < dfacets.size(); ++t)
      if (dfacets[t].verts == want) {
        GORPOLY_CHECK(found < 0, "ambiguous dual facet");
        found = int(t);
      }
    GORPOLY_CHECK(found >= 0, "vertex has no matching dual facet");
    d.vertex_to_dual_facet[i] = found;
  }
  return d;
}

Face dual_face(const DualResult& d, const Polytope& p, const Face& f) {
  if (f.dim >= p.ambient_dim())
    throw DomainError("not_a_proper_face", "dual_face needs a proper face");
  std::vector<int> want;
  for (int j : f.facets) want.push_back(d.facet_to_dual_vertex[j]);
  std::sort(want.begin(), want.end());
  for (const Face& g : d.dual.faces()) {
    if (g.verts == want) {
      GORPOLY_CHECK(g.dim == p.ambient_dim() - 1 - f.dim,
                    "dual face dimension mismatch");
      return g;
    }
  }
  throw InternalError("no dual face found");
}

bool vertex_cone_check(const Polytope& p, int vertex_index) {
  require_full_dim(p, "vertex_cone_check");
  int n = p.ambient_dim();
  const Vec& v = p.vertices().at(size_t(vertex_index));
  std::vector<Vec> gens;
  for (const Vec& w : p.lattice_points())
    if (w != v) gens.push_back(vsub(w, v));
  std::vector<Vec> active;
  for (const Facet& f : p.facets())
    if (dot(f.a, v) == f.c) active.push_back(f.a);
  // 1) Every generator satisfies the active inequalities.
  for (const Vec& g : gens)
    for (const Vec& a : active)
      if (dot(a, g) < 0) return false;
  // 2) Every extreme ray of the H-cone lies in the cone of the generators.
  std::vector<Vec> rays;
  int na = int(active.size());
  std::vector<int> idx(size_t(n - 1));
  std::function<void(int, int)> pick = [&](int start, int depth) {
    if (depth == n - 1) {
      std::vector<Vec> rows;
      for (int t : idx) rows.push_back(active[size_t(t)]);
      auto ker = kernel_basis(Mat::from_rows(rows));
      if (ker.size() != 1) return;
      for (int s : {1, -1}) {
        Vec r = vscale(Int(s), primitivize(ker[0]));
        bool ok = true;
        for (const Vec& a : active)
          if (dot(a, r) < 0) {
            ok = false;
            break;
          }
        if (ok && std::find(rays.begin(), rays.end(), r) == rays.end())
          rays.push_back(r);
      }
      return;
    }
    for (int t = start; t <= na - (n - 1 - depth); ++t) {
      idx[size_t(depth)] = t;
      pick(t + 1, depth + 1);
    }
  };
  if (n == 1) {
    // Active row is a single inequality; its ray is the inward direction.
    rays.push_back(active[0]);
  } else {
    pick(0, 0);
  }
  // Membership via Caratheodory: some <= n generators combine nonnegatively.
  for (const Vec& r : rays) {
    bool found = false;
    int m = int(gens.size());
    std::vector<int> sel(static_cast<size_t>(n), 0);
    long long tried = 0;
    std::function<void(int, int)> search = [&](int start, int depth) {
      if (found || tried > 2000000) return;
      if (depth == n) {
        ++tried;
        std::vector<Vec> cols;
        for (int t : sel) cols.push_back(gens[size_t(t)]);
        auto sol = solve_rect(Mat::from_cols(cols), r);
        if (!sol) return;
        for (const Rat& x : *sol)
          if (x.num < 0) return;
        found = true;
        return;
      }
      for (int t = start; t <= m - (n - depth) && !found; ++t) {
        sel[size_t(depth)] = t;
        search(t + 1, depth + 1);
      }
    };
    search(0, 0);
    if (!found) return false;
  }
  return true;
}

PyramidStructure pyramid_structure(const Polytope& p) {
  require_full_dim(p, "pyramid_structure");
  PyramidStructure s;
  auto split = pyramid_split(p);
  if (!split) return s;
  s.is_pyramid = true;
  s.apex = split->apex;
  s.base = split->base;
  s.folds = 1 + peel_pyramids(split->base).folds;
  return s;
}

Polytope delete_vertex(const Polytope& p, const Vec& v) {
  require_full_dim(p, "delete_vertex");
  const auto& verts = p.vertices();
  if (std::find(verts.begin(), verts.end(), v) == verts.end())
    throw DomainError("not_a_vertex", "delete_vertex: point is not a vertex");
  std::vector<Vec> pts;
  for (const Vec& x : p.lattice_points())
    if (x != v) pts.push_back(x);
  if (pts.empty())
    throw DomainError("deletion_degenerate", "no lattice points remain");
  Polytope q = Polytope::hull(pts);
  if (q.affine_dim() != p.ambient_dim())
    throw DomainError("deletion_degenerate",
                      "vertex deletion drops the dimension");
  return q;
}

std::vector<int> deletable_vertices(const Polytope& p) {
  GorensteinInfo info = require_gorenstein(p);
  HStar hs = h_star(p);
  if (hs.degree != 2)
    throw DomainError("not_degree_two",
                      "deletable_vertices requires Gorenstein degree 2");
  (void)info;
  DualResult d = dual_gorenstein(p);
  std::vector<int> out;
  for (int i = 0; i < p.vertex_count(); ++i) {
    bool deletable = false;
    try {
      Polytope q = delete_vertex(p, p.vertices()[size_t(i)]);
      GorensteinInfo qi = gorenstein_index(q);
      deletable = qi.ok() && h_star(q).degree == 2;
    } catch (const DomainError&) {
      deletable = false;
    }
    // Dual criterion: the facet of the dual corresponding to v is a
    // unimodular simplex.
    const Facet& df = d.dual.facets()[size_t(d.vertex_to_dual_facet[size_t(i)])];
    std::vector<Vec> fverts;
    for (int t : df.verts) fverts.push_back(d.dual.vertices()[size_t(t)]);
    bool basic = int(fverts.size()) == p.ambient_dim() &&
                 Polytope::hull(fverts).normalized_volume() == 1;
    GORPOLY_CHECK(deletable == basic,
                  "deletability must match the dual unimodular-facet criterion");
    if (deletable) out.push_back(i);
  }
  return out;
}

bool is_minimal(const Polytope& p) { return deletable_vertices(p).empty(); }

bool is_maximal(const Polytope& p) {
  DualResult d = dual_gorenstein(p);
  return deletable_vertices(d.dual).empty();
}

int picard_rank(const Polytope& p) {
  GorensteinInfo info = require_gorenstein(p);
  (void)info;
  if (h_star(p).degree != 2)
    throw DomainError("not_degree_two", "picard_rank requires degree 2");
  if (pyramid_structure(p).is_pyramid)
    throw DomainError("pyramid_not_supported",
                      "picard_rank is not defined for lattice pyramids");
  DualResult d = dual_gorenstein(p);
  return int(to_ll(d.dual.normalized_volume())) - 1;
}

}  // namespace gorpoly
