#include "gorpoly/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gorpoly {

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DomainError("dimension_mismatch", "minkowski_sum: ambient dims differ");
  std::vector<Vec> pts;
  for (const Vec& va : a.vertices())
    for (const Vec& vb : b.vertices()) pts.push_back(vadd(va, vb));
  return Polytope::hull(pts);
}

namespace {

// CCW-orders 2d primitive directions starting from the positive x-axis.
bool angle_less(const Vec& u, const Vec& v) {
  auto half = [](const Vec& w) {
    return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  Int cross = u[0] * v[1] - u[1] * v[0];
  if (cross != 0) return cross > 0;
  return VecLess{}(u, v);
}

// Translates so the lex-min vertex is at the origin.
Polytope normalize_translation(const Polytope& p) {
  Vec t = p.vertices().front();  // vertices are lex-sorted
  for (Int& x : t) x = -x;
  return p.translate(t);
}

// Rebuilds the polygon/segment whose CCW boundary consists of the given unit
// edge vectors.
Polytope polygon_from_units(std::vector<Vec> units) {
  std::sort(units.begin(), units.end(), angle_less);
  std::vector<Vec> pts;
  Vec cur(2, Int(0));
  pts.push_back(cur);
  for (const Vec& u : units) {
    cur = vadd(cur, u);
    pts.push_back(cur);
  }
  return normalize_translation(Polytope::hull(pts));
}

std::string poly_signature(const Polytope& p) {
  std::string s;
  for (const Vec& v : p.vertices()) s += vec_to_string(v);
  return s;
}

}  // namespace

std::vector<Decomposition> minkowski_decompositions(const Polytope& p) {
  if (p.affine_dim() != 2)
    throw DomainError("not_a_polygon",
                      "minkowski_decompositions requires a 2-dim polygon");
  const Polytope& q = p.full_dim() ? p : p.chart_polytope();

  // Unit boundary edge vectors in CCW orientation: for inward normal a, the
  // CCW edge direction is (a_y, -a_x).
  std::vector<Vec> units;
  for (const Facet& f : q.facets()) {
    Vec dir = {f.a[1], -f.a[0]};
    Vec e = vsub(q.vertices()[size_t(f.verts.back())],
                 q.vertices()[size_t(f.verts.front())]);
    Int len = gcd_vec(e);
    for (Int i = 0; i < len; ++i) units.push_back(dir);
  }
  GORPOLY_CHECK(is_zero(std::accumulate(
                    units.begin(), units.end(), Vec(2, Int(0)),
                    [](const Vec& a, const Vec& b) { return vadd(a, b); })),
                "boundary edge vectors must sum to zero");

  int m = int(units.size());
  if (m > 12)
    throw DomainError("polygon_too_large",
                      "boundary too long for exhaustive partition search");

  // Enumerate set partitions of the unit indices (restricted growth strings),
  // keep those whose parts are each zero-sum, and dedupe the resulting
  // summand multisets.
  std::set<std::vector<std::string>> seen;
  std::vector<Decomposition> out;
  std::vector<int> assign(size_t(m), 0);
  std::function<void(int, int)> rec = [&](int i, int nparts) {
    if (i == m) {
      if (nparts < 2) return;
      std::vector<Vec> sums(size_t(nparts), Vec(2, Int(0)));
      for (int t = 0; t < m; ++t)
        sums[size_t(assign[size_t(t)])] =
            vadd(sums[size_t(assign[size_t(t)])], units[size_t(t)]);
      for (const Vec& s : sums)
        if (!is_zero(s)) return;
      Decomposition dec;
      for (int part = 0; part < nparts; ++part) {
        std::vector<Vec> pu;
        for (int t = 0; t < m; ++t)
          if (assign[size_t(t)] == part) pu.push_back(units[size_t(t)]);
        dec.parts.push_back(polygon_from_units(pu));
      }
      std::sort(dec.parts.begin(), dec.parts.end(),
                [](const Polytope& a, const Polytope& b) {
                  return poly_signature(a) < poly_signature(b);
                });
      std::vector<std::string> sig;
      for (const Polytope& part : dec.parts) sig.push_back(poly_signature(part));
      if (!seen.insert(sig).second) return;
      // Soundness: parts re-sum to the polygon up to translation.
      Polytope sum = dec.parts[0];
      for (size_t t = 1; t < dec.parts.size(); ++t)
        sum = minkowski_sum(sum, dec.parts[t]);
      GORPOLY_CHECK(
          poly_signature(normalize_translation(sum)) ==
              poly_signature(normalize_translation(q)),
          "decomposition does not re-sum to the polygon");
      out.push_back(std::move(dec));
      return;
    }
    for (int part = 0; part <= nparts && part < m; ++part) {
      assign[size_t(i)] = part;
      rec(i + 1, std::max(nparts, part + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) {
              if (a.parts.size() != b.parts.size())
                return a.parts.size() < b.parts.size();
              std::vector<std::string> sa, sb;
              for (const Polytope& t : a.parts) sa.push_back(poly_signature(t));
              for (const Polytope& t : b.parts) sb.push_back(poly_signature(t));
              return sa < sb;
            });
  return out;
}

Polytope cayley(const std::vector<Polytope>& factors) {
  if (factors.empty())
    throw DomainError("empty_input", "cayley needs at least one factor");
  int m = factors[0].ambient_dim();
  for (const Polytope& f : factors)
    if (f.ambient_dim() != m)
      throw DomainError("dimension_mismatch", "cayley: ambient dims differ");
  int r = int(factors.size());
  if (r == 1) return factors[0];
  std::vector<Vec> pts;
  for (int i = 0; i < r; ++i) {
    for (const Vec& v : factors[size_t(i)].vertices()) {
      Vec p = v;
      for (int t = 0; t < r; ++t) p.push_back(Int(t == i ? 1 : 0));
      pts.push_back(std::move(p));
    }
  }
  Polytope raw = Polytope::hull(pts);
  GORPOLY_CHECK(!raw.full_dim(), "Cayley embedding lies on a hyperplane");
  Polytope result = raw.chart_polytope();
  // Dimension law: dim = dim(sum of factors) + r - 1.
  Polytope sum = factors[0];
  for (int i = 1; i < r; ++i) sum = minkowski_sum(sum, factors[size_t(i)]);
  GORPOLY_CHECK(result.ambient_dim() == sum.affine_dim() + r - 1,
                "Cayley dimension law violated");
  return result;
}

Polytope pyramid(const Polytope& p, int r) {
  if (r < 1) throw DomainError("bad_input", "pyramid needs r >= 1");
  if (!p.full_dim())
    throw DomainError("not_full_dimensional", "pyramid needs a full-dim base");
  int n = p.ambient_dim();
  std::vector<Vec> pts;
  for (const Vec& v : p.vertices()) {
    Vec w = v;
    for (int t = 0; t < r; ++t) w.push_back(Int(0));
    pts.push_back(std::move(w));
  }
  for (int i = 0; i < r; ++i) {
    Vec apex(size_t(n + r), Int(0));
    apex[size_t(n + i)] = 1;
    pts.push_back(std::move(apex));
  }
  Polytope out = Polytope::hull(pts);
  GORPOLY_CHECK(out.full_dim(), "pyramid must be full-dimensional");
  return out;
}

Polytope theta(int d) {
  if (d < 1) throw DomainError("bad_input", "theta needs d >= 1");
  std::vector<Polytope> factors;
  for (int i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      Vec zero(size_t(d), Int(0));
      Vec e(size_t(d), Int(0));
      e[size_t(i)] = s;
      factors.push_back(Polytope::hull({zero, e}));
    }
  }
  Polytope out = cayley(factors);
  GORPOLY_CHECK(out.ambient_dim() == 3 * d - 1, "theta dimension law");
  return out;
}

Polytope two_s3() {
  return Polytope::hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
}

}  // namespace gorpoly
