#include "gorpoly/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gorpoly {

// ---------------------------------------------------------------------------
// AffineChart
// ---------------------------------------------------------------------------

std::optional<Vec> chart_try_to_chart(const AffineChart& ch, const Vec& point) {
  int r = ch.rank();
  Vec d = vsub(point, ch.origin);
  if (r == 0) return is_zero(d) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Mat b = Mat::from_cols(ch.basis);
  auto sol = solve_rect(b, d);
  if (!sol) return std::nullopt;
  Vec x(r);
  for (int i = 0; i < r; ++i) {
    if (!(*sol)[i].is_integer()) return std::nullopt;
    x[i] = (*sol)[i].num;
  }
  // solve_rect only guarantees consistency; verify exactly.
  if (b.mul_vec(x) != d) return std::nullopt;
  return x;
}

Vec AffineChart::to_chart(const Vec& point) const {
  auto x = chart_try_to_chart(*this, point);
  GORPOLY_CHECK(x.has_value(), "point is not on the chart lattice");
  return *x;
}

Vec AffineChart::from_chart(const Vec& coords) const {
  GORPOLY_CHECK(int(coords.size()) == rank(), "chart coords size mismatch");
  Vec p = origin;
  for (int j = 0; j < rank(); ++j)
    for (size_t i = 0; i < p.size(); ++i) p[i] += coords[j] * basis[j][i];
  return p;
}

// ---------------------------------------------------------------------------
// Hull
// ---------------------------------------------------------------------------

namespace {

// Primitive inward normal of the hyperplane spanned by `pts` (size D), or
// nullopt when the points are affinely dependent or the hyperplane is not
// supporting. `all` are the hull input points.
std::optional<std::pair<Vec, Int>> supporting_hyperplane(
    const std::vector<Vec>& pts, const std::vector<Vec>& all, int d) {
  // Normal via cofactor expansion of the (d-1) x d matrix of differences.
  Mat diffs(d - 1, d);
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j < d; ++j) diffs(i, j) = pts[i + 1][j] - pts[0][j];
  Vec a(d);
  bool nonzero = false;
  for (int j = 0; j < d; ++j) {
    Mat minor(d - 1, d - 1);
    for (int i = 0; i < d - 1; ++i) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor(i, cc++) = diffs(i, c);
      }
    }
    Int m = det(minor);
    a[j] = (j % 2 == 0) ? m : Int(-m);
    if (a[j] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  a = primitivize(a);
  Int c = dot(a, pts[0]);
  bool above = false, below = false;
  for (const Vec& p : all) {
    int s = sign(dot(a, p) - c);
    if (s > 0) above = true;
    if (s < 0) below = true;
    if (above && below) return std::nullopt;
  }
  if (below) {
    for (Int& x : a) x = -x;
    c = -c;
  }
  return std::make_pair(a, c);
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vec>& points) {
  if (points.empty()) throw DomainError("empty_input", "hull of empty point set");
  int d = int(points[0].size());
  for (const Vec& p : points)
    if (int(p.size()) != d)
      throw DomainError("dimension_mismatch", "points of mixed dimension");

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), VecLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.ambient_dim_ = d;

  std::vector<Vec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
  int adim = diffs.empty() ? 0 : rank(Mat::from_rows(diffs));
  poly.affine_dim_ = adim;

  if (adim < d) {
    AffineChart chart;
    chart.origin = pts[0];  // lex-min point: deterministic
    chart.basis = saturated_span_basis(diffs, d);
    GORPOLY_CHECK(int(chart.basis.size()) == adim, "chart rank mismatch");
    std::vector<Vec> coords;
    coords.reserve(pts.size());
    for (const Vec& p : pts) coords.push_back(chart.to_chart(p));
    Polytope inner = adim == 0 ? Polytope() : Polytope::hull(coords);
    if (adim == 0) {
      inner.ambient_dim_ = 0;
      inner.affine_dim_ = 0;
      inner.vertices_ = {Vec{}};
    }
    for (const Vec& v : inner.vertices_)
      poly.vertices_.push_back(chart.from_chart(v));
    std::sort(poly.vertices_.begin(), poly.vertices_.end(), VecLess{});
    poly.chart_ = std::move(chart);
    poly.chart_poly_ = std::make_shared<const Polytope>(std::move(inner));
    return poly;
  }

  // Full-dimensional: scan d-subsets for supporting hyperplanes.
  int m = int(pts.size());
  {
    double logc = 0;
    for (int i = 0; i < d; ++i) logc += std::log2(double(m - i) / (i + 1));
    GORPOLY_CHECK(logc < 24, "hull input too large for subset enumeration");
  }
  std::map<Vec, Int, VecLess> facet_map;
  std::vector<int> idx(d);
  std::vector<Vec> subset(d);
  // Iterative combination enumeration.
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < d; ++i) subset[i] = pts[idx[i]];
    auto hp = supporting_hyperplane(subset, pts, d);
    if (hp) facet_map.emplace(hp->first, hp->second);
    int i = d - 1;
    while (i >= 0 && idx[i] == m - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  GORPOLY_CHECK(int(facet_map.size()) >= d + 1, "too few facets for full dim");

  std::vector<Facet> facets;
  for (auto& [a, c] : facet_map) facets.push_back(Facet{a, c, {}});

  // Vertices: points whose active facet normals span R^d.
  std::vector<Vec> verts;
  for (const Vec& p : pts) {
    std::vector<Vec> active;
    for (const Facet& f : facets)
      if (dot(f.a, p) == f.c) active.push_back(f.a);
    if (int(active.size()) >= d && rank(Mat::from_rows(active)) == d)
      verts.push_back(p);
  }
  std::sort(verts.begin(), verts.end(), VecLess{});
  for (Facet& f : facets)
    for (int i = 0; i < int(verts.size()); ++i)
      if (dot(f.a, verts[i]) == f.c) f.verts.push_back(i);
  poly.vertices_ = std::move(verts);
  poly.facets_ = std::move(facets);
  GORPOLY_CHECK(int(poly.vertices_.size()) >= d + 1, "too few vertices");
  return poly;
}

const AffineChart& Polytope::chart() const {
  GORPOLY_CHECK(chart_.has_value(), "chart only exists for non-full-dim polytopes");
  return *chart_;
}

const Polytope& Polytope::chart_polytope() const {
  GORPOLY_CHECK(chart_poly_.has_value(), "chart polytope only for non-full-dim");
  return **chart_poly_;
}

Polytope Polytope::dilate(const Int& k) const {
  if (k <= 0) throw DomainError("bad_dilation", "dilation factor must be positive");
  if (!full_dim()) {
    std::vector<Vec> vs;
    for (const Vec& v : vertices_) vs.push_back(vscale(k, v));
    return Polytope::hull(vs);
  }
  Polytope q = *this;
  for (Vec& v : q.vertices_)
    for (Int& x : v) x *= k;
  for (Facet& f : q.facets_) f.c *= k;
  return q;
}

Polytope Polytope::translate(const Vec& t) const {
  GORPOLY_CHECK(int(t.size()) == ambient_dim_, "translate: dim mismatch");
  Polytope q = *this;
  for (Vec& v : q.vertices_) v = vadd(v, t);
  for (Facet& f : q.facets_) f.c += dot(f.a, t);
  if (q.chart_) q.chart_->origin = vadd(q.chart_->origin, t);
  return q;
}

Polytope Polytope::transform(const Mat& u, const Vec& t) const {
  GORPOLY_CHECK(abs_int(det(u)) == 1, "transform requires a unimodular matrix");
  std::vector<Vec> vs;
  for (const Vec& v : vertices_) vs.push_back(vadd(u.mul_vec(v), t));
  return Polytope::hull(vs);
}

Int Polytope::facet_distance(int facet_index, const Vec& x) const {
  const Facet& f = facets_.at(facet_index);
  return dot(f.a, x) - f.c;
}

bool Polytope::contains(const Vec& point) const {
  if (!full_dim()) {
    auto x = chart_try_to_chart(*chart_, point);
    return x && chart_polytope().contains(*x);
  }
  if (ambient_dim_ == 0) return point.empty();
  for (const Facet& f : facets_)
    if (dot(f.a, point) < f.c) return false;
  return true;
}

bool Polytope::strictly_contains(const Vec& point) const {
  if (!full_dim()) {
    auto x = chart_try_to_chart(*chart_, point);
    return x && chart_polytope().strictly_contains(*x);
  }
  if (ambient_dim_ == 0) return point.empty();
  for (const Facet& f : facets_)
    if (dot(f.a, point) <= f.c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Lattice point enumeration (pruned DFS over coordinates)
// ---------------------------------------------------------------------------

namespace {

void enumerate_points(const Polytope& p, bool strict, std::vector<Vec>& out) {
  int d = p.ambient_dim();
  if (d == 0) {
    if (!strict || p.affine_dim() == 0) out.push_back(Vec{});
    return;
  }
  const auto& verts = p.vertices();
  Vec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = verts[0][j];
    hi[j] = verts[0][j];
    for (const Vec& v : verts) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  const auto& facets = p.facets();
  int nf = int(facets.size());
  // maxtail[f][i] = max over boxes of sum_{j >= i} a_f[j] * x_j.
  std::vector<std::vector<Int>> maxtail(nf, std::vector<Int>(d + 1, Int(0)));
  for (int f = 0; f < nf; ++f)
    for (int i = d - 1; i >= 0; --i) {
      const Int& a = facets[f].a[i];
      Int best = a >= 0 ? a * hi[i] : a * lo[i];
      maxtail[f][i] = maxtail[f][i + 1] + best;
    }
  Vec x(d);
  std::vector<Int> partial(nf, Int(0));
  // DFS with explicit recursion.
  std::function<void(int)> rec = [&](int i) {
    for (int f = 0; f < nf; ++f) {
      Int reach = partial[f] + maxtail[f][i];
      if (strict ? reach <= facets[f].c : reach < facets[f].c) return;
    }
    if (i == d) {
      out.push_back(x);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      for (int f = 0; f < nf; ++f) partial[f] += facets[f].a[i] * v;
      rec(i + 1);
      for (int f = 0; f < nf; ++f) partial[f] -= facets[f].a[i] * v;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Vec> Polytope::lattice_points() const {
  if (!full_dim()) {
    std::vector<Vec> inner = chart_polytope().lattice_points();
    std::vector<Vec> out;
    out.reserve(inner.size());
    for (const Vec& x : inner) out.push_back(chart_->from_chart(x));
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
  }
  std::vector<Vec> out;
  enumerate_points(*this, false, out);
  return out;  // DFS order is lexicographic already
}

std::vector<Vec> Polytope::interior_lattice_points() const {
  if (!full_dim()) {
    std::vector<Vec> inner = chart_polytope().interior_lattice_points();
    std::vector<Vec> out;
    out.reserve(inner.size());
    for (const Vec& x : inner) out.push_back(chart_->from_chart(x));
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
  }
  std::vector<Vec> out;
  enumerate_points(*this, true, out);
  return out;
}

Int Polytope::lattice_point_count() const { return Int(lattice_points().size()); }
Int Polytope::interior_lattice_point_count() const {
  return Int(interior_lattice_points().size());
}

// ---------------------------------------------------------------------------
// Normalized volume (placing triangulation from the first vertex)
// ---------------------------------------------------------------------------

Int Polytope::normalized_volume() const {
  if (affine_dim_ == 0) return 1;
  if (!full_dim()) return chart_polytope().normalized_volume();
  if (ambient_dim_ == 1) return vertices_.back()[0] - vertices_.front()[0];
  const Vec& v0 = vertices_.front();
  Int total = 0;
  for (size_t j = 0; j < facets_.size(); ++j) {
    Int dist = dot(facets_[j].a, v0) - facets_[j].c;
    if (dist == 0) continue;
    GORPOLY_CHECK(dist > 0, "vertex below facet");
    std::vector<Vec> fverts;
    for (int vi : facets_[j].verts) fverts.push_back(vertices_[vi]);
    total += dist * Polytope::hull(fverts).normalized_volume();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Face lattice
// ---------------------------------------------------------------------------

std::vector<Face> Polytope::faces() const {
  if (!full_dim())
    throw DomainError("not_full_dimensional",
                      "face lattice requires a full-dimensional polytope");
  int nv = vertex_count();
  GORPOLY_CHECK(nv <= 64, "too many vertices for mask-based face lattice");
  int nf = int(facets_.size());
  std::vector<uint64_t> fmask(nf, 0);
  for (int j = 0; j < nf; ++j)
    for (int vi : facets_[j].verts) fmask[j] |= (uint64_t(1) << vi);
  uint64_t fullmask = nv == 64 ? ~uint64_t(0) : ((uint64_t(1) << nv) - 1);

  auto closure = [&](uint64_t raw) -> std::pair<uint64_t, std::vector<int>> {
    std::vector<int> fs;
    uint64_t cm = fullmask;
    for (int j = 0; j < nf; ++j)
      if ((fmask[j] & raw) == raw) {
        fs.push_back(j);
        cm &= fmask[j];
      }
    if (fs.empty()) cm = fullmask;
    return {cm, fs};
  };

  std::map<uint64_t, Face> seen;
  std::vector<uint64_t> queue;
  Face top;
  top.vmask = fullmask;
  for (int i = 0; i < nv; ++i) top.verts.push_back(i);
  top.dim = ambient_dim_;
  seen[fullmask] = top;
  queue.push_back(fullmask);
  while (!queue.empty()) {
    uint64_t cur = queue.back();
    queue.pop_back();
    std::vector<int> curfs = seen[cur].facets;
    for (int j = 0; j < nf; ++j) {
      if ((fmask[j] & cur) == cur) continue;  // facet contains this face
      uint64_t raw = cur & fmask[j];
      if (raw == 0) continue;
      auto [cm, fs] = closure(raw);
      if (seen.count(cm)) continue;
      Face f;
      f.vmask = cm;
      for (int i = 0; i < nv; ++i)
        if (cm & (uint64_t(1) << i)) f.verts.push_back(i);
      f.facets = fs;
      std::vector<Vec> diffs;
      for (size_t t = 1; t < f.verts.size(); ++t)
        diffs.push_back(vsub(vertices_[f.verts[t]], vertices_[f.verts[0]]));
      f.dim = diffs.empty() ? 0 : rank(Mat::from_rows(diffs));
      seen[cm] = f;
      queue.push_back(cm);
    }
  }
  std::vector<Face> out;
  for (auto& [mask, f] : seen) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vmask < b.vmask;
  });
  return out;
}

std::vector<Int> Polytope::f_vector() const {
  std::vector<Face> fs = faces();
  std::vector<Int> f(size_t(ambient_dim_) + 2, Int(0));
  f[0] = 1;                         // empty face
  f[size_t(ambient_dim_) + 1] = 1;  // the polytope itself
  for (const Face& face : fs)
    if (face.dim < ambient_dim_) f[size_t(face.dim) + 1] += 1;
  return f;
}

Polytope Polytope::face_polytope(const Face& f) const {
  std::vector<Vec> pts;
  for (int vi : f.verts) pts.push_back(vertices_[vi]);
  Polytope sub = Polytope::hull(pts);
  if (sub.full_dim()) return sub;
  return sub.chart_polytope();
}

Int Polytope::face_volume(const Face& f) const {
  if (f.dim == 0) return 1;
  return face_polytope(f).normalized_volume();
}

Int Polytope::face_interior_count(const Face& f) const {
  if (f.dim == 0) return 1;
  return face_polytope(f).interior_lattice_point_count();
}

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

bool NormalFormKey::operator<(const NormalFormKey& o) const {
  if (dim != o.dim) return dim < o.dim;
  if (nverts != o.nverts) return nverts < o.nverts;
  if (data.size() != o.data.size()) return data.size() < o.data.size();
  for (size_t i = 0; i < data.size(); ++i)
    if (data[i] != o.data[i]) return data[i] < o.data[i];
  return false;
}

std::string NormalFormKey::to_string() const {
  std::ostringstream os;
  os << "d" << dim << "v" << nverts << ":";
  for (size_t i = 0; i < data.size(); ++i) {
    if (i) os << ",";
    os << data[i];
  }
  return os.str();
}

namespace {

struct NFState {
  std::vector<Vec> rem;  // transformed difference vectors not yet placed
  int npiv = 0;
};

// Places rem[t] as the next HNF column; returns the canonical column and the
// successor state (same row operations applied to every remaining vector).
std::pair<Vec, NFState> nf_extend(const NFState& s, size_t t, int n) {
  NFState ns = s;
  Vec v = ns.rem[t];
  ns.rem.erase(ns.rem.begin() + long(t));
  int p = ns.npiv;
  auto apply_swap = [&](int i, int j) {
    std::swap(v[i], v[j]);
    for (Vec& w : ns.rem) std::swap(w[i], w[j]);
  };
  auto apply_combine = [&](int i, int j, const Int& x, const Int& y,
                           const Int& u2, const Int& v2) {
    Int a = v[i], b = v[j];
    v[i] = x * a + y * b;
    v[j] = u2 * a + v2 * b;
    for (Vec& w : ns.rem) {
      Int wa = w[i], wb = w[j];
      w[i] = x * wa + y * wb;
      w[j] = u2 * wa + v2 * wb;
    }
  };
  if (p < n) {
    for (int i = p + 1; i < n; ++i) {
      if (v[i] == 0) continue;
      if (v[p] == 0) {
        apply_swap(p, i);
        continue;
      }
      XGcd g = xgcd(v[p], v[i]);
      Int a = v[p] / g.g, b = v[i] / g.g;
      apply_combine(p, i, g.x, g.y, -b, a);
    }
    if (v[p] != 0) {
      if (v[p] < 0) {
        v[p] = -v[p];
        for (Vec& w : ns.rem) w[p] = -w[p];
      }
      for (int i = 0; i < p; ++i) {
        Int q = floor_div(v[i], v[p]);
        if (q != 0) {
          v[i] -= q * v[p];
          for (Vec& w : ns.rem) w[i] -= q * w[p];
        }
      }
      ns.npiv = p + 1;
    }
  }
  return {v, ns};
}

int cmp_vec(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Dedup key for branch states: the multiset of remaining transformed vectors.
std::vector<Int> state_key(const NFState& s) {
  std::vector<Vec> sorted = s.rem;
  std::sort(sorted.begin(), sorted.end(), VecLess{});
  std::vector<Int> flat;
  for (const Vec& w : sorted) flat.insert(flat.end(), w.begin(), w.end());
  return flat;
}

}  // namespace

NormalFormKey Polytope::normal_form() const {
  if (!full_dim()) return chart_polytope().normal_form();
  int n = ambient_dim_;
  int k = vertex_count();
  NormalFormKey key;
  key.dim = n;
  key.nverts = k;
  if (k == 1) return key;

  // Isomorphism-invariant base-vertex selection: minimize (facet degree,
  // sorted multiset of incident facet volumes).
  std::vector<Int> facet_vol(facets_.size());
  for (size_t j = 0; j < facets_.size(); ++j) {
    std::vector<Vec> fverts;
    for (int vi : facets_[j].verts) fverts.push_back(vertices_[vi]);
    facet_vol[j] = Polytope::hull(fverts).normalized_volume();
  }
  std::vector<std::vector<Int>> inv(k);
  for (int vi = 0; vi < k; ++vi) {
    std::vector<Int> vols;
    for (size_t j = 0; j < facets_.size(); ++j)
      if (std::binary_search(facets_[j].verts.begin(), facets_[j].verts.end(), vi))
        vols.push_back(facet_vol[j]);
    std::sort(vols.begin(), vols.end());
    inv[vi].push_back(Int(vols.size()));
    inv[vi].insert(inv[vi].end(), vols.begin(), vols.end());
  }
  std::vector<int> base_candidates;
  for (int vi = 0; vi < k; ++vi) {
    if (base_candidates.empty() || inv[vi] < inv[base_candidates[0]])
      base_candidates = {vi};
    else if (inv[vi] == inv[base_candidates[0]])
      base_candidates.push_back(vi);
  }

  std::optional<std::vector<Vec>> best;  // k-1 canonical columns
  for (int v0 : base_candidates) {
    NFState init;
    for (int vi = 0; vi < k; ++vi)
      if (vi != v0) init.rem.push_back(vsub(vertices_[vi], vertices_[v0]));
    std::vector<NFState> states = {init};
    std::vector<Vec> cols;
    bool alive = true, strictly_better = false;
    for (int step = 0; step < k - 1 && alive; ++step) {
      std::optional<Vec> min_col;
      std::vector<NFState> next;
      std::set<std::vector<Int>, std::less<>> next_keys;
      for (const NFState& s : states) {
        for (size_t t = 0; t < s.rem.size(); ++t) {
          auto [col, ns] = nf_extend(s, t, n);
          int c = min_col ? cmp_vec(col, *min_col) : -1;
          if (c < 0) {
            min_col = col;
            next.clear();
            next_keys.clear();
          }
          if (c <= 0) {
            auto sk = state_key(ns);
            if (next_keys.insert(sk).second) next.push_back(std::move(ns));
          }
        }
      }
      cols.push_back(*min_col);
      states = std::move(next);
      if (best && !strictly_better) {
        int c = cmp_vec(cols.back(), (*best)[step]);
        if (c > 0) alive = false;
        if (c < 0) strictly_better = true;
      }
    }
    if (alive && (!best || strictly_better)) best = cols;
  }
  GORPOLY_CHECK(best.has_value(), "normal form search produced no key");
  for (const Vec& col : *best)
    key.data.insert(key.data.end(), col.begin(), col.end());
  return key;
}

bool are_isomorphic(const Polytope& p, const Polytope& q) {
  return p.normal_form() == q.normal_form();
}

// ---------------------------------------------------------------------------
// Pyramid recognition
// ---------------------------------------------------------------------------

std::optional<PyramidSplit> pyramid_split(const Polytope& p) {
  if (!p.full_dim() || p.ambient_dim() == 0) return std::nullopt;
  std::vector<Vec> pts = p.lattice_points();
  std::optional<std::pair<Vec, int>> chosen;  // (apex, facet index)
  for (size_t j = 0; j < p.facets().size(); ++j) {
    const Vec* off = nullptr;
    Int off_dist = 0;
    bool multiple = false;
    for (const Vec& x : pts) {
      Int d = p.facet_distance(int(j), x);
      if (d > 0) {
        if (off) {
          multiple = true;
          break;
        }
        off = &x;
        off_dist = d;
      }
    }
    if (multiple || !off || off_dist != 1) continue;
    if (!chosen || VecLess{}(*off, chosen->first))
      chosen = std::make_pair(*off, int(j));
  }
  if (!chosen) return std::nullopt;
  std::vector<Vec> base_pts;
  for (const Vec& x : pts)
    if (p.facet_distance(chosen->second, x) == 0) base_pts.push_back(x);
  Polytope base_embedded = Polytope::hull(base_pts);
  GORPOLY_CHECK(base_embedded.affine_dim() == p.ambient_dim() - 1,
                "pyramid base dimension");
  // The base is never full-dimensional in the ambient space (it lies on a
  // facet hyperplane), so its chart polytope always exists.
  Polytope base = base_embedded.chart_polytope();
  return PyramidSplit{chosen->first, base, chosen->second};
}

PyramidPeel peel_pyramids(const Polytope& p) {
  PyramidPeel out{0, p};
  while (true) {
    auto split = pyramid_split(out.core);
    if (!split) break;
    out.core = split->base;
    ++out.folds;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random transforms (tests / verification sweeps)
// ---------------------------------------------------------------------------

Mat random_unimodular(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat u = Mat::identity(n);
  if (n <= 1) {
    if (n == 1 && (rng() & 1)) u(0, 0) = -1;
    return u;
  }
  int ops = 2 * n * n;
  for (int t = 0; t < ops; ++t) {
    int kind = int(rng() % 3);
    int i = int(rng() % uint64_t(n));
    int j = int(rng() % uint64_t(n - 1));
    if (j >= i) ++j;
    if (kind == 0) {
      u.add_row_multiple(i, j, (rng() & 1) ? Int(1) : Int(-1));
    } else if (kind == 1) {
      u.swap_rows(i, j);
    } else {
      u.negate_row(i);
    }
  }
  GORPOLY_CHECK(abs_int(det(u)) == 1, "random matrix not unimodular");
  return u;
}

Vec random_translation(int n, uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  Vec t(n);
  for (int i = 0; i < n; ++i)
    t[i] = Int(long(rng() % uint64_t(2 * bound + 1)) - bound);
  return t;
}

}  // namespace gorpoly
