#include "gorpoly/ehrhart.hpp"

#include <algorithm>

namespace gorpoly {

namespace {

// Direct scans become infeasible above this dimension; pyramids are peeled.
constexpr int kScanDimMax = 5;

const Polytope& intrinsic(const Polytope& p) {
  return p.full_dim() ? p : p.chart_polytope();
}

std::vector<Int> counts_upto_impl(const Polytope& poly, long kmax, bool interior) {
  const Polytope& p = intrinsic(poly);
  std::vector<Int> out(size_t(kmax) + 1);
  if (p.affine_dim() == 0) {
    for (long k = 0; k <= kmax; ++k) out[size_t(k)] = (interior && k == 0) ? 0 : 1;
    return out;
  }
  PyramidPeel peel{0, p};
  if (p.affine_dim() > kScanDimMax) peel = peel_pyramids(p);
  // Scan the core directly.
  std::vector<Int> cur(size_t(kmax) + 1);
  cur[0] = interior ? 0 : 1;
  if (peel.core.affine_dim() == 0) {
    for (long k = 1; k <= kmax; ++k) cur[size_t(k)] = 1;
  } else {
    for (long k = 1; k <= kmax; ++k) {
      Polytope d = peel.core.dilate(k);
      cur[size_t(k)] = interior ? d.interior_lattice_point_count()
                                : d.lattice_point_count();
    }
  }
  // Fold back up: each pyramid level is a prefix-sum transform.
  for (int lev = 0; lev < peel.folds; ++lev) {
    std::vector<Int> next(size_t(kmax) + 1);
    if (interior) {
      // |int(k Pyr Q)| = sum_{j=1}^{k-1} |int(j Q)|
      next[0] = 0;
      Int acc = 0;
      for (long k = 1; k <= kmax; ++k) {
        next[size_t(k)] = acc;  // sum of cur[1..k-1]
        acc += cur[size_t(k)];
      }
    } else {
      // |k Pyr Q| = sum_{j=0}^{k} |j Q|
      Int acc = 0;
      for (long k = 0; k <= kmax; ++k) {
        acc += cur[size_t(k)];
        next[size_t(k)] = acc;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<Int> ehrhart_counts_upto(const Polytope& p, long kmax) {
  return counts_upto_impl(p, kmax, false);
}

std::vector<Int> interior_counts_upto(const Polytope& p, long kmax) {
  return counts_upto_impl(p, kmax, true);
}

Int ehrhart_count(const Polytope& p, long k) {
  if (k < 0) throw DomainError("bad_dilation", "ehrhart_count needs k >= 0");
  if (k == 0) return 1;
  const Polytope& q = intrinsic(p);
  if (q.affine_dim() <= kScanDimMax)
    return q.affine_dim() == 0 ? Int(1) : q.dilate(k).lattice_point_count();
  return ehrhart_counts_upto(q, k).back();
}

Int interior_count(const Polytope& p, long k) {
  if (k < 0) throw DomainError("bad_dilation", "interior_count needs k >= 0");
  if (k == 0) return 0;
  const Polytope& q = intrinsic(p);
  if (q.affine_dim() <= kScanDimMax)
    return q.affine_dim() == 0 ? Int(1)
                               : q.dilate(k).interior_lattice_point_count();
  return interior_counts_upto(q, k).back();
}

HStar h_star(const Polytope& p) {
  const Polytope& q = intrinsic(p);
  int n = q.affine_dim();
  std::vector<Int> counts = ehrhart_counts_upto(q, n);
  HStar hs;
  hs.dim = n;
  hs.h.assign(size_t(n) + 1, Int(0));
  for (int j = 0; j <= n; ++j) {
    Int v = 0;
    for (int i = 0; i <= j; ++i) {
      Int term = binomial(Int(n + 1), i) * counts[size_t(j - i)];
      v += (i % 2 == 0) ? term : -term;
    }
    hs.h[size_t(j)] = v;
    GORPOLY_CHECK(v >= 0, "h* coefficient must be nonnegative");
  }
  GORPOLY_CHECK(hs.h[0] == 1, "h*_0 must be 1");
  hs.degree = 0;
  hs.nv = 0;
  for (int j = 0; j <= n; ++j) {
    if (hs.h[size_t(j)] != 0) hs.degree = j;
    hs.nv += hs.h[size_t(j)];
  }
  GORPOLY_CHECK(hs.nv == q.normalized_volume(),
                "h* sum must equal normalized volume");
  return hs;
}

bool is_palindromic(const HStar& hs) {
  for (int j = 0; j <= hs.degree; ++j)
    if (hs.h[size_t(j)] != hs.h[size_t(hs.degree - j)]) return false;
  return true;
}

Int ehrhart_eval(const HStar& hs, const Int& t) {
  Int v = 0;
  for (int j = 0; j <= hs.dim; ++j) {
    if (hs.h[size_t(j)] == 0) continue;
    v += hs.h[size_t(j)] * binomial(t + hs.dim - j, hs.dim);
  }
  return v;
}

LowDegreeStructure degree_le1_structure(const Polytope& poly) {
  const Polytope& p = intrinsic(poly);
  HStar hs = h_star(p);
  if (hs.degree > 1)
    throw DomainError("degree_too_large",
                      "structure theorem applies to degree <= 1 only");
  int n = p.affine_dim();
  if (hs.nv == 1) return {LowDegreeKind::BasicSimplex, {}};
  if (n == 1) {
    // A segment of length L >= 2 is the Lawrence prism with heights (L).
    return {LowDegreeKind::LawrencePrism, {hs.nv}};
  }

  // Candidate prism directions: primitive edge directions.
  std::vector<Vec> dirs;
  for (const Face& f : p.faces()) {
    if (f.dim != 1) continue;
    Vec d = primitivize(vsub(p.vertices()[f.verts.back()], p.vertices()[f.verts.front()]));
    // Normalize sign so each direction appears once.
    for (const Int& x : d) {
      if (x > 0) break;
      if (x < 0) {
        d = vscale(Int(-1), d);
        break;
      }
    }
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  for (const Vec& u : dirs) {
    // Quotient map Z^n -> Z^n / Zu: rows 1..n-1 of a unimodular U with
    // U u = e_1 (from the HNF of the column u).
    HnfResult hr = hermite_normal_form(Mat::from_cols({u}));
    GORPOLY_CHECK(hr.h(0, 0) == 1, "edge direction not primitive");
    auto project = [&](const Vec& x) {
      Vec full = hr.u.mul_vec(x);
      return Vec(full.begin() + 1, full.end());
    };
    std::map<Vec, std::vector<Vec>, VecLess> fibers;
    for (const Vec& v : p.vertices()) fibers[project(v)].push_back(v);
    std::vector<Vec> proj_pts;
    for (auto& [img, grp] : fibers) proj_pts.push_back(img);
    Polytope q = Polytope::hull(proj_pts);
    if (q.affine_dim() != n - 1) continue;
    const Polytope& qf = intrinsic(q);
    if (qf.vertex_count() != n || qf.normalized_volume() != 1) continue;
    // Every projected vertex must be a vertex of the base simplex.
    if (int(fibers.size()) != n) continue;
    bool ok = true;
    std::vector<Int> heights;
    for (auto& [img, grp] : fibers) {
      if (grp.size() > 2) {
        ok = false;
        break;
      }
      if (grp.size() == 1) {
        heights.push_back(Int(0));
      } else {
        Vec d = vsub(grp[1], grp[0]);
        // Same fiber => difference is an integer multiple of u.
        Int theta = 0;
        for (size_t i = 0; i < d.size(); ++i)
          if (u[i] != 0) {
            theta = d[i] / u[i];
            break;
          }
        if (vscale(theta, u) != d && vscale(-theta, u) != d) {
          ok = false;
          break;
        }
        heights.push_back(abs_int(theta));
      }
    }
    if (!ok) continue;
    std::sort(heights.rbegin(), heights.rend());
    Int total = 0;
    for (const Int& t : heights) total += t;
    GORPOLY_CHECK(total == hs.nv && hs.h[1] == total - 1,
                  "Lawrence prism heights inconsistent with h*");
    return {LowDegreeKind::LawrencePrism, heights};
  }

  // Must be the exceptional simplex; verify by normal form.
  std::vector<Vec> model;
  model.push_back(Vec(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = (i < 2) ? 2 : 1;
    model.push_back(e);
  }
  GORPOLY_CHECK(are_isomorphic(p, Polytope::hull(model)),
                "degree-1 polytope is neither prism nor exceptional simplex");
  return {LowDegreeKind::ExceptionalSimplex, {}};
}

}  // namespace gorpoly
