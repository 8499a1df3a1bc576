#include "gorpoly/semigroup.hpp"

#include "gorpoly/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gorpoly {

namespace {

const Polytope& intrinsic(const Polytope& p) {
  return p.full_dim() ? p : p.chart_polytope();
}

std::vector<Vec> slice_points(const Polytope& p, long k) {
  if (k == 0) return {Vec(size_t(p.ambient_dim()), Int(0))};
  return p.dilate(k).lattice_points();
}

}  // namespace

GradedGenerators irreducible_generators(const Polytope& poly, long k_max) {
  if (k_max < 2) throw DomainError("bad_input", "k_max must be >= 2");
  const Polytope& p = intrinsic(poly);
  std::vector<std::set<Vec, VecLess>> slice(size_t(k_max) + 1);
  for (long k = 0; k <= k_max; ++k) {
    auto pts = slice_points(p, k);
    slice[size_t(k)] = {pts.begin(), pts.end()};
  }

  GradedGenerators out;
  out.i_poly.assign(size_t(k_max) + 1, Int(0));
  out.saturation_checked_to = k_max;
  for (long k = 1; k <= k_max; ++k) {
    for (const Vec& m : slice[size_t(k)]) {
      bool reducible = false;
      for (long i = 1; i + i <= k && !reducible; ++i) {
        for (const Vec& y : slice[size_t(i)]) {
          if (slice[size_t(k - i)].count(vsub(m, y))) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) {
        out.gens.emplace_back(m, k);
        out.i_poly[size_t(k)] += 1;
      }
    }
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second < b.second;
              return VecLess{}(a.first, b.first);
            });

  // Saturation: every point of degree <= k_max is a nonnegative integer
  // combination of the generators.
  std::vector<std::set<Vec, VecLess>> generated(size_t(k_max) + 1);
  generated[0].insert(Vec(size_t(p.ambient_dim()), Int(0)));
  for (long k = 1; k <= k_max; ++k) {
    for (const auto& [gm, gk] : out.gens) {
      if (gk > k) break;
      for (const Vec& y : generated[size_t(k - gk)])
        generated[size_t(k)].insert(vadd(y, gm));
    }
    for (const Vec& m : slice[size_t(k)]) {
      if (!generated[size_t(k)].count(m))
        throw DomainError("saturation_failed",
                          "point " + vec_to_string(m) + " of degree " +
                              std::to_string(k) +
                              " is not generated; raise k_max");
    }
  }
  return out;
}

std::vector<std::vector<int>> fiber_factorizations(const Polytope& poly,
                                                   const GradedGenerators& gens,
                                                   const Vec& m, long b,
                                                   long cap) {
  const Polytope& p = intrinsic(poly);
  // Remainder of degree t must lie in t*P.
  auto in_dilate = [&](const Vec& rest, long t) {
    if (t == 0) return is_zero(rest);
    for (const Facet& f : p.facets())
      if (dot(f.a, rest) < t * f.c) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  int ng = int(gens.gens.size());
  std::vector<int> cur;
  std::function<void(int, const Vec&, long)> rec = [&](int i, const Vec& rest,
                                                       long deg) {
    if (long(out.size()) > cap)
      throw DomainError("fiber_cap_exceeded",
                        "factorization enumeration exceeded the cap");
    if (deg == 0) {
      if (is_zero(rest)) out.push_back(cur);
      return;
    }
    if (i == ng || !in_dilate(rest, deg)) return;
    const auto& [gm, gk] = gens.gens[size_t(i)];
    // Without this generator:
    rec(i + 1, rest, deg);
    // With one more copy (recurse at the same index to allow powers):
    if (gk <= deg) {
      cur.push_back(i);
      rec(i, vsub(rest, gm), deg - gk);
      cur.pop_back();
    }
  };
  rec(0, m, b);
  for (auto& f : out) std::sort(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Binomial::support() const {
  std::set<int> s(lhs.begin(), lhs.end());
  s.insert(rhs.begin(), rhs.end());
  return {s.begin(), s.end()};
}

std::string binomial_to_string(const Binomial& b) {
  auto side = [](const std::vector<int>& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.size();) {
      size_t j = i;
      while (j < f.size() && f[j] == f[i]) ++j;
      if (i) os << " ";
      os << "x" << (f[i] + 1);
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
    return os.str();
  };
  return side(b.lhs) + " = " + side(b.rhs);
}

Presentation minimal_relations(const Polytope& poly,
                               const GradedGenerators& gens, long deg_max) {
  const Polytope& p = intrinsic(poly);
  if (deg_max < 0) {
    GorensteinInfo info = gorenstein_index(p);
    deg_max = info.ok() ? 2 * info.index + 2 : 4;
  }
  Presentation pres;
  pres.gens = gens;
  pres.deg_max = deg_max;

  for (long b = 2; b <= deg_max + 1; ++b) {
    for (const Vec& m : slice_points(p, b)) {
      auto factorizations = fiber_factorizations(p, gens, m, b);
      if (factorizations.empty())
        throw DomainError("saturation_failed",
                          "degree-" + std::to_string(b) +
                              " point has no factorization; raise k_max");
      if (factorizations.size() == 1) continue;
      // Connected components of the fiber graph (edges join factorizations
      // sharing a generator) via union-find keyed on generators.
      int nf = int(factorizations.size());
      std::vector<int> parent(static_cast<size_t>(nf), 0);
      for (int i = 0; i < nf; ++i) parent[size_t(i)] = i;
      std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) {
          parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
          x = parent[size_t(x)];
        }
        return x;
      };
      std::map<int, int> first_with_gen;
      for (int i = 0; i < nf; ++i) {
        std::set<int> used(factorizations[size_t(i)].begin(),
                           factorizations[size_t(i)].end());
        for (int g : used) {
          auto it = first_with_gen.find(g);
          if (it == first_with_gen.end()) {
            first_with_gen[g] = i;
          } else {
            int a = find(it->second), c = find(i);
            if (a != c) parent[size_t(a)] = c;
          }
        }
      }
      std::map<int, std::vector<int>> comps;  // root -> lex-min factorization
      for (int i = 0; i < nf; ++i) {
        int root = find(i);
        auto it = comps.find(root);
        if (it == comps.end() || factorizations[size_t(i)] < it->second)
          comps[root] = factorizations[size_t(i)];
      }
      if (comps.size() < 2) continue;
      if (b == deg_max + 1)
        throw DomainError("relations_incomplete",
                          "new minimal relations appear beyond deg_max; "
                          "raise deg_max");
      std::vector<std::vector<int>> reps;
      for (auto& [root, rep] : comps) reps.push_back(rep);
      std::sort(reps.begin(), reps.end());
      // Join the components along a minimum spanning tree weighted by the
      // support size of the joined pair (ties broken lexicographically):
      // this selects support-minimal representatives, e.g. both relations
      // of conv{+-e1,+-e2} anchored at the interior-point square.
      int nc = int(reps.size());
      std::vector<std::tuple<size_t, int, int>> edges;
      for (int i = 0; i < nc; ++i) {
        for (int j = i + 1; j < nc; ++j) {
          std::set<int> sup(reps[size_t(i)].begin(), reps[size_t(i)].end());
          sup.insert(reps[size_t(j)].begin(), reps[size_t(j)].end());
          edges.emplace_back(sup.size(), i, j);
        }
      }
      std::sort(edges.begin(), edges.end());
      std::vector<int> comp_parent(static_cast<size_t>(nc), 0);
      for (int i = 0; i < nc; ++i) comp_parent[size_t(i)] = i;
      std::function<int(int)> cfind = [&](int x) {
        while (comp_parent[size_t(x)] != x) {
          comp_parent[size_t(x)] = comp_parent[size_t(comp_parent[size_t(x)])];
          x = comp_parent[size_t(x)];
        }
        return x;
      };
      for (const auto& [w, i, j] : edges) {
        int a = cfind(i), c = cfind(j);
        if (a == c) continue;
        comp_parent[size_t(a)] = c;
        Binomial bin;
        bin.lhs = reps[size_t(i)];
        bin.rhs = reps[size_t(j)];
        bin.degree = b;
        // Exact lattice validity.
        Vec sl(size_t(p.ambient_dim()), Int(0)), sr = sl;
        for (int g : bin.lhs) sl = vadd(sl, gens.gens[size_t(g)].first);
        for (int g : bin.rhs) sr = vadd(sr, gens.gens[size_t(g)].first);
        GORPOLY_CHECK(sl == sr && sl == m, "binomial sides must agree");
        pres.relations.push_back(std::move(bin));
      }
    }
  }
  std::sort(pres.relations.begin(), pres.relations.end(),
            [](const Binomial& x, const Binomial& y) {
              if (x.degree != y.degree) return x.degree < y.degree;
              if (x.lhs != y.lhs) return x.lhs < y.lhs;
              return x.rhs < y.rhs;
            });
  return pres;
}

ArtinianProfile artinian_profile(const Polytope& poly,
                                 const GradedGenerators& gens) {
  const Polytope& p = intrinsic(poly);
  HStar hs = h_star(p);
  if (hs.degree != 2)
    throw DomainError("not_degree_two",
                      "artinian_profile requires Gorenstein degree 2");
  require_gorenstein(p);
  int n = p.ambient_dim();
  ArtinianProfile prof;
  prof.g_vector = gens.i_poly;
  GORPOLY_CHECK(prof.g_vector.size() >= 2 && prof.g_vector[1] >= n + 1,
                "I(P,1) must be at least n+1");
  prof.g_vector[1] -= n + 1;
  while (prof.g_vector.size() > 1 && prof.g_vector.back() == 0)
    prof.g_vector.pop_back();
  prof.a = hs.h[1];
  if (prof.a == 0)
    prof.case_tag = "K[X]/(X^2)";
  else if (prof.a == 1)
    prof.case_tag = "K[X]/(X^3)";
  else if (prof.a == 2)
    prof.case_tag = "K[X,Y]/(XY, X^2 - lambda*Y^2)";
  else
    prof.case_tag = "none";

  if (prof.a <= 2) {
    // The three shapes are certified by the relation degrees.
    Presentation pres = minimal_relations(p, gens);
    std::vector<long> degs;
    for (const Binomial& b : pres.relations) degs.push_back(b.degree);
    std::sort(degs.begin(), degs.end());
    bool match = (prof.a == 0 && degs == std::vector<long>{4}) ||
                 (prof.a == 1 && degs == std::vector<long>{3}) ||
                 (prof.a == 2 && degs == std::vector<long>{2, 2});
    GORPOLY_CHECK(match, "relation degrees do not match the Artinian shape");
  }
  return prof;
}

bool pyramid_by_relations(const Presentation& pres) {
  std::vector<bool> used(pres.gens.gens.size(), false);
  for (const Binomial& b : pres.relations)
    for (int g : b.support()) used[size_t(g)] = true;
  for (bool u : used)
    if (!u) return true;
  return false;
}

}  // namespace gorpoly
