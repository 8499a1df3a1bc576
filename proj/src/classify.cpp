#include "gorpoly/classify.hpp"

#include "gorpoly/constructions.hpp"
#include "gorpoly/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace gorpoly {

namespace {

std::string poly_desc(const Polytope& p) {
  std::string s = "conv{";
  for (size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ",";
    s += vec_to_string(p.vertices()[i]);
  }
  s += "}";
  return s;
}

// Recenter a reflexive polytope so its interior point is the origin.
Polytope recenter(const Polytope& p, const Vec& m) {
  Vec t = m;
  for (Int& x : t) x = -x;
  return p.translate(t);
}

// Polar dual of an origin-centered reflexive polytope: hull of facet normals.
Polytope polar_dual(const Polytope& p) {
  std::vector<Vec> pts;
  for (const Facet& f : p.facets()) {
    GORPOLY_CHECK(f.c == -1, "polar dual needs facets at distance 1 from 0");
    pts.push_back(f.a);
  }
  return Polytope::hull(pts);
}

}  // namespace

std::vector<Polytope> classify_reflexive_polygons() {
  std::vector<Polytope> seeds = {
      Polytope::hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}),
      Polytope::hull({{1, 0}, {0, 1}, {-1, -1}}),
  };
  std::map<NormalFormKey, Polytope> found;
  std::deque<Polytope> queue;
  auto offer = [&](const Polytope& q) {
    Vec m;
    if (q.affine_dim() != 2 || !is_reflexive(q, &m)) return;
    Polytope c = recenter(q, m);
    NormalFormKey key = c.normal_form();
    if (found.count(key)) return;
    found.emplace(key, c);
    queue.push_back(c);
    if (found.size() > 100)
      throw InternalError("reflexive polygon closure exceeded 100 classes");
  };
  for (const Polytope& s : seeds) offer(s);
  while (!queue.empty()) {
    Polytope p = queue.front();
    queue.pop_front();
    offer(polar_dual(p));
    std::vector<Vec> pts = p.lattice_points();
    for (const Vec& v : p.vertices()) {
      std::vector<Vec> rest;
      for (const Vec& x : pts)
        if (x != v) rest.push_back(x);
      offer(Polytope::hull(rest));
    }
    for (Int x = -3; x <= 3; ++x)
      for (Int y = -3; y <= 3; ++y) {
        Vec w = {x, y};
        if (p.contains(w)) continue;
        std::vector<Vec> ext = pts;
        ext.push_back(w);
        offer(Polytope::hull(ext));
      }
  }
  std::vector<Polytope> out;
  for (auto& [key, p] : found) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const Polytope& a, const Polytope& b) {
    Int va = a.normalized_volume(), vb = b.normalized_volume();
    if (va != vb) return va < vb;
    if (a.vertex_count() != b.vertex_count())
      return a.vertex_count() < b.vertex_count();
    return a.normal_form() < b.normal_form();
  });
  return out;
}

namespace {

struct Candidate {
  Polytope poly;
  std::set<std::string> cayley;
};

// Route A: Cayley polytopes over Minkowski decompositions of the reflexive
// polygons into n-1 parts, plus 2S_3 in dimension 3.
std::map<NormalFormKey, Candidate> route_a(int n,
                                           const std::vector<Polytope>& polygons) {
  std::map<NormalFormKey, Candidate> cands;
  if (n == 2) {
    for (const Polytope& p : polygons)
      cands.emplace(p.normal_form(), Candidate{p, {}});
    return cands;
  }
  int r = n - 1;
  for (const Polytope& delta : polygons) {
    for (const Decomposition& dec : minkowski_decompositions(delta)) {
      if (int(dec.parts.size()) != r) continue;
      Polytope c = cayley(dec.parts);
      GORPOLY_CHECK(c.ambient_dim() == n, "Cayley candidate dimension");
      if (pyramid_split(c)) continue;
      std::string desc;
      for (size_t i = 0; i < dec.parts.size(); ++i) {
        if (i) desc += " * ";
        desc += poly_desc(dec.parts[i]);
      }
      NormalFormKey key = c.normal_form();
      auto it = cands.find(key);
      if (it == cands.end())
        it = cands.emplace(key, Candidate{c, {}}).first;
      it->second.cayley.insert(desc);
    }
  }
  if (n == 3) {
    Polytope t = two_s3();
    GORPOLY_CHECK(!pyramid_split(t), "2S3 must not be a pyramid");
    NormalFormKey key = t.normal_form();
    if (!cands.count(key)) cands.emplace(key, Candidate{t, {}});
  }
  return cands;
}

// Route B: duals of the minimal Route-A candidates with nv <= 4 are the
// maximal polytopes; close them under degree-preserving vertex deletion,
// pruning pyramid branches (a full-dimensional subpolytope of a lattice
// pyramid is again a pyramid, so they contain no non-pyramids).
std::map<NormalFormKey, Polytope> route_b(
    int n, const std::map<NormalFormKey, Candidate>& a_cands) {
  std::map<NormalFormKey, Polytope> found;
  if (n == 2) {
    for (auto& [key, cand] : a_cands) found.emplace(key, cand.poly);
    return found;
  }
  std::deque<Polytope> queue;
  std::set<NormalFormKey> seen;
  for (auto& [key, cand] : a_cands) {
    if (cand.poly.normalized_volume() > 4) continue;
    if (!is_minimal(cand.poly)) continue;
    Polytope maximal = dual_gorenstein(cand.poly).dual;
    GORPOLY_CHECK(!pyramid_split(maximal),
                  "dual of a minimal non-pyramid must not be a pyramid");
    NormalFormKey mk = maximal.normal_form();
    if (seen.insert(mk).second) {
      queue.push_back(maximal);
      found.emplace(mk, maximal);
    }
  }
  while (!queue.empty()) {
    Polytope p = queue.front();
    queue.pop_front();
    for (int vi : deletable_vertices(p)) {
      Polytope child = delete_vertex(p, p.vertices()[size_t(vi)]);
      if (pyramid_split(child)) continue;
      NormalFormKey key = child.normal_form();
      if (seen.insert(key).second) {
        queue.push_back(child);
        found.emplace(key, child);
      }
    }
  }
  return found;
}

struct SigRow {
  const char* id;
  long nv;
  std::vector<long> f;
  const char* dual;
};

const std::vector<SigRow>& signature_table(int n) {
  static const std::vector<SigRow> dim3 = {
      {"P_1", 2, {1, 4, 6, 4, 1}, "P_15"},
      {"P_2", 3, {1, 5, 9, 6, 1}, "P_14"},
      {"P_3", 4, {1, 4, 6, 4, 1}, "P_3"},
      {"P_4", 4, {1, 5, 8, 5, 1}, "P_13"},
      {"P_5", 4, {1, 5, 9, 6, 1}, "P_10"},
      {"P_6", 4, {1, 6, 11, 7, 1}, "P_11"},
      {"P_7", 4, {1, 6, 12, 8, 1}, "P_12"},
      {"P_8", 5, {1, 7, 12, 7, 1}, "P_8"},
      {"P_9", 5, {1, 6, 10, 6, 1}, "P_9"},
      {"P_10", 6, {1, 6, 9, 5, 1}, "P_5"},
      {"P_11", 6, {1, 7, 11, 6, 1}, "P_6"},
      {"P_12", 6, {1, 8, 12, 6, 1}, "P_7"},
      {"P_13", 6, {1, 5, 8, 5, 1}, "P_4"},
      {"P_14", 7, {1, 6, 9, 5, 1}, "P_2"},
      {"P_15", 8, {1, 4, 6, 4, 1}, "P_1"},
  };
  static const std::vector<SigRow> dim4 = {
      {"Q_1", 3, {1, 6, 15, 18, 9, 1}, "Q_4"},
      {"Q_2", 4, {1, 7, 17, 18, 8, 1}, "Q_5"},
      {"Q_3", 4, {1, 6, 13, 13, 6, 1}, "Q_3"},
      {"Q_4", 6, {1, 9, 18, 15, 6, 1}, "Q_1"},
      {"Q_5", 5, {1, 8, 18, 17, 7, 1}, "Q_2"},
  };
  static const std::vector<SigRow> dim5 = {
      {"R_1", 4, {1, 8, 24, 34, 24, 8, 1}, "R_1"},
  };
  static const std::vector<SigRow> empty = {};
  switch (n) {
    case 3: return dim3;
    case 4: return dim4;
    case 5: return dim5;
    default: return empty;
  }
}

std::vector<Int> to_int_vec(const std::vector<long>& v) {
  std::vector<Int> out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

// Names the dim-2 entries: Delta_1 = the nv-3 triangle, Delta_2 = the
// diamond, Delta_4 = the nv-4 triangle, Delta_3 = the remaining nv-4 quad;
// the rest follow in (nv, vertex count, key) order.
std::vector<std::string> polygon_names(const std::vector<CatalogEntry*>& entries) {
  NormalFormKey diamond_key =
      Polytope::hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}).normal_form();
  std::vector<size_t> order(entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const CatalogEntry* x = entries[a];
    const CatalogEntry* y = entries[b];
    if (x->nv != y->nv) return x->nv < y->nv;
    if (x->poly.vertex_count() != y->poly.vertex_count())
      return x->poly.vertex_count() < y->poly.vertex_count();
    return x->key < y->key;
  });
  std::vector<std::string> names(entries.size());
  int next = 5;
  for (size_t i : order) {
    CatalogEntry* e = entries[i];
    int nverts = e->poly.vertex_count();
    if (e->nv == 3)
      names[i] = "Delta_1";
    else if (e->nv == 4 && e->key == diamond_key)
      names[i] = "Delta_2";
    else if (e->nv == 4 && nverts == 3)
      names[i] = "Delta_4";
    else if (e->nv == 4)
      names[i] = "Delta_3";
    else
      names[i] = "Delta_" + std::to_string(next++);
  }
  std::set<std::string> uniq(names.begin(), names.end());
  GORPOLY_CHECK(uniq.size() == names.size(), "polygon names must be unique");
  return names;
}

int id_rank(const std::string& id) {
  // Delta_k / P_k / Q_k / R_k -> k (entries arrive pre-grouped by family).
  auto pos = id.find('_');
  return std::stoi(id.substr(pos + 1));
}

}  // namespace

std::vector<ClassificationResult> classify_up_to(int n, const std::string& route) {
  if (n < 2 || n > 8)
    throw DomainError("unsupported_dimension",
                      "classification supports dimensions 2..8");
  if (route != "both" && route != "cayley" && route != "deletion")
    throw DomainError("bad_input", "route must be cayley, deletion, or both");

  std::vector<Polytope> polygons = classify_reflexive_polygons();
  std::vector<ClassificationResult> levels;

  for (int dim = 2; dim <= n; ++dim) {
    ClassificationResult res;
    res.dim = dim;
    res.route = route;

    std::map<NormalFormKey, Candidate> a_cands = route_a(dim, polygons);
    std::map<NormalFormKey, Polytope> b_cands = route_b(dim, a_cands);
    for (auto& [key, cand] : a_cands) res.route_a_keys.push_back(key);
    for (auto& [key, poly] : b_cands) res.route_b_keys.push_back(key);

    if (route == "both" && res.route_a_keys != res.route_b_keys) {
      std::ostringstream os;
      os << "route disagreement in dimension " << dim << ";";
      for (const auto& k : res.route_a_keys)
        if (!b_cands.count(k)) os << " only-cayley:" << k.to_string();
      for (const auto& k : res.route_b_keys)
        if (!a_cands.count(k)) os << " only-deletion:" << k.to_string();
      throw InternalError(os.str());
    }

    // Non-pyramid entries from the selected route (Cayley descriptions always
    // come from the Cayley route's bookkeeping).
    std::vector<CatalogEntry> entries;
    const bool use_b = (route == "deletion");
    std::vector<std::pair<NormalFormKey, Polytope>> non_pyr;
    if (use_b) {
      for (auto& [key, poly] : b_cands) non_pyr.emplace_back(key, poly);
    } else {
      for (auto& [key, cand] : a_cands) non_pyr.emplace_back(key, cand.poly);
    }
    for (auto& [key, poly] : non_pyr) {
      CatalogEntry e;
      e.key = key;
      e.poly = poly;
      e.dim = dim;
      auto it = a_cands.find(key);
      if (it != a_cands.end())
        e.cayley_descriptions.assign(it->second.cayley.begin(),
                                     it->second.cayley.end());
      entries.push_back(std::move(e));
    }
    // Pyramid entries over the previous level.
    const ClassificationResult* prev = levels.empty() ? nullptr : &levels.back();
    if (prev) {
      for (const CatalogEntry& base : prev->entries) {
        CatalogEntry e;
        e.poly = pyramid(base.poly, 1);
        e.key = e.poly.normal_form();
        e.dim = dim;
        e.pyramid_folds = base.pyramid_folds + 1;
        e.pyramid_base_id = base.id;
        e.root_id = base.pyramid_folds == 0 ? base.id : base.root_id;
        entries.push_back(std::move(e));
      }
    }

    // Per-entry invariants and derived data (parallel; writes by index).
    parallel_for(entries.size(), [&](size_t i) {
      CatalogEntry& e = entries[i];
      GorensteinInfo info = require_gorenstein(e.poly);
      HStar hs = h_star(e.poly);
      GORPOLY_CHECK(hs.degree == 2, "catalog entry must have degree 2");
      GORPOLY_CHECK(info.index == dim - 1, "degree-2 index must be n-1");
      e.index = info.index;
      e.h_star_vec = hs.h;
      e.nv = hs.nv;
      GORPOLY_CHECK(hs.h[1] == hs.nv - 2 && hs.h[2] == 1,
                    "degree-2 h* must be (1, nv-2, 1)");
      GORPOLY_CHECK(e.poly.lattice_point_count() == dim + hs.nv - 1,
                    "|P cap M| must equal n + nv - 1");
      e.f_vec = e.poly.f_vector();
      PyramidStructure ps = pyramid_structure(e.poly);
      GORPOLY_CHECK(ps.folds == e.pyramid_folds,
                    "pyramid fold count mismatch");
      e.minimal = is_minimal(e.poly);
      e.maximal = is_maximal(e.poly);
      if (!ps.is_pyramid) e.picard = picard_rank(e.poly);
    });

    // Naming.
    std::vector<CatalogEntry*> non_pyr_ptrs;
    for (CatalogEntry& e : entries)
      if (e.pyramid_folds == 0) non_pyr_ptrs.push_back(&e);
    if (dim == 2) {
      std::vector<std::string> names = polygon_names(non_pyr_ptrs);
      for (size_t i = 0; i < non_pyr_ptrs.size(); ++i)
        non_pyr_ptrs[i]->id = names[i];
    } else if (!non_pyr_ptrs.empty()) {
      const auto& table = signature_table(dim);
      GORPOLY_CHECK(table.size() == non_pyr_ptrs.size(),
                    "unexpected number of non-pyramid entries");
      // Signature: (nv, f-vector, self-dual, nv of dual).
      std::map<NormalFormKey, const CatalogEntry*> by_key;
      for (CatalogEntry* e : non_pyr_ptrs) by_key[e->key] = e;
      for (CatalogEntry* e : non_pyr_ptrs) {
        DualResult d = dual_gorenstein(e->poly);
        NormalFormKey dk = d.dual.normal_form();
        bool self_dual = dk == e->key;
        Int dual_nv = d.dual.normalized_volume();
        std::string found;
        for (const SigRow& row : table) {
          bool row_self = std::string(row.id) == row.dual;
          if (Int(row.nv) != e->nv) continue;
          if (to_int_vec(row.f) != e->f_vec) continue;
          if (row_self != self_dual) continue;
          // Dual's nv from the table via the dual row.
          long dn = 0;
          for (const SigRow& r2 : table)
            if (std::string(r2.id) == row.dual) dn = r2.nv;
          if (Int(dn) != dual_nv) continue;
          GORPOLY_CHECK(found.empty(), "catalog signature collision");
          found = row.id;
        }
        GORPOLY_CHECK(!found.empty(), "entry matches no catalog signature");
        e->id = found;
      }
      std::set<std::string> used;
      for (CatalogEntry* e : non_pyr_ptrs)
        GORPOLY_CHECK(used.insert(e->id).second, "duplicate catalog name");
    }
    for (CatalogEntry& e : entries)
      if (e.pyramid_folds == 0) e.root_id = e.id;
    for (CatalogEntry& e : entries) {
      if (e.pyramid_folds > 0) {
        e.id = e.pyramid_folds == 1
                   ? "Pi(" + e.root_id + ")"
                   : "Pi^" + std::to_string(e.pyramid_folds) + "(" + e.root_id + ")";
      }
    }

    // Order: non-pyramids by name rank, then pyramids in previous-level order.
    std::vector<CatalogEntry> ordered;
    std::sort(non_pyr_ptrs.begin(), non_pyr_ptrs.end(),
              [](const CatalogEntry* a, const CatalogEntry* b) {
                return id_rank(a->id) < id_rank(b->id);
              });
    for (CatalogEntry* e : non_pyr_ptrs) ordered.push_back(*e);
    for (CatalogEntry& e : entries)
      if (e.pyramid_folds > 0) ordered.push_back(e);
    res.entries = std::move(ordered);

    // Dual ids (within the same level) + involution check.
    std::map<NormalFormKey, std::string> key_to_id;
    for (const CatalogEntry& e : res.entries) {
      GORPOLY_CHECK(!key_to_id.count(e.key), "duplicate normal form in catalog");
      key_to_id[e.key] = e.id;
    }
    parallel_for(res.entries.size(), [&](size_t i) {
      CatalogEntry& e = res.entries[i];
      DualResult d = dual_gorenstein(e.poly);
      NormalFormKey dk = d.dual.normal_form();
      auto it = key_to_id.find(dk);
      GORPOLY_CHECK(it != key_to_id.end(), "dual not found in catalog");
      e.dual_id = it->second;
      if (e.picard)
        GORPOLY_CHECK(Int(*e.picard) == d.dual.normalized_volume() - 1,
                      "picard rank must be nv(dual) - 1");
      // Involution.
      DualResult dd = dual_gorenstein(d.dual);
      GORPOLY_CHECK(dd.dual.normal_form() == e.key,
                    "dual of dual must return to the entry");
    });
    for (const CatalogEntry& e : res.entries) {
      const CatalogEntry* dual = nullptr;
      for (const CatalogEntry& o : res.entries)
        if (o.id == e.dual_id) dual = &o;
      GORPOLY_CHECK(dual && dual->dual_id == e.id, "dual pairing must be mutual");
    }
    // Cayley coverage (dims >= 3): only the 2S3 class lacks a description.
    if (dim >= 3) {
      for (const CatalogEntry& e : res.entries) {
        if (e.pyramid_folds > 0) continue;
        bool is_two_s3 = e.key == two_s3().normal_form();
        GORPOLY_CHECK(is_two_s3 == e.cayley_descriptions.empty(),
                      "Cayley coverage: exactly the 2S3 class has none");
      }
    }

    res.total = int(res.entries.size());
    res.non_pyramids = 0;
    for (const CatalogEntry& e : res.entries)
      if (e.pyramid_folds == 0) ++res.non_pyramids;
    if (prev)
      GORPOLY_CHECK(res.total == res.non_pyramids + prev->total,
                    "total(n) must be non_pyramids(n) + total(n-1)");
    levels.push_back(std::move(res));
  }
  return levels;
}

ClassificationResult classify_degree2(int n, const std::string& route) {
  return classify_up_to(n, route).back();
}

Int verify_twelve(const Polytope& p) {
  if (p.ambient_dim() != 3)
    throw DomainError("bad_input", "verify_twelve needs a 3-dim polytope");
  DualResult d = dual_gorenstein(p);
  Int sum = 0;
  for (const Face& e : p.faces()) {
    if (e.dim != 1) continue;
    Face de = dual_face(d, p, e);
    sum += p.face_volume(e) * d.dual.face_volume(de);
  }
  return sum;
}

Int verify_fourteen(const Polytope& p) {
  if (p.ambient_dim() != 3)
    throw DomainError("bad_input", "verify_fourteen needs a 3-dim polytope");
  if (pyramid_split(p))
    throw DomainError("pyramid_not_supported",
                      "verify_fourteen is undefined on pyramids");
  DualResult d = dual_gorenstein(p);
  Int sum = p.lattice_point_count() + d.dual.lattice_point_count();
  for (const Face& e : p.faces()) {
    if (e.dim != 1) continue;
    Face de = dual_face(d, p, e);
    sum += p.face_interior_count(e) * d.dual.face_interior_count(de);
  }
  return sum;
}

Int verify_facet_volume_sum(const Polytope& p) {
  Int sum = 0;
  for (const Face& f : p.faces())
    if (f.dim == p.ambient_dim() - 1) sum += p.face_volume(f);
  return sum;
}

}  // namespace gorpoly
