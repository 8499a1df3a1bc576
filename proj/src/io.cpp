#include "gorpoly/io.hpp"

#include "gorpoly/constructions.hpp"

#include <fstream>
#include <sstream>

namespace gorpoly {

namespace {

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Int parse_int_token(const std::string& t, const char* what) {
  if (!is_integer_token(t))
    throw DomainError("bad_input",
                      std::string("expected an integer for ") + what +
                          ", got \"" + t + "\"");
  return Int(t);
}

long to_long(const Int& x, const char* what) {
  if (x < -1000000 || x > 1000000)
    throw DomainError("bad_input", std::string(what) + " out of range");
  return long(x.convert_to<long long>());
}

}  // namespace

Json int_to_json(const Int& x) {
  static const Int kLimit = Int(1) << 53;
  if (x > -kLimit && x < kLimit) return Json(x.convert_to<int64_t>());
  return Json(x.str());
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Json ints_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Polytope parse_polytope_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok != "d")
    throw DomainError("bad_input", "expected leading token 'd'");
  if (!(in >> tok)) throw DomainError("bad_input", "missing dimension");
  long dim = to_long(parse_int_token(tok, "dimension"), "dimension");
  if (dim < 1 || dim > 64)
    throw DomainError("bad_input", "dimension must be in 1..64");
  if (!(in >> tok) || tok != "v")
    throw DomainError("bad_input", "expected token 'v' after the dimension");
  if (!(in >> tok)) throw DomainError("bad_input", "missing vertex count");
  long count = to_long(parse_int_token(tok, "vertex count"), "vertex count");
  if (count < 1 || count > 100000)
    throw DomainError("bad_input", "vertex count must be in 1..100000");
  std::vector<Vec> pts(static_cast<size_t>(count),
                       Vec(static_cast<size_t>(dim)));
  for (long i = 0; i < count; ++i)
    for (long j = 0; j < dim; ++j) {
      if (!(in >> tok))
        throw DomainError("bad_input", "fewer coordinates than declared");
      pts[size_t(i)][size_t(j)] = parse_int_token(tok, "coordinate");
    }
  if (in >> tok)
    throw DomainError("bad_input", "trailing token \"" + tok + "\"");
  return Polytope::hull(pts);
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw DomainError("bad_input", "JSON polytope needs 'dim' and 'vertices'");
  if (!j["dim"].is_number_integer())
    throw DomainError("bad_input", "'dim' must be an integer");
  long dim = j["dim"].get<long>();
  if (dim < 1 || dim > 64)
    throw DomainError("bad_input", "dimension must be in 1..64");
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw DomainError("bad_input", "'vertices' must be a nonempty array");
  std::vector<Vec> pts;
  for (const Json& row : j["vertices"]) {
    if (!row.is_array() || long(row.size()) != dim)
      throw DomainError("bad_input", "each vertex needs exactly 'dim' entries");
    Vec v;
    for (const Json& x : row) {
      if (x.is_number_integer())
        v.push_back(Int(x.get<int64_t>()));
      else if (x.is_string())
        v.push_back(parse_int_token(x.get<std::string>(), "coordinate"));
      else
        throw DomainError("bad_input", "coordinates must be integers");
    }
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

Polytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", "cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos)
    throw DomainError("bad_input", "empty input file: " + path);
  if (text[i] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
      throw DomainError("bad_input", "invalid JSON in file: " + path);
    return polytope_from_json(j);
  }
  return parse_polytope_text(text);
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.ambient_dim();
  Json verts = Json::array();
  for (const Vec& v : p.vertices()) verts.push_back(vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

Json hstar_report(const Polytope& p, long kmax) {
  if (kmax < 0) kmax = p.affine_dim() + 2;
  Json j;
  j["dim"] = p.affine_dim();
  j["ambient_dim"] = p.ambient_dim();
  j["kmax"] = kmax;
  j["counts"] = ints_to_json(ehrhart_counts_upto(p, kmax));
  HStar hs = h_star(p);
  j["h_star"] = ints_to_json(hs.h);
  j["degree"] = hs.degree;
  j["nv"] = int_to_json(hs.nv);
  return j;
}

Json check_report(const Polytope& p) {
  Json j;
  j["dim"] = p.ambient_dim();
  j["reflexive"] = is_reflexive(p);
  GorensteinInfo info = gorenstein_index(p);
  j["gorenstein"] = info.ok();
  j["index"] = info.ok() ? Json(info.index) : Json(nullptr);
  j["degree"] = info.ok() ? Json(info.degree) : Json(nullptr);
  j["pyramid_folds"] = pyramid_structure(p).folds;
  if (info.ok() && info.degree == 2) {
    j["minimal"] = is_minimal(p);
    j["maximal"] = is_maximal(p);
  } else {
    j["minimal"] = nullptr;
    j["maximal"] = nullptr;
  }
  return j;
}

Json dual_report(const Polytope& p) {
  DualResult d = dual_gorenstein(p);
  Json j;
  j["index"] = d.info.index;
  j["degree"] = d.info.degree;
  Json rays = Json::array();
  for (const Vec& r : d.rays) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  j["mbar"] = vec_to_json(d.mbar);
  j["dual"] = polytope_to_json(d.dual);
  j["facet_to_dual_vertex"] = d.facet_to_dual_vertex;
  j["vertex_to_dual_facet"] = d.vertex_to_dual_facet;
  return j;
}

Json decompose_report(const Polytope& p) {
  std::vector<Decomposition> decos = minkowski_decompositions(p);
  Json j;
  j["dim"] = p.ambient_dim();
  j["count"] = decos.size();
  Json list = Json::array();
  for (const Decomposition& d : decos) {
    Json parts = Json::array();
    for (const Polytope& part : d.parts) parts.push_back(polytope_to_json(part));
    list.push_back(Json{{"parts", parts}});
  }
  j["decompositions"] = list;
  return j;
}

Json semigroup_report(const Polytope& p, long kmax) {
  if (kmax < 0) {
    GorensteinInfo info = gorenstein_index(p);
    kmax = info.ok() ? 2 * info.index + 2 : 4;
  }
  GradedGenerators gens = irreducible_generators(p, kmax);
  Presentation pres = minimal_relations(p, gens);
  Json j;
  j["dim"] = p.ambient_dim();
  j["kmax"] = kmax;
  Json gl = Json::array();
  for (const auto& [pt, deg] : gens.gens)
    gl.push_back(Json{{"point", vec_to_json(pt)}, {"degree", deg}});
  j["generators"] = gl;
  j["I_poly"] = ints_to_json(gens.i_poly);
  Json rl = Json::array();
  for (const Binomial& b : pres.relations)
    rl.push_back(Json{{"relation", binomial_to_string(b)}, {"degree", b.degree}});
  j["relations"] = rl;
  j["relations_degree_max"] = pres.deg_max;
  GorensteinInfo info = gorenstein_index(p);
  if (info.ok() && info.degree == 2) {
    ArtinianProfile prof = artinian_profile(p, gens);
    j["g_vector"] = ints_to_json(prof.g_vector);
    j["artinian_case"] = prof.case_tag;
  } else {
    j["g_vector"] = nullptr;
    j["artinian_case"] = nullptr;
  }
  j["pyramid_by_relations"] = pyramid_by_relations(pres);
  return j;
}

Json entry_to_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["dim"] = e.dim;
  j["normal_form"] = e.key.to_string();
  Json verts = Json::array();
  for (const Vec& v : e.poly.vertices()) verts.push_back(vec_to_json(v));
  j["vertices"] = verts;
  j["nv"] = int_to_json(e.nv);
  j["h_star"] = ints_to_json(e.h_star_vec);
  j["f_vector"] = ints_to_json(e.f_vec);
  j["index"] = e.index;
  j["degree"] = 2;
  j["dual"] = e.dual_id;
  if (e.pyramid_folds > 0)
    j["pyramid"] = Json{{"folds", e.pyramid_folds},
                        {"base", e.pyramid_base_id},
                        {"root", e.root_id}};
  else
    j["pyramid"] = nullptr;
  j["cayley"] = e.cayley_descriptions;
  j["minimal"] = e.minimal;
  j["maximal"] = e.maximal;
  j["picard"] = e.picard ? Json(*e.picard) : Json(nullptr);
  return j;
}

Json classification_to_json(const ClassificationResult& r, bool with_entries) {
  Json j;
  j["dim"] = r.dim;
  j["route"] = r.route;
  j["total"] = r.total;
  j["non_pyramids"] = r.non_pyramids;
  if (with_entries) {
    Json entries = Json::array();
    for (const CatalogEntry& e : r.entries) entries.push_back(entry_to_json(e));
    j["entries"] = entries;
  }
  return j;
}

Json error_to_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gorpoly
