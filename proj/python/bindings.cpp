// Python bindings for the main gorpoly operations. Vertices travel as plain
// lists of integer lists; all arithmetic stays exact on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gorpoly/classify.hpp"
#include "gorpoly/constructions.hpp"
#include "gorpoly/ehrhart.hpp"
#include "gorpoly/gorenstein.hpp"
#include "gorpoly/semigroup.hpp"

namespace py = pybind11;
using namespace gorpoly;

namespace {

using VertsLL = std::vector<std::vector<long long>>;

Polytope from_verts(const VertsLL& verts) {
  if (verts.empty()) throw DomainError("bad_input", "need at least one vertex");
  std::vector<Vec> pts;
  for (const auto& row : verts) {
    Vec v;
    for (long long x : row) v.push_back(Int(x));
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

VertsLL to_verts(const Polytope& p) {
  VertsLL out;
  for (const Vec& v : p.vertices()) {
    std::vector<long long> row;
    for (const Int& x : v) row.push_back(to_ll(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<long long> ints_to_ll(const std::vector<Int>& v) {
  std::vector<long long> out;
  for (const Int& x : v) out.push_back(to_ll(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gorpoly, m) {
  m.doc() =
      "Exact lattice-polytope operations: Ehrhart h*-vectors, lattice "
      "isomorphism, Gorenstein duality, Cayley/Minkowski constructions, "
      "semigroup presentations, and the degree-2 classification.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError,
                      (e.code() + ": " + std::string(e.what())).c_str());
    }
  });

  m.def(
      "h_star",
      [](const VertsLL& verts) {
        HStar hs = h_star(from_verts(verts));
        py::dict d;
        d["h"] = ints_to_ll(hs.h);
        d["dim"] = hs.dim;
        d["degree"] = hs.degree;
        d["nv"] = to_ll(hs.nv);
        return d;
      },
      py::arg("vertices"), "h*-vector, degree, and normalized volume.");

  m.def(
      "ehrhart_count",
      [](const VertsLL& verts, long k) {
        return to_ll(ehrhart_count(from_verts(verts), k));
      },
      py::arg("vertices"), py::arg("k"), "|kP ∩ Z^n|.");

  m.def(
      "normal_form",
      [](const VertsLL& verts) { return from_verts(verts).normal_form().to_string(); },
      py::arg("vertices"),
      "Canonical key; equal keys iff lattice-isomorphic polytopes.");

  m.def(
      "is_isomorphic",
      [](const VertsLL& a, const VertsLL& b) {
        return are_isomorphic(from_verts(a), from_verts(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "check",
      [](const VertsLL& verts) {
        Polytope p = from_verts(verts);
        GorensteinInfo info = gorenstein_index(p);
        py::dict d;
        d["reflexive"] = is_reflexive(p);
        d["gorenstein"] = info.ok();
        d["index"] = info.ok() ? py::cast(info.index) : py::none();
        d["degree"] = info.ok() ? py::cast(info.degree) : py::none();
        d["pyramid_folds"] = pyramid_structure(p).folds;
        return d;
      },
      py::arg("vertices"),
      "Reflexivity, Gorenstein index/degree, pyramid fold count.");

  m.def(
      "dual",
      [](const VertsLL& verts) {
        return to_verts(dual_gorenstein(from_verts(verts)).dual);
      },
      py::arg("vertices"), "Vertices of the dual Gorenstein polytope.");

  m.def(
      "classify_counts",
      [](int dim, const std::string& route) {
        ClassificationResult r = classify_degree2(dim, route);
        return py::make_tuple(r.total, r.non_pyramids);
      },
      py::arg("dim"), py::arg("route") = "both",
      "(total, non_pyramids) for Gorenstein polytopes of degree 2.");

  m.def(
      "catalog_ids",
      [](int dim) {
        std::vector<std::string> ids;
        for (const CatalogEntry& e : classify_degree2(dim, "both").entries)
          ids.push_back(e.id);
        return ids;
      },
      py::arg("dim"));

  m.def(
      "catalog_vertices",
      [](const std::string& id, int dim) {
        for (const CatalogEntry& e : classify_degree2(dim, "both").entries)
          if (e.id == id) return to_verts(e.poly);
        throw DomainError("not_found", "no catalog entry with id " + id);
      },
      py::arg("id"), py::arg("dim"));

  m.def(
      "decompose",
      [](const VertsLL& verts) {
        std::vector<std::vector<VertsLL>> out;
        for (const Decomposition& d : minkowski_decompositions(from_verts(verts))) {
          std::vector<VertsLL> parts;
          for (const Polytope& part : d.parts) parts.push_back(to_verts(part));
          out.push_back(std::move(parts));
        }
        return out;
      },
      py::arg("vertices"), "Minkowski decompositions of a lattice polygon.");

  m.def(
      "cayley",
      [](const std::vector<VertsLL>& factors) {
        std::vector<Polytope> ps;
        for (const VertsLL& f : factors) ps.push_back(from_verts(f));
        return to_verts(cayley(ps));
      },
      py::arg("factors"));

  m.def(
      "pyramid",
      [](const VertsLL& verts, int folds) {
        return to_verts(pyramid(from_verts(verts), folds));
      },
      py::arg("vertices"), py::arg("folds") = 1);

  m.def("theta", [](int d) { return to_verts(theta(d)); }, py::arg("d"));

  m.def("two_s3", [] { return to_verts(two_s3()); });

  m.def(
      "semigroup_summary",
      [](const VertsLL& verts, long kmax) {
        Polytope p = from_verts(verts);
        if (kmax < 0) {
          GorensteinInfo info = gorenstein_index(p);
          kmax = info.ok() ? 2 * info.index + 2 : 4;
        }
        GradedGenerators gens = irreducible_generators(p, kmax);
        Presentation pres = minimal_relations(p, gens);
        py::dict d;
        d["num_generators"] = gens.gens.size();
        d["i_poly"] = ints_to_ll(gens.i_poly);
        std::vector<std::string> rels;
        for (const Binomial& b : pres.relations)
          rels.push_back(binomial_to_string(b));
        d["relations"] = rels;
        return d;
      },
      py::arg("vertices"), py::arg("kmax") = -1,
      "Irreducible generators, I(P,t) coefficients, minimal relations.");
}
