#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gorpoly/classify.hpp"
#include "gorpoly/constructions.hpp"
#include "gorpoly/gorenstein.hpp"
#include "gorpoly/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

using namespace gorpoly;

namespace {

const CatalogEntry* by_id(const ClassificationResult& r, const std::string& id) {
  for (const CatalogEntry& e : r.entries)
    if (e.id == id) return &e;
  return nullptr;
}

// Runs a CLI command line, capturing stdout (append "2>&1" yourself when the
// diagnostic stream matters). Returns the exit code.
int run_cmd(const std::string& cmd, std::string* out) {
  out->clear();
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out->append(buf, n);
  int status = pclose(f);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_path() {
  const char* p = std::getenv("GORPOLY_CLI");
  return p ? std::string(p) : std::string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << text;
}

const char* kSquareText = "d 2 v 4\n0 0\n1 0\n0 1\n1 1\n";

}  // namespace

TEST_CASE("reflexive polygons: 16 classes with the known profile") {
  std::vector<Polytope> ps = classify_reflexive_polygons();
  REQUIRE(ps.size() == 16);

  std::set<NormalFormKey> keys;
  std::map<int, int> by_vertex_count;   // #vertices -> count
  std::map<Int, int> by_boundary;       // boundary points -> count
  for (const Polytope& p : ps) {
    Vec w;
    REQUIRE(is_reflexive(p, &w));
    CHECK(w == Vec{0, 0});  // returned recentered
    keys.insert(p.normal_form());
    by_vertex_count[int(p.vertices().size())]++;
    Int b = Int(p.lattice_points().size()) - 1;
    by_boundary[b]++;
    // b(P) + b(P*) = 12 for reflexive polygons.
    DualResult d = dual_gorenstein(p);
    Int bd = Int(d.dual.lattice_points().size()) - 1;
    CHECK(b + bd == 12);
  }
  CHECK(keys.size() == 16);  // pairwise non-isomorphic
  CHECK(by_vertex_count == std::map<int, int>{{3, 5}, {4, 7}, {5, 3}, {6, 1}});
  CHECK(by_boundary ==
        std::map<Int, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4}, {7, 2}, {8, 3}, {9, 1}});
}

TEST_CASE("classification counts and entry invariants, dims 2-4") {
  std::vector<ClassificationResult> levels = classify_up_to(4);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].total == 16);
  CHECK(levels[0].non_pyramids == 16);
  CHECK(levels[1].total == 31);
  CHECK(levels[1].non_pyramids == 15);
  CHECK(levels[2].total == 36);
  CHECK(levels[2].non_pyramids == 5);

  for (const ClassificationResult& r : levels) {
    CHECK(int(r.entries.size()) == r.total);
    CHECK(r.route == "both");
    std::set<NormalFormKey> a(r.route_a_keys.begin(), r.route_a_keys.end());
    std::set<NormalFormKey> b(r.route_b_keys.begin(), r.route_b_keys.end());
    CHECK(a == b);
    CHECK(int(a.size()) == r.non_pyramids);

    // Non-pyramids first, then pyramids; per-entry numerics.
    for (int i = 0; i < r.total; ++i) {
      const CatalogEntry& e = r.entries[size_t(i)];
      CHECK((e.pyramid_folds == 0) == (i < r.non_pyramids));
      CHECK(e.dim == r.dim);
      CHECK(e.index == r.dim - 1);
      CHECK(e.h_star_vec[0] == 1);
      CHECK(e.h_star_vec[1] == e.nv - 2);
      CHECK(e.h_star_vec[2] == 1);
      CHECK(e.key == e.poly.normal_form());
      if (e.pyramid_folds == 0) {
        CHECK(e.root_id == e.id);
        CHECK(e.pyramid_base_id.empty());
        CHECK(e.picard.has_value());
      } else {
        CHECK(!e.picard.has_value());
        CHECK(!e.pyramid_base_id.empty());
      }
    }
  }
}

TEST_CASE("dim-2 naming pins") {
  ClassificationResult r2 = classify_degree2(2);
  std::set<std::string> ids;
  for (const CatalogEntry& e : r2.entries) ids.insert(e.id);
  for (int k = 1; k <= 16; ++k)
    CHECK(ids.count("Delta_" + std::to_string(k)));

  const CatalogEntry* d1 = by_id(r2, "Delta_1");
  REQUIRE(d1);
  CHECK(d1->nv == 3);  // the basic triangle
  CHECK(d1->poly.vertices().size() == 3);

  const CatalogEntry* d2 = by_id(r2, "Delta_2");
  REQUIRE(d2);
  Polytope diamond = Polytope::hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(d2->key == diamond.normal_form());

  const CatalogEntry* d3 = by_id(r2, "Delta_3");
  const CatalogEntry* d4 = by_id(r2, "Delta_4");
  REQUIRE(d3);
  REQUIRE(d4);
  CHECK(d3->nv == 4);
  CHECK(d3->poly.vertices().size() == 4);
  CHECK(d4->nv == 4);
  CHECK(d4->poly.vertices().size() == 3);
}

TEST_CASE("dim-3 catalog: frozen duals and pyramid ids") {
  ClassificationResult r3 = classify_degree2(3);
  const CatalogEntry* p1 = by_id(r3, "P_1");
  REQUIRE(p1);
  CHECK(p1->nv == 2);
  CHECK(p1->dual_id == "P_15");
  CHECK(p1->minimal);
  CHECK(!p1->maximal);
  CHECK(p1->picard.value() == 7);

  const CatalogEntry* p15 = by_id(r3, "P_15");
  REQUIRE(p15);
  CHECK(p15->dual_id == "P_1");
  CHECK(are_isomorphic(p15->poly, two_s3()));

  const CatalogEntry* p3 = by_id(r3, "P_3");
  REQUIRE(p3);
  CHECK(p3->dual_id == "P_3");  // self-dual

  // Pyramids carry over the dim-2 catalog in order.
  CHECK(r3.entries[15].id == "Pi(Delta_1)");
  CHECK(r3.entries[15].root_id == "Delta_1");
  CHECK(r3.entries[15].pyramid_base_id == "Delta_1");
  for (int i = 15; i < 31; ++i) {
    const CatalogEntry& e = r3.entries[size_t(i)];
    CHECK(e.pyramid_folds == 1);
    CHECK(e.id == "Pi(" + e.root_id + ")");
  }

  // Dim 4: double pyramids gain the fold exponent.
  ClassificationResult r4 = classify_degree2(4);
  const CatalogEntry* pp = by_id(r4, "Pi^2(Delta_1)");
  REQUIRE(pp);
  CHECK(pp->pyramid_folds == 2);
  CHECK(pp->pyramid_base_id == "Pi(Delta_1)");
  CHECK(pp->root_id == "Delta_1");
  const CatalogEntry* pq = by_id(r4, "Pi(P_1)");
  REQUIRE(pq);
  CHECK(pq->pyramid_folds == 1);
  CHECK(pq->root_id == "P_1");
}

TEST_CASE("identity sweep helpers") {
  ClassificationResult r3 = classify_degree2(3);
  const CatalogEntry* p1 = by_id(r3, "P_1");
  const CatalogEntry* pyr = by_id(r3, "Pi(Delta_2)");
  REQUIRE(p1);
  REQUIRE(pyr);
  CHECK(verify_twelve(p1->poly) == 12);
  CHECK(verify_twelve(pyr->poly) == 12);
  CHECK(verify_fourteen(p1->poly) == 14);
  CHECK_THROWS_AS(verify_fourteen(pyr->poly), DomainError);
  Polytope sq = Polytope::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(verify_twelve(sq), DomainError);  // wrong dimension
  for (const CatalogEntry& e : r3.entries)
    CHECK(verify_facet_volume_sum(e.poly) == Int(e.dim - 1) * e.nv);
}

TEST_CASE("classification rejects bad arguments") {
  CHECK_THROWS_AS(classify_degree2(1), DomainError);
  CHECK_THROWS_AS(classify_degree2(9), DomainError);
  CHECK_THROWS_AS(classify_degree2(3, "fastest"), DomainError);
}

TEST_CASE("CLI: classify output, determinism, catalog round-trip") {
  std::string cli = cli_path();
  if (cli.empty()) {
    MESSAGE("GORPOLY_CLI not set; skipping CLI subprocess checks");
    return;
  }

  std::string out1, out2;
  SUBCASE("classify summary and byte determinism") {
    int rc = run_cmd(cli + " classify --dim 3", &out1);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out1);
    CHECK(j["total"] == 31);
    CHECK(j["non_pyramids"] == 15);
    CHECK(j["dim"] == 3);
    CHECK(run_cmd(cli + " classify --dim 3", &out2) == 0);
    CHECK(out1 == out2);
  }

  SUBCASE("catalog single entry and re-parse") {
    int rc = run_cmd(cli + " catalog --id P_7", &out1);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out1);
    CHECK(j["id"] == "P_7");
    CHECK(j["dim"] == 3);
    CHECK(j["nv"] == 4);
    CHECK(j["dual"] == "P_12");
    // Round-trip: the printed entry is a valid polytope input again.
    write_file("cli_roundtrip.json", out1);
    Polytope back = read_polytope_file("cli_roundtrip.json");
    ClassificationResult r3 = classify_degree2(3);
    const CatalogEntry* p7 = by_id(r3, "P_7");
    REQUIRE(p7);
    CHECK(are_isomorphic(back, p7->poly));
    std::remove("cli_roundtrip.json");
  }

  SUBCASE("verify twelve prints one OK line per dim-3 entry") {
    int rc = run_cmd(cli + " verify --identity twelve --dim 3", &out1);
    CHECK(rc == 0);
    int lines = 0, ok = 0;
    size_t pos = 0;
    while (pos < out1.size()) {
      size_t e = out1.find('\n', pos);
      if (e == std::string::npos) e = out1.size();
      std::string line = out1.substr(pos, e - pos);
      if (!line.empty()) {
        ++lines;
        if (line.rfind("OK 12 ", 0) == 0) ++ok;
      }
      pos = e + 1;
    }
    CHECK(lines == 31);
    CHECK(ok == 31);
  }

  SUBCASE("hstar on a text file") {
    write_file("cli_square.txt", kSquareText);
    int rc = run_cmd(cli + " hstar cli_square.txt", &out1);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out1);
    CHECK(j["dim"] == 2);
    CHECK(j["degree"] == 1);
    CHECK(j["h_star"] == nlohmann::json({1, 1, 0}));
    std::remove("cli_square.txt");
  }

  SUBCASE("domain errors exit 1 with JSON on stderr") {
    write_file("cli_bad.txt", "d 2 v 3\n0 0\n1 0\n0.5 1\n");
    int rc = run_cmd(cli + " hstar cli_bad.txt 2>&1", &out1);
    CHECK(rc == 1);
    auto j = nlohmann::json::parse(out1);
    CHECK(j["error"]["code"] == "bad_input");
    std::remove("cli_bad.txt");

    rc = run_cmd(cli + " hstar no_such_file.txt 2>&1", &out1);
    CHECK(rc == 1);
    j = nlohmann::json::parse(out1);
    CHECK(j["error"]["code"] == "io_error");

    rc = run_cmd(cli + " catalog --id P_99 2>&1", &out1);
    CHECK(rc == 1);
    j = nlohmann::json::parse(out1);
    CHECK(j["error"]["code"] == "not_found");
  }

  SUBCASE("usage errors exit 2") {
    int rc = run_cmd(cli + " classify 2>&1", &out1);  // missing --dim
    CHECK(rc == 2);
    auto j = nlohmann::json::parse(out1);
    CHECK(j["error"]["code"] == "usage");
    rc = run_cmd(cli + " frobnicate 2>&1", &out1);
    CHECK(rc == 2);
  }
}
