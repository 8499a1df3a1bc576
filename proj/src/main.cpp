// gorpoly CLI: exact lattice-polytope toolkit for Gorenstein polytopes of
// degree 2. All machine output is JSON on stdout; errors are JSON on stderr.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "gorpoly/classify.hpp"
#include "gorpoly/constructions.hpp"
#include "gorpoly/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace gorpoly {
namespace {

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("io_error", "cannot write file: " + out_path);
  out << text;
}

// Infers the catalog dimension from an entry id such as "P_7", "Delta_12",
// or "Pi^2(Q_3)".
int dim_of_id(const std::string& id) {
  std::string root = id;
  int folds = 0;
  if (root.rfind("Pi", 0) == 0) {
    size_t l = root.find('(');
    size_t r = root.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
      throw DomainError("bad_input", "malformed catalog id: " + id);
    if (root.size() > 2 && root[2] == '^') {
      try {
        folds = std::stoi(root.substr(3, l - 3));
      } catch (const std::exception&) {
        throw DomainError("bad_input", "malformed catalog id: " + id);
      }
      if (folds < 2)
        throw DomainError("bad_input", "malformed catalog id: " + id);
    } else {
      folds = 1;
    }
    root = root.substr(l + 1, r - l - 1);
  }
  int base;
  if (root.rfind("Delta_", 0) == 0)
    base = 2;
  else if (root.rfind("P_", 0) == 0)
    base = 3;
  else if (root.rfind("Q_", 0) == 0)
    base = 4;
  else if (root.rfind("R_", 0) == 0)
    base = 5;
  else
    throw DomainError("not_found", "unknown catalog id: " + id);
  return base + folds;
}

struct VerifyOutcome {
  std::string text;
  bool ok = true;
};

void sweep_facevol(const ClassificationResult& res, VerifyOutcome& out) {
  for (const CatalogEntry& e : res.entries) {
    Int got = verify_facet_volume_sum(e.poly);
    Int want = Int(res.dim - 1) * e.nv;
    if (got == want) {
      out.text += "OK FV " + e.id + "\n";
    } else {
      out.text += "FAIL FV " + e.id + " got " + got.str() + " want " +
                  want.str() + "\n";
      out.ok = false;
    }
  }
}

void sweep_twelve(const ClassificationResult& res, VerifyOutcome& out) {
  for (const CatalogEntry& e : res.entries) {
    Int got = verify_twelve(e.poly);
    if (got == 12) {
      out.text += "OK 12 " + e.id + "\n";
    } else {
      out.text += "FAIL 12 " + e.id + " got " + got.str() + "\n";
      out.ok = false;
    }
  }
}

void sweep_fourteen(const ClassificationResult& res, VerifyOutcome& out) {
  for (const CatalogEntry& e : res.entries) {
    if (e.pyramid_folds > 0) continue;
    Int got = verify_fourteen(e.poly);
    if (got == 14) {
      out.text += "OK 14 " + e.id + "\n";
    } else {
      out.text += "FAIL 14 " + e.id + " got " + got.str() + "\n";
      out.ok = false;
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "gorpoly: exact-arithmetic lattice polytopes, Ehrhart h*-vectors, "
      "Gorenstein duality, and the degree-2 classification"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  bool json_flag = true;
  app.add_option("--seed", seed, "Seed for randomized sweeps (reserved)")
      ->capture_default_str();
  app.add_flag("--json,!--no-json", json_flag,
               "Emit JSON (always on; compatibility flag)");

  int exit_code = 0;

  // hstar
  std::string hstar_file;
  long hstar_kmax = -1;
  std::string hstar_out;
  auto* hstar_cmd =
      app.add_subcommand("hstar", "Ehrhart counts, h*-vector, degree, nv");
  hstar_cmd->add_option("file", hstar_file, "Polytope file")->required();
  hstar_cmd->add_option("--kmax", hstar_kmax, "Count dilates up to kmax");
  hstar_cmd->add_option("--out", hstar_out, "Write JSON to a file");
  hstar_cmd->callback([&] {
    Polytope p = read_polytope_file(hstar_file);
    write_text(dump_json(hstar_report(p, hstar_kmax)), hstar_out);
  });

  // dual
  std::string dual_file, dual_out;
  auto* dual_cmd =
      app.add_subcommand("dual", "Dual Gorenstein polytope with certificates");
  dual_cmd->add_option("file", dual_file, "Polytope file")->required();
  dual_cmd->add_option("--out", dual_out, "Write JSON to a file");
  dual_cmd->callback([&] {
    Polytope p = read_polytope_file(dual_file);
    write_text(dump_json(dual_report(p)), dual_out);
  });

  // check
  std::string check_file, check_out;
  auto* check_cmd = app.add_subcommand(
      "check", "Reflexivity, Gorenstein index/degree, pyramid folds, flags");
  check_cmd->add_option("file", check_file, "Polytope file")->required();
  check_cmd->add_option("--out", check_out, "Write JSON to a file");
  check_cmd->callback([&] {
    Polytope p = read_polytope_file(check_file);
    write_text(dump_json(check_report(p)), check_out);
  });

  // decompose
  std::string deco_file, deco_out;
  auto* deco_cmd =
      app.add_subcommand("decompose", "Minkowski decompositions of a polygon");
  deco_cmd->add_option("file", deco_file, "Polygon file")->required();
  deco_cmd->add_option("--out", deco_out, "Write JSON to a file");
  deco_cmd->callback([&] {
    Polytope p = read_polytope_file(deco_file);
    if (p.affine_dim() != 2)
      throw DomainError("bad_input", "decompose needs a 2-dimensional polygon");
    write_text(dump_json(decompose_report(p)), deco_out);
  });

  // cayley
  std::vector<std::string> cayley_files;
  std::string cayley_out;
  auto* cayley_cmd =
      app.add_subcommand("cayley", "Cayley polytope of the given factors");
  cayley_cmd->add_option("files", cayley_files, "Factor polytope files")
      ->required()
      ->expected(-1);
  cayley_cmd->add_option("--out", cayley_out, "Write JSON to a file");
  cayley_cmd->callback([&] {
    std::vector<Polytope> factors;
    for (const std::string& f : cayley_files)
      factors.push_back(read_polytope_file(f));
    write_text(dump_json(polytope_to_json(cayley(factors))), cayley_out);
  });

  // semigroup
  std::string semi_file, semi_out;
  long semi_kmax = -1;
  auto* semi_cmd = app.add_subcommand(
      "semigroup", "Generators, I(P,t), minimal binomial relations, G(t)");
  semi_cmd->add_option("file", semi_file, "Polytope file")->required();
  semi_cmd->add_option("--kmax", semi_kmax, "Saturation bound");
  semi_cmd->add_option("--out", semi_out, "Write JSON to a file");
  semi_cmd->callback([&] {
    Polytope p = read_polytope_file(semi_file);
    write_text(dump_json(semigroup_report(p, semi_kmax)), semi_out);
  });

  // classify
  int classify_dim = 0;
  std::string classify_route = "both";
  std::string classify_out;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify Gorenstein polytopes of degree 2 in dimension N");
  classify_cmd->add_option("--dim", classify_dim, "Dimension (2..8)")
      ->required();
  classify_cmd
      ->add_option("--route", classify_route, "cayley | deletion | both")
      ->capture_default_str();
  classify_cmd->add_option("--out", classify_out,
                           "Write the full catalog JSON to a file");
  classify_cmd->callback([&] {
    ClassificationResult res = classify_degree2(classify_dim, classify_route);
    std::cout << dump_json(classification_to_json(res, false));
    if (!classify_out.empty())
      write_text(dump_json(classification_to_json(res, true)), classify_out);
  });

  // verify
  std::string verify_identity = "all";
  int verify_dim = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Identity sweeps over the classified catalog");
  verify_cmd
      ->add_option("--identity", verify_identity,
                   "twelve | fourteen | facevol | all")
      ->capture_default_str();
  verify_cmd->add_option("--dim", verify_dim, "Dimension (2..8)")->required();
  verify_cmd->callback([&] {
    if (verify_identity != "twelve" && verify_identity != "fourteen" &&
        verify_identity != "facevol" && verify_identity != "all")
      throw DomainError("bad_input",
                        "identity must be twelve, fourteen, facevol, or all");
    if ((verify_identity == "twelve" || verify_identity == "fourteen") &&
        verify_dim != 3)
      throw DomainError("bad_input",
                        "identity '" + verify_identity + "' needs --dim 3");
    ClassificationResult res = classify_degree2(verify_dim, "both");
    VerifyOutcome out;
    if (verify_identity == "twelve" ||
        (verify_identity == "all" && verify_dim == 3))
      sweep_twelve(res, out);
    if (verify_identity == "fourteen" ||
        (verify_identity == "all" && verify_dim == 3))
      sweep_fourteen(res, out);
    if (verify_identity == "facevol" || verify_identity == "all")
      sweep_facevol(res, out);
    std::cout << out.text;
    if (!out.ok) exit_code = 1;
  });

  // catalog
  std::string catalog_id, catalog_out;
  int catalog_dim = 0;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "Print catalog entries by id or dimension");
  catalog_cmd->add_option("--id", catalog_id, "Entry id, e.g. P_7 or Pi(Q_3)");
  catalog_cmd->add_option("--dim", catalog_dim, "Print all entries of a dimension");
  catalog_cmd->add_option("--out", catalog_out, "Write JSON to a file");
  catalog_cmd->callback([&] {
    if (catalog_id.empty() && catalog_dim == 0)
      throw CLI::RequiredError("catalog needs --id or --dim");
    int dim = catalog_id.empty() ? catalog_dim : dim_of_id(catalog_id);
    if (!catalog_id.empty() && catalog_dim != 0 && catalog_dim != dim)
      throw DomainError("bad_input", "--dim disagrees with the id " + catalog_id);
    ClassificationResult res = classify_degree2(dim, "both");
    if (catalog_id.empty()) {
      Json arr = Json::array();
      for (const CatalogEntry& e : res.entries) arr.push_back(entry_to_json(e));
      write_text(dump_json(arr), catalog_out);
      return;
    }
    for (const CatalogEntry& e : res.entries) {
      if (e.id == catalog_id) {
        write_text(dump_json(entry_to_json(e)), catalog_out);
        return;
      }
    }
    throw DomainError("not_found", "no catalog entry with id " + catalog_id);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << dump_json(error_to_json("usage", e.what()));
    return 2;
  } catch (const DomainError& e) {
    std::cerr << dump_json(error_to_json(e.code(), e.what()));
    return 1;
  } catch (const std::exception& e) {
    std::cerr << dump_json(error_to_json("internal", e.what()));
    return 1;
  }
  return exit_code;
}

}  // namespace
}  // namespace gorpoly

int main(int argc, char** argv) { return gorpoly::run(argc, argv); }
