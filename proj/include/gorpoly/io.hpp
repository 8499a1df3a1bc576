#pragma once
// Polytope file parsing (plain-text vertex format and JSON) and the JSON
// reports emitted by the CLI. JSON is the only machine-readable output
// format; the text format is input-only.

#include "gorpoly/classify.hpp"
#include "gorpoly/ehrhart.hpp"
#include "gorpoly/gorenstein.hpp"
#include "gorpoly/semigroup.hpp"

#include "json.hpp"

namespace gorpoly {

using Json = nlohmann::ordered_json;

// Emits |x| < 2^53 as a JSON number, anything larger as a decimal string.
Json int_to_json(const Int& x);
Json vec_to_json(const Vec& v);
Json ints_to_json(const std::vector<Int>& v);

// Plain-text format: tokens `d <dim> v <count>` followed by count*dim
// integers (whitespace/newlines free-form). Any other token is an error.
Polytope parse_polytope_text(const std::string& text);

// JSON format: {"dim": n, "vertices": [[...], ...]}; extra keys are ignored
// so catalog entries round-trip through this parser.
Polytope polytope_from_json(const Json& j);

// Dispatches on the first non-whitespace byte ('{' selects JSON).
Polytope read_polytope_file(const std::string& path);

Json polytope_to_json(const Polytope& p);

// CLI reports.
Json hstar_report(const Polytope& p, long kmax);      // kmax < 0: dim + 2
Json check_report(const Polytope& p);
Json dual_report(const Polytope& p);
Json decompose_report(const Polytope& p);
Json semigroup_report(const Polytope& p, long kmax);  // kmax < 0: auto
Json entry_to_json(const CatalogEntry& e);
Json classification_to_json(const ClassificationResult& r, bool with_entries);
Json error_to_json(const std::string& code, const std::string& message);

// Canonical serialization: 2-space indent plus trailing newline.
std::string dump_json(const Json& j);

}  // namespace gorpoly
