#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "normfilt/report.hpp"

using namespace normfilt;
using nlohmann::json;

namespace {

// Validator for the subset of JSON Schema used by the shipped schema: type,
// enum, required, properties, additionalProperties and items.
bool matches_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const auto& x : t) ok = ok || matches_type(v, x.get<std::string>());
    } else {
      ok = matches_type(v, t.get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": wrong type");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (v.is_object()) {
    for (const auto& r : schema.value("required", json::array())) {
      if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
    }
    const json props = schema.value("properties", json::object());
    for (const auto& [k, x] : v.items()) {
      if (props.contains(k)) {
        validate(x, props[k], path + "." + k, errors);
      } else if (schema.value("additionalProperties", true) == false) {
        errors.push_back(path + ": unexpected " + k);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
  }
}

json load_schema() {
  std::ifstream in(NORMFILT_SOURCE_DIR "/schema/verdict-report.v1.json");
  REQUIRE(in.good());
  return json::parse(in);
}

const std::vector<TheoremReport>& reports() {
  static const std::vector<TheoremReport> r = [] {
    auto entries = load_corpus(NORMFILT_SOURCE_DIR "/corpus");
    for (auto& e : load_corpus(NORMFILT_SOURCE_DIR "/tests/fixtures")) entries.push_back(e);
    return run_corpus(entries);
  }();
  return r;
}

}  // namespace

TEST_CASE("verdict JSON validates against the versioned schema") {
  const json schema = load_schema();
  const json doc = json::parse(render_verdicts(reports(), Format::json));
  std::vector<std::string> errors;
  validate(doc, schema, "$", errors);
  for (const auto& e : errors) CAPTURE(e);
  CHECK(errors.empty());
  CHECK(doc["schema_version"] == kVerdictSchemaVersion);

  // The validator itself rejects a malformed document.
  json bad = doc;
  bad["entries"][0]["verdicts"][0]["conclusion"] = "probably";
  bad["entries"][0].erase("name");
  errors.clear();
  validate(bad, schema, "$", errors);
  CHECK(errors.size() == 2);
}

TEST_CASE("CSV columns are fixed") {
  const std::string csv = render_verdicts(reports(), Format::csv);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == kVerdictCsvHeader);
  const EntryAnalysis& a = *reports().front().analysis;
  std::istringstream table(render_table(a, Format::csv));
  std::getline(table, header);
  CHECK(header == "n,normal,adic,e_graded");
  std::istringstream coeffs(render_coeffs(a, Format::csv));
  std::getline(coeffs, header);
  CHECK(header == "filtration,index,coefficient");
  std::istringstream sally(render_sally(a, Format::csv));
  std::getline(sally, header);
  CHECK(header == "n,sally,normal_graded,e_graded,n_module");
}

TEST_CASE("emitters are deterministic and carry the quantities") {
  for (const auto& r : reports()) {
    if (!r.analysis) continue;
    const EntryAnalysis& a = *r.analysis;
    for (Format f : {Format::json, Format::csv, Format::md}) {
      CHECK(render_table(a, f) == render_table(a, f));
      CHECK(render_coeffs(a, f) == render_coeffs(a, f));
      CHECK(render_sally(a, f) == render_sally(a, f));
    }
  }
  const auto it = std::find_if(reports().begin(), reports().end(),
                               [](const TheoremReport& r) { return r.name == "(x^3, y^3, z^3) in k[x,y,z]"; });
  REQUIRE(it != reports().end());
  const json coeffs = json::parse(render_coeffs(*it->analysis, Format::json));
  CHECK(coeffs["normal"]["coefficients"] == json::array({27, 18, 1, 0}));
  CHECK(coeffs["g_s"] == 1);
  const json table = json::parse(render_table(*it->analysis, Format::json));
  CHECK(table["normal"][4] == 680);
  const json sally = json::parse(render_sally(*it->analysis, Format::json));
  CHECK(sally["reduction_number"] == 2);
  CHECK(sally["cohen_macaulay"] == "certified");
  const std::string md = render_verdicts({*it}, Format::md);
  CHECK(md.find("ē₁ = 18") != std::string::npos);
  CHECK(md.find("g_s = 1") != std::string::npos);
  CHECK(md.find("t(R) = 1") != std::string::npos);
  CHECK(md.find("r = 2") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("md") == Format::md);
  CHECK_THROWS(parse_format("xml"));
}
