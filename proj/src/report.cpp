#include "normfilt/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace normfilt {

namespace {

using json = nlohmann::ordered_json;

json number(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return to_string(v);
}

json numbers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

std::vector<std::string> formatted(const EntryAnalysis& a, const std::vector<ExponentVector>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(a.format(g));
  return out;
}

std::string joined(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

json header(const EntryAnalysis& a) {
  json j;
  j["name"] = a.name;
  j["ring"] = describe_ring(a.ring);
  j["d"] = a.d;
  j["nmax"] = a.nmax;
  j["ideal"] = formatted(a, a.ideal);
  j["closure"] = formatted(a, a.closure);
  j["reduction"] = a.has_reduction ? json(formatted(a, a.reduction)) : json(nullptr);
  return j;
}

std::string md_header(const EntryAnalysis& a) {
  std::ostringstream out;
  out << "## " << (a.name.empty() ? describe_ring(a.ring) : a.name) << "\n\n";
  out << "- ring: " << describe_ring(a.ring) << ", d = " << a.d << ", nmax = " << a.nmax << "\n";
  out << "- I = (" << joined(formatted(a, a.ideal), ", ") << ")\n";
  out << "- Ī = (" << joined(formatted(a, a.closure), ", ") << ")\n";
  if (a.has_reduction) {
    out << "- J = (" << joined(formatted(a, a.reduction), ", ") << ")\n";
  } else {
    out << "- J: no d-generated monomial minimal reduction\n";
  }
  out << "\n";
  return out.str();
}

json fit_json(const CoefficientFit& f) {
  json j;
  if (f.ok()) {
    j["coefficients"] = numbers(f.fit->e);
    j["stable_from"] = f.fit->stable_from;
  } else {
    j["coefficients"] = nullptr;
    j["error"] = f.error;
  }
  return j;
}

std::string cm_string(CMStatus s) { return to_string(s); }

std::string rn_string(const ReductionNumber& rn) { return rn.r ? std::to_string(*rn.r) : "none"; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or md)");
}

std::string render_table(const EntryAnalysis& a, Format f) {
  const std::size_t N = a.nmax;
  if (f == Format::json) {
    json j = header(a);
    j["normal"] = numbers(a.normal);
    j["adic"] = numbers(a.adic);
    j["e_graded"] = a.has_reduction ? numbers(a.e_graded) : json(nullptr);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "n,normal,adic,e_graded\n";
    for (std::size_t n = 0; n <= N; ++n) {
      out << n << "," << a.normal[n] << "," << a.adic[n] << "," << (a.has_reduction ? to_string(a.e_graded[n]) : "")
          << "\n";
    }
    return out.str();
  }
  out << md_header(a);
  out << "| n | λ(R/Ī^{n+1}) | λ(R/I^{n+1}) | λ(Ē_n/Ē_{n+1}) |\n|---|---|---|---|\n";
  for (std::size_t n = 0; n <= N; ++n) {
    out << "| " << n << " | " << a.normal[n] << " | " << a.adic[n] << " | "
        << (a.has_reduction ? to_string(a.e_graded[n]) : "-") << " |\n";
  }
  return out.str();
}

std::string render_coeffs(const EntryAnalysis& a, Format f) {
  const auto gs = a.sectional_genus();
  if (f == Format::json) {
    json j = header(a);
    j["e0"] = number(a.e0);
    j["normal"] = fit_json(a.normal_fit);
    j["adic"] = fit_json(a.adic_fit);
    j["g_s"] = gs ? number(*gs) : json(nullptr);
    j["length_R_mod_Ibar"] = number(a.colength_closure);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "filtration,index,coefficient\n";
    const std::vector<std::pair<std::string, const CoefficientFit*>> fits{{"normal", &a.normal_fit},
                                                                          {"adic", &a.adic_fit}};
    for (const auto& [name, fit] : fits) {
      if (!fit->ok()) continue;
      for (std::size_t i = 0; i < fit->fit->e.size(); ++i) out << name << "," << i << "," << fit->fit->e[i] << "\n";
    }
    if (gs) out << "g_s,0," << *gs << "\n";
    return out.str();
  }
  out << md_header(a);
  out << "| i | ē_i | e_i |\n|---|---|---|\n";
  for (std::size_t i = 0; i <= a.d; ++i) {
    auto show = [](std::optional<Integer> v) { return v ? to_string(*v) : std::string("-"); };
    out << "| " << i << " | " << show(a.normal_fit.at(i)) << " | " << show(a.adic_fit.at(i)) << " |\n";
  }
  out << "\n- e₀ (Newton polyhedron) = " << a.e0 << "\n";
  out << "- λ(R/Ī) = " << a.colength_closure << "\n";
  out << "- g_s = " << (gs ? to_string(*gs) : "-") << "\n";
  if (!a.normal_fit.ok()) out << "- normal fit: " << a.normal_fit.error << "\n";
  if (!a.adic_fit.ok()) out << "- adic fit: " << a.adic_fit.error << "\n";
  return out.str();
}

std::string render_sally(const EntryAnalysis& a, Format f) {
  const std::size_t N = a.nmax;
  const auto gs = a.sectional_genus();
  if (f == Format::json) {
    json j = header(a);
    if (!a.has_reduction) {
      j["error"] = "no d-generated monomial minimal reduction";
      return j.dump(2) + "\n";
    }
    j["sally"] = numbers(a.sally);
    j["normal_graded"] = numbers(a.normal_graded);
    j["e_graded"] = numbers(a.e_graded);
    j["n_module"] = numbers(a.n_module);
    j["sally_fit"] = fit_json(a.sally_fit);
    j["g_s"] = gs ? number(*gs) : json(nullptr);
    j["length_Ibar_mod_J"] = number(*a.closure_over_reduction);
    j["reduction_number"] = a.normal_rn.r ? json(*a.normal_rn.r) : json(nullptr);
    j["reduction_number_checked_through"] = a.normal_rn.checked_through;
    j["cohen_macaulay"] = cm_string(a.normal_cm);
    if (a.vv_normal.failure) {
      j["valabrega_valla_failure"] = {{"degree", *a.vv_normal.failure},
                                      {"element", a.vv_normal.witness ? a.format(*a.vv_normal.witness) : ""}};
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (!a.has_reduction) {
    if (f == Format::csv) return "n,sally,normal_graded,e_graded,n_module\n";
    return md_header(a) + "No Sally module: J is not a minimal reduction.\n";
  }
  if (f == Format::csv) {
    out << "n,sally,normal_graded,e_graded,n_module\n";
    for (std::size_t n = 0; n <= N; ++n) {
      out << n << "," << a.sally[n] << "," << a.normal_graded[n] << "," << a.e_graded[n] << "," << a.n_module[n] << "\n";
    }
    return out.str();
  }
  out << md_header(a);
  out << "| n | λ(S̄_n) | λ(𝒢̄_n) | λ(Ē_n/Ē_{n+1}) | λ(N_n) |\n|---|---|---|---|---|\n";
  for (std::size_t n = 0; n <= N; ++n) {
    out << "| " << n << " | " << a.sally[n] << " | " << a.normal_graded[n] << " | " << a.e_graded[n] << " | "
        << a.n_module[n] << " |\n";
  }
  out << "\n";
  if (a.sally_fit.ok()) {
    for (std::size_t i = 0; i < a.sally_fit.fit->e.size(); ++i) out << "- s̄" << i << " = " << a.sally_fit.fit->e[i] << "\n";
  } else {
    out << "- Sally fit: " << a.sally_fit.error << "\n";
  }
  out << "- g_s = " << (gs ? to_string(*gs) : "-") << "\n";
  out << "- r = " << rn_string(a.normal_rn) << " (checked through n = " << a.normal_rn.checked_through << ")\n";
  out << "- 𝒢̄ Cohen-Macaulay: " << cm_string(a.normal_cm) << "\n";
  return out.str();
}

std::string render_verdicts(const std::vector<TheoremReport>& reports, Format f) {
  if (f == Format::json) {
    json root;
    root["schema_version"] = kVerdictSchemaVersion;
    json entries = json::array();
    for (const auto& r : reports) {
      json e;
      e["source"] = r.source;
      e["name"] = r.name;
      if (!r.error.empty()) {
        e["error"] = r.error;
        e["error_code"] = r.error_code;
      }
      if (r.type) {
        json methods = json::object();
        for (const auto& [m, v] : r.type->methods) methods[m] = number(v);
        e["ring_type"] = {{"t", r.type->t}, {"method", r.type->method}, {"methods", methods}, {"agree", r.type->agree}};
      }
      json verdicts = json::array();
      for (const auto& v : r.verdicts) {
        json jv;
        jv["statement_id"] = v.statement_id;
        jv["hypotheses_met"] = v.hypotheses_met;
        jv["conclusion"] = to_string(v.conclusion);
        jv["equality_case"] = v.equality_case;
        json ws = json::array();
        for (const auto& w : v.witnesses) {
          json jw;
          jw["degree"] = w.degree ? json(*w.degree) : json(nullptr);
          jw["element"] = w.element;
          jw["note"] = w.note;
          ws.push_back(jw);
        }
        jv["witnesses"] = ws;
        jv["numbers"] = v.numbers;
        jv["detail"] = v.detail;
        verdicts.push_back(jv);
      }
      e["verdicts"] = verdicts;
      entries.push_back(e);
    }
    root["entries"] = entries;
    return root.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << kVerdictCsvHeader << "\n";
    for (const auto& r : reports) {
      if (!r.error.empty()) {
        out << csv_field(r.source) << ",,,error,,,," << csv_field(r.error) << "\n";
        continue;
      }
      for (const auto& v : r.verdicts) {
        std::string degree, element;
        if (!v.witnesses.empty()) {
          const auto& w = v.witnesses.front();
          if (w.degree) degree = std::to_string(*w.degree);
          std::vector<std::string> parts;
          for (auto x : w.element) parts.push_back(std::to_string(x));
          element = joined(parts, " ");
        }
        out << csv_field(r.source) << "," << v.statement_id << "," << (v.hypotheses_met ? "true" : "false") << ","
            << to_string(v.conclusion) << "," << (v.equality_case ? "true" : "false") << "," << degree << ","
            << element << "," << csv_field(v.detail) << "\n";
      }
    }
    return out.str();
  }
  for (const auto& r : reports) {
    out << "## " << (r.name.empty() ? r.source : r.name) << "\n\n";
    if (!r.error.empty()) {
      out << "error (exit code " << r.error_code << "): " << r.error << "\n\n";
      continue;
    }
    const auto& a = *r.analysis;
    const auto gs = a.sectional_genus();
    auto show = [](std::optional<Integer> v) { return v ? to_string(*v) : std::string("-"); };
    out << "- e₀ = " << a.e0 << ", ē₁ = " << show(a.normal_fit.at(1)) << ", ē₂ = " << show(a.normal_fit.at(2))
        << ", ē₃ = " << show(a.normal_fit.at(3)) << "\n";
    out << "- g_s = " << (gs ? to_string(*gs) : "-") << ", t(R) = " << a.type << ", r = " << rn_string(a.normal_rn)
        << "\n\n";
    out << "| statement | conclusion | equality | witness | detail |\n|---|---|---|---|---|\n";
    for (const auto& v : r.verdicts) {
      std::string witness;
      if (!v.witnesses.empty()) {
        const auto& w = v.witnesses.front();
        witness = (w.degree ? "n = " + std::to_string(*w.degree) + ": " : "") + w.note;
      }
      out << "| " << v.statement_id << " | " << to_string(v.conclusion) << " | " << (v.equality_case ? "yes" : "no")
          << " | " << md_cell(witness) << " | " << md_cell(v.detail) << " |\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace normfilt
