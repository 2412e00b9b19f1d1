#include "normfilt/input.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "normfilt/error.hpp"
#include "normfilt/newton.hpp"
#include "normfilt/semigroup.hpp"
#include "normfilt/statements.hpp"

namespace normfilt {

std::vector<std::string> default_variables(RingKind kind, std::size_t count) {
  static const std::vector<std::string> poly{"x", "y", "z", "w"};
  static const std::vector<std::string> adjoined{"U", "V", "W"};
  const auto& base = kind == RingKind::polynomial ? poly : adjoined;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (count <= base.size()) {
      out.push_back(base[i]);
    } else {
      out.push_back((kind == RingKind::polynomial ? "x" : "u") + std::to_string(i + 1));
    }
  }
  return out;
}

std::vector<std::string> coordinate_names(const RingSpec& ring) {
  if (ring.kind == RingKind::polynomial) return ring.variables;
  std::vector<std::string> out{"t"};
  out.insert(out.end(), ring.variables.begin(), ring.variables.end());
  return out;
}

std::string format_monomial(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string describe_ring(const RingSpec& ring) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  if (ring.kind == RingKind::polynomial) return "k[" + join(ring.variables) + "]";
  std::vector<std::string> powers;
  for (Exponent g : ring.generators) powers.push_back("t^" + std::to_string(g));
  std::string s = "k[[" + join(powers) + "]]";
  if (ring.adjoin > 0) s += "[[" + join(ring.variables) + "]]";
  return s;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
  std::vector<Token> tokens;
};

std::vector<Token> split_tokens(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

template <class T>
T parse_number(std::string_view s, std::size_t line, std::size_t column, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'", line, column);
  }
  return v;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.emplace_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Parses a generator list: monomials separated by whitespace or commas. A
// monomial is 1, a product of name or name^k factors joined by '*', or a
// parenthesized exponent tuple.
std::vector<ExponentVector> parse_monomials(const std::string& text, std::size_t start, std::size_t line,
                                            const std::vector<std::string>& names) {
  std::vector<ExponentVector> out;
  const std::size_t d = names.size();
  std::size_t i = start;
  auto col = [&](std::size_t pos) { return pos + 1; };
  auto at_sep = [&](std::size_t pos) {
    return pos >= text.size() || std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',';
  };
  while (true) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::vector<Exponent> exps(d, 0);
    if (text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw ParseError("unterminated exponent tuple", line, col(i));
      std::vector<std::string> parts = split_list(std::string_view(text).substr(i + 1, close - i - 1));
      if (parts.size() != d) {
        throw ParseError("exponent tuple has " + std::to_string(parts.size()) + " entries, ring has " +
                             std::to_string(d) + " coordinates",
                         line, col(i));
      }
      std::size_t pos = i + 1;
      for (std::size_t k = 0; k < d; ++k) {
        std::string p = parts[k];
        std::size_t lead = p.find_first_not_of(" \t");
        std::size_t trail = p.find_last_not_of(" \t");
        std::string trimmed = lead == std::string::npos ? "" : p.substr(lead, trail - lead + 1);
        std::size_t c = pos + (lead == std::string::npos ? 0 : lead);
        exps[k] = parse_number<Exponent>(trimmed, line, col(c), "nonnegative exponent");
        if (exps[k] < 0) throw ParseError("negative exponent", line, col(c));
        pos += p.size() + 1;
      }
      i = close + 1;
      if (!at_sep(i)) throw ParseError("unexpected character after exponent tuple", line, col(i));
    } else if (text[i] == '1' && at_sep(i + 1)) {
      ++i;
    } else {
      while (true) {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        std::string name = text.substr(i, j - i);
        if (!is_identifier(name)) throw ParseError("expected a variable name", line, col(i));
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError("unknown variable '" + name + "'", line, col(i));
        Exponent power = 1;
        if (j < text.size() && text[j] == '^') {
          std::size_t k = j + 1;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          if (k == j + 1) {
            const std::string got = k < text.size() ? std::string(1, text[k]) : std::string("end of token");
            throw ParseError("expected exponent after '^', got '" + got + "'", line, col(k));
          }
          power = parse_number<Exponent>(std::string_view(text).substr(j + 1, k - j - 1), line, col(j + 1),
                                         "exponent after '^'");
          j = k;
        }
        auto& slot = exps[static_cast<std::size_t>(it - names.begin())];
        slot = checked_add(slot, power);
        i = j;
        if (i < text.size() && text[i] == '*') {
          ++i;
          continue;
        }
        if (!at_sep(i)) throw ParseError(std::string("unexpected character '") + text[i] + "'", line, col(i));
        break;
      }
    }
    out.emplace_back(std::move(exps));
  }
  return out;
}

[[noreturn]] void precondition_at(std::size_t line, const std::string& msg) {
  throw PreconditionError("line " + std::to_string(line) + ": " + msg);
}

void parse_ring(const Line& l, RingSpec& ring) {
  const auto& t = l.tokens;
  if (t.size() < 2) throw ParseError("expected 'polynomial' or 'semigroup'", l.number, l.text.size() + 1);
  std::map<std::string, const Token*> opts;
  for (std::size_t i = 2; i < t.size(); ++i) {
    std::size_t eq = t[i].text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", l.number, t[i].column);
    std::string key = t[i].text.substr(0, eq);
    if (opts.count(key)) throw ParseError("duplicate option '" + key + "'", l.number, t[i].column);
    opts[key] = &t[i];
  }
  auto value = [&](const std::string& key) {
    const Token* tok = opts.at(key);
    return std::make_pair(tok->text.substr(key.size() + 1), tok->column + key.size() + 1);
  };
  auto reject_unknown = [&](std::set<std::string> allowed) {
    for (const auto& [key, tok] : opts) {
      if (!allowed.count(key)) throw ParseError("unknown ring option '" + key + "'", l.number, tok->column);
    }
  };

  std::vector<std::string> vars;
  std::size_t vars_col = 0;
  if (opts.count("vars")) {
    auto [v, c] = value("vars");
    vars = split_list(v);
    vars_col = c;
    std::set<std::string> seen;
    for (const auto& name : vars) {
      if (!is_identifier(name)) throw ParseError("invalid variable name '" + name + "'", l.number, c);
      if (!seen.insert(name).second) throw ParseError("repeated variable name '" + name + "'", l.number, c);
    }
  }

  if (t[1].text == "polynomial") {
    reject_unknown({"dim", "vars"});
    ring.kind = RingKind::polynomial;
    if (!opts.count("dim")) throw ParseError("polynomial ring needs dim=<d>", l.number, t[1].column);
    auto [v, c] = value("dim");
    ring.dim = parse_number<std::size_t>(v, l.number, c, "positive dimension");
    if (ring.dim == 0) throw ParseError("dimension must be positive", l.number, c);
    if (ring.dim > kMaxNewtonDimension) {
      precondition_at(l.number, "dimension " + std::to_string(ring.dim) + " exceeds the supported maximum " +
                                    std::to_string(kMaxNewtonDimension));
    }
    if (vars.empty()) vars = default_variables(RingKind::polynomial, ring.dim);
    if (vars.size() != ring.dim) throw ParseError("vars must name exactly dim variables", l.number, vars_col);
  } else if (t[1].text == "semigroup") {
    reject_unknown({"gens", "adjoin", "vars"});
    ring.kind = RingKind::semigroup;
    if (!opts.count("gens")) throw ParseError("semigroup ring needs gens=<a,b,...>", l.number, t[1].column);
    auto [v, c] = value("gens");
    for (const auto& g : split_list(v)) ring.generators.push_back(parse_number<Exponent>(g, l.number, c, "generator"));
    if (opts.count("adjoin")) {
      auto [a, ac] = value("adjoin");
      ring.adjoin = parse_number<std::size_t>(a, l.number, ac, "number of adjoined variables");
    }
    if (ring.adjoin + 1 > kMaxNewtonDimension) {
      precondition_at(l.number, "dimension " + std::to_string(ring.adjoin + 1) + " exceeds the supported maximum " +
                                    std::to_string(kMaxNewtonDimension));
    }
    if (vars.empty()) vars = default_variables(RingKind::semigroup, ring.adjoin);
    if (vars.size() != ring.adjoin) throw ParseError("vars must name exactly adjoin variables", l.number, vars_col);
    if (std::find(vars.begin(), vars.end(), "t") != vars.end()) {
      throw ParseError("'t' is reserved for the semigroup ring", l.number, vars_col);
    }
    try {
      NumericalSemigroup check(ring.generators);
    } catch (const PreconditionError& e) {
      precondition_at(l.number, e.what());
    }
  } else {
    throw ParseError("unknown ring kind '" + t[1].text + "'", l.number, t[1].column);
  }
  ring.variables = std::move(vars);
}

// Ensures the generators define an m-primary ideal of the ring.
void validate_ideal(const RingSpec& ring, const std::vector<ExponentVector>& gens, std::size_t line,
                    const char* what) {
  for (const auto& g : gens) {
    if (g.total_degree() == 0) precondition_at(line, std::string(what) + " is the unit ideal");
  }
  if (ring.kind == RingKind::polynomial) {
    if (!minimal_generators(gens, ring.dim).is_m_primary()) precondition_at(line, std::string(what) + " is not m-primary");
    return;
  }
  try {
    ExtIdeal ideal(semigroup(ring.generators), ring.adjoin, gens);
    if (!ideal.is_m_primary()) precondition_at(line, std::string(what) + " is not m-primary");
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    precondition_at(line, msg);
  }
}

}  // namespace

InputSpec parse_input(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string raw(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      auto tokens = split_tokens(raw);
      if (!tokens.empty()) lines.push_back({number, raw, std::move(tokens)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  static const std::set<std::string> keys{"name", "ring", "ideal", "reduction", "nmax", "checks", "perturb"};
  std::map<std::string, const Line*> seen;
  std::vector<const Line*> perturb_lines;
  for (const auto& l : lines) {
    const std::string& key = l.tokens[0].text;
    if (!keys.count(key)) throw ParseError("unknown key '" + key + "'", l.number, l.tokens[0].column);
    if (key == "perturb") {
      perturb_lines.push_back(&l);
      continue;
    }
    if (seen.count(key)) throw ParseError("duplicate key '" + key + "'", l.number, l.tokens[0].column);
    seen[key] = &l;
  }

  InputSpec spec;
  auto rest_column = [](const Line& l) { return l.tokens.size() > 1 ? l.tokens[1].column : l.text.size() + 1; };
  auto expect_args = [&](const Line& l, std::size_t n) {
    if (l.tokens.size() != n + 1) {
      throw ParseError("'" + l.tokens[0].text + "' takes " + std::to_string(n) + " argument(s)", l.number, rest_column(l));
    }
  };

  if (seen.count("name")) {
    const Line& l = *seen["name"];
    if (l.tokens.size() < 2) throw ParseError("'name' needs a value", l.number, rest_column(l));
    spec.name = l.text.substr(l.tokens[1].column - 1);
    spec.name.erase(spec.name.find_last_not_of(" \t") + 1);
  }
  if (!seen.count("ring")) {
    throw ParseError("missing 'ring' line", lines.empty() ? 1 : lines.back().number, 1);
  }
  parse_ring(*seen["ring"], spec.ring);
  const auto names = coordinate_names(spec.ring);

  if (!seen.count("ideal")) throw ParseError("missing 'ideal' line", seen["ring"]->number, 1);
  {
    const Line& l = *seen["ideal"];
    if (l.tokens.size() == 2 && l.tokens[1].text == "maximal") {
      spec.ideal_is_maximal = true;
    } else {
      spec.ideal = parse_monomials(l.text, l.tokens[0].column - 1 + l.tokens[0].text.size(), l.number, names);
      if (spec.ideal.empty()) throw ParseError("ideal needs at least one generator", l.number, rest_column(l));
      validate_ideal(spec.ring, spec.ideal, l.number, "ideal");
    }
  }
  if (seen.count("reduction")) {
    const Line& l = *seen["reduction"];
    if (l.tokens.size() == 2 && l.tokens[1].text == "auto") {
      spec.reduction = std::nullopt;
    } else {
      auto gens = parse_monomials(l.text, l.tokens[0].column - 1 + l.tokens[0].text.size(), l.number, names);
      if (gens.empty()) throw ParseError("reduction needs generators or 'auto'", l.number, rest_column(l));
      validate_ideal(spec.ring, gens, l.number, "reduction");
      spec.reduction = std::move(gens);
    }
  }
  if (seen.count("nmax")) {
    const Line& l = *seen["nmax"];
    expect_args(l, 1);
    std::size_t n = parse_number<std::size_t>(l.tokens[1].text, l.number, l.tokens[1].column, "positive horizon");
    if (n == 0) throw ParseError("nmax must be positive", l.number, l.tokens[1].column);
    spec.nmax = n;
  }
  if (seen.count("checks")) {
    const Line& l = *seen["checks"];
    if (l.tokens.size() < 2) throw ParseError("'checks' needs 'all' or statement ids", l.number, rest_column(l));
    if (!(l.tokens.size() == 2 && l.tokens[1].text == "all")) {
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        for (const auto& id : split_list(l.tokens[i].text)) {
          if (id.empty()) continue;
          if (!is_statement_id(id)) throw ParseError("unknown statement id '" + id + "'", l.number, l.tokens[i].column);
          if (std::find(spec.checks.begin(), spec.checks.end(), id) == spec.checks.end()) spec.checks.push_back(id);
        }
      }
    }
  }
  static const std::set<std::string> tables{"normal", "adic", "sally", "e_graded"};
  for (const Line* lp : perturb_lines) {
    const Line& l = *lp;
    expect_args(l, 3);
    Perturbation p;
    p.table = l.tokens[1].text;
    if (!tables.count(p.table)) throw ParseError("unknown table '" + p.table + "'", l.number, l.tokens[1].column);
    p.degree = parse_number<std::size_t>(l.tokens[2].text, l.number, l.tokens[2].column, "degree");
    p.delta = parse_number<long>(l.tokens[3].text, l.number, l.tokens[3].column, "integer delta");
    spec.perturbations.push_back(p);
  }
  return spec;
}

InputSpec read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string print_input(const InputSpec& spec) {
  std::ostringstream out;
  auto join = [](const auto& v, auto fmt) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
    return s;
  };
  auto ident = [](const std::string& s) { return s; };
  if (!spec.name.empty()) out << "name " << spec.name << "\n";
  const auto& r = spec.ring;
  if (r.kind == RingKind::polynomial) {
    out << "ring polynomial dim=" << r.dim << " vars=" << join(r.variables, ident) << "\n";
  } else {
    out << "ring semigroup gens=" << join(r.generators, [](Exponent g) { return std::to_string(g); });
    if (r.adjoin > 0) out << " adjoin=" << r.adjoin << " vars=" << join(r.variables, ident);
    out << "\n";
  }
  const auto names = coordinate_names(r);
  auto monomials = [&](const std::vector<ExponentVector>& gens) {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? " " : "") + format_monomial(gens[i], names);
    return s;
  };
  out << "ideal " << (spec.ideal_is_maximal ? std::string("maximal") : monomials(spec.ideal)) << "\n";
  out << "reduction " << (spec.reduction ? monomials(*spec.reduction) : std::string("auto")) << "\n";
  if (spec.nmax) out << "nmax " << *spec.nmax << "\n";
  out << "checks " << (spec.checks.empty() ? std::string("all") : join(spec.checks, ident)) << "\n";
  for (const auto& p : spec.perturbations) out << "perturb " << p.table << " " << p.degree << " " << p.delta << "\n";
  return out.str();
}

}  // namespace normfilt
